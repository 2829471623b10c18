#ifndef IMPART_TWO_DIM_HPP
#define IMPART_TWO_DIM_HPP

#include <cstdint>
#include <span>

#include "impart/types.hpp"

namespace impart {

/// A 2-dimensional point in the doubled integer scale used by the two-class
/// projection (see chi2c).
struct TwoVector {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const TwoVector&) const = default;
};

/// Two-class projection of a vector, kept integral by a uniform x2 scaling:
///   (2*linf, 2*(l1-linf))  when linf >= l1/2,
///   (l1, l1)               otherwise.
/// By homogeneity the impurity of the scaled image is exactly twice the
/// unscaled projection's, so 2-impurity values are reported halved.
/// Throws std::invalid_argument on a zero vector.
TwoVector chi2c(const IntVector& v);

/// Exact minimum-impurity partition of 2-dimensional vectors into at most
/// `num_buckets` buckets. Vectors are sorted by a/(a+b) ascending (compared
/// by exact cross multiplication, ties by input position) and an O(n^2 L)
/// dynamic program optimizes over contiguous segments of that order, which
/// is optimal for 2-dimensional instances. Bucket ids are segment ranks in
/// sort order; `impurity` is the exact objective of the returned partition.
SolveResult solve_2d_optimal(std::span<const TwoVector> vectors, int num_buckets, Measure m);

/// Result of the two-class subroutine on a pure set: the induced partition
/// of the original vectors, its 2-impurity (halved scaled value) and its
/// true impurity in the original dimension.
struct A2cResult {
  PartitionAssignment assignment;
  double i2 = 0.0;
  double impurity = 0.0;
};

/// Projects every vector through chi2c, orders by ratio (ascending, pure
/// vectors last, ties by input position), solves the 2-dimensional instance
/// optimally with `num_buckets` buckets and lifts the partition back to the
/// inputs. Intended for i-pure sets but total on any non-null input.
A2cResult a2c(std::span<const IntVector> pure_set, int num_buckets, Measure m);

}  // namespace impart

#endif  // IMPART_TWO_DIM_HPP
