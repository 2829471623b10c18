#ifndef IMPART_IMPURITY_HPP
#define IMPART_IMPURITY_HPP

#include <cstdint>

#include "impart/types.hpp"

namespace impart {

/// The generating concave function f of the measure, on [0, 1]:
/// Gini f(x) = x(1-x), Entropy f(x) = -x log2 x, with f(0) = f(1) = 0 exact.
double generator_f(Measure m, double x);

/// Impurity of an aggregate: ||u||_1 * sum_i f(u_i / ||u||_1), evaluated in
/// double from the exact integer sums. Zero aggregates and aggregates with a
/// single nonzero coordinate have impurity exactly 0.
double impurity(const AggregateVector& u, Measure m);

double impurity(const IntVector& v, Measure m);

/// Sum of bucket impurities. Aggregation is exact integer arithmetic; only
/// the final evaluation is floating point. Throws InvalidPartitionError on a
/// length mismatch or an out-of-range bucket id.
double partition_impurity(const InstanceSpec& inst, const PartitionAssignment& p);

/// Per-bucket impurities, length L (empty buckets report 0).
std::vector<double> bucket_impurities(const InstanceSpec& inst, const PartitionAssignment& p);

/// ratio(u) = ||u||_1 / (||u||_1 - ||u||_inf); +infinity for pure vectors
/// (zero denominator). Throws std::invalid_argument on a zero vector.
double ratio_of(const AggregateVector& u);

/// Exact three-way ratio comparison from the integer statistics, so sorts by
/// ratio are deterministic: returns true iff l1a/(l1a-linfa) < l1b/(l1b-linfb)
/// with pure vectors (zero denominator) ordered after every impure one.
bool ratio_less(std::int64_t l1_a, std::int64_t linf_a, std::int64_t l1_b, std::int64_t linf_b);

/// Smallest index attaining the maximum component. Throws
/// std::invalid_argument on a zero vector.
int dominant_component(const AggregateVector& u);
int dominant_component(const IntVector& v);

/// Comparison tolerance convention used across the project: relative 1e-9
/// with absolute floor 1e-12.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline bool approx_le(double a, double b, double scale) {
  double slack = kRelTol * (scale < 0 ? -scale : scale) + kAbsTol;
  return a <= b + slack;
}

inline bool approx_eq(double a, double b, double scale) {
  return approx_le(a, b, scale) && approx_le(b, a, scale);
}

}  // namespace impart

#endif  // IMPART_IMPURITY_HPP
