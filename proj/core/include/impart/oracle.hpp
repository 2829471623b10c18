#ifndef IMPART_ORACLE_HPP
#define IMPART_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "impart/directions.hpp"
#include "impart/types.hpp"

namespace impart {

/// Default cap on exhaustive enumeration sizes. The CLI lets the environment
/// variable IMPURITY_MAX_ORACLE override it.
inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Number of set partitions of n elements into at most max_blocks blocks
/// (sum of Stirling numbers of the second kind), saturating at 2^64-1.
std::uint64_t count_set_partitions(int n, int max_blocks);

/// Exact optimum by enumerating every set partition of the vectors into at
/// most L blocks via restricted-growth strings; the first partition
/// attaining the minimum is returned. Throws TooLargeError (carrying the
/// computed count) when the enumeration exceeds the cap.
SolveResult brute_force_opt(const InstanceSpec& inst, std::uint64_t cap = kDefaultOracleCap);

struct DirectionsResult {
  DirectionSet directions;
  double cost = 0.0;
};

/// Exact minimizer of sum_d I(u o d) over all families of L pairwise
/// orthogonal 0/1 masks covering [k]. Enumerates restricted-growth strings
/// over components, so each unordered family is visited once. Throws
/// TooLargeError when L^k exceeds the cap.
DirectionsResult brute_force_directions(const AggregateVector& u, int num_masks, Measure m,
                                        std::uint64_t cap = kDefaultOracleCap);

/// The balanced-split reduction: each input number u_i becomes the scaled
/// canonical vector u_i * e_i of an Entropy instance with L buckets. A
/// partition reaches `threshold` = I(u) - ||u||_1 * log2(L) exactly when the
/// numbers admit a perfectly balanced L-way split. Size or range violations
/// of the classic 3-partition form (k = 3L, T/4 < u_i < T/3) produce
/// warnings, not errors, so small demonstration inputs stay usable.
struct ReductionResult {
  InstanceSpec instance;
  double threshold = 0.0;
  std::vector<std::string> warnings;
};

ReductionResult reduce_3partition(const std::vector<std::int64_t>& numbers, int num_buckets);

}  // namespace impart

#endif  // IMPART_ORACLE_HPP
