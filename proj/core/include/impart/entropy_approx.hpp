#ifndef IMPART_ENTROPY_APPROX_HPP
#define IMPART_ENTROPY_APPROX_HPP

#include <cstdint>
#include <vector>

#include "impart/types.hpp"

namespace impart {

/// Vectors grouped by dominant component. members[j] lists the indices of
/// j-dominant vectors sorted by ratio ascending, pure vectors last, ties by
/// input index. Every vector appears in exactly one class.
struct DominanceClasses {
  std::vector<std::vector<int>> members;

  static DominanceClasses build(const InstanceSpec& inst);

  int num_nonempty() const;
};

/// Diagnostics from the state DP, exposed so tests can check dedup and
/// pruning behaviour.
struct DpStats {
  /// True when some pruning cell held more than one candidate, i.e. pruning
  /// actually merged distinct states somewhere.
  bool cell_collision = false;
  std::uint64_t states_generated = 0;
  std::uint64_t peak_states = 0;
  /// Per DP level, the retained (buckets, side_mass) keys; used to verify
  /// that deduplication leaves at most one state per key.
  std::vector<std::vector<std::pair<int, std::int64_t>>> level_keys;
};

/// Best all-pure-buckets partition by 2-impurity: a DP over dominance
/// classes allocating buckets to each class through the two-class
/// subroutine. Returns the partition and its true impurity. Entropy only.
/// Throws InfeasibleError when there are more nonempty classes than buckets.
SolveResult solve_pure_only(const InstanceSpec& inst);

/// Pseudo-polynomial search over partitions with at most one mixed bucket:
/// for every dominant component w and every count of w-dominant vectors in
/// the special bucket, a DP over (buckets used, side mass) states folds the
/// remaining classes, keeping the minimum pure-bucket 2-impurity per state.
/// The best candidate by true impurity (also compared against
/// solve_pure_only) is returned. Entropy only.
SolveResult solve_pseudo(const InstanceSpec& inst, DpStats* stats = nullptr);

/// solve_pseudo with side masses capped at t and, after each class fold,
/// only the best state kept per (buckets, subinterval-of-side-mass) cell,
/// the side-mass range [0, t] being split into 4k cells. Entropy only.
SolveResult solve_pruned(const InstanceSpec& inst, std::int64_t t, DpStats* stats = nullptr);

/// Polynomial-time driver: for k > L first collapses the instance under the
/// canonical directions and lifts the result back; at the core runs
/// solve_pruned for t = 2, 4, ..., 2^ceil(log2(C)) together with
/// solve_pure_only and keeps the best partition found. Entropy only.
SolveResult solve_apoly(const InstanceSpec& inst);

}  // namespace impart

#endif  // IMPART_ENTROPY_APPROX_HPP
