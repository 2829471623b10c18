#ifndef IMPART_DIRECTIONS_HPP
#define IMPART_DIRECTIONS_HPP

#include <vector>

#include "impart/types.hpp"

namespace impart {

/// A family of L pairwise-disjoint 0/1 masks over the coordinates [0, k)
/// whose union is all of [0, k). Masks are stored as sorted lists of
/// coordinate indices; empty masks are allowed.
struct DirectionSet {
  std::vector<std::vector<int>> masks;

  int size() const { return static_cast<int>(masks.size()); }

  /// Checks disjointness and exact cover of [0, dim).
  bool valid_for(int dim) const;

  /// Identity directions for dim <= L: one singleton mask per coordinate,
  /// padded with empty masks up to L.
  static DirectionSet identity(int dim, int num_masks);
};

/// collapse_D(v): component j is the dot product of v with mask j. Preserves
/// the l1 norm exactly. Throws std::invalid_argument on dimension mismatch.
IntVector collapse(const IntVector& v, const DirectionSet& d);

/// Canonical directions for an aggregate u: the L-1 largest components of u
/// (ties broken toward the smaller index) become singleton masks, everything
/// else is aggregated into the last mask. For k <= L this is the identity
/// family. `order` is the descending component permutation used, so collapsed
/// coordinates can be mapped back to original component indices.
struct CanonicalDirections {
  DirectionSet directions;
  std::vector<int> order;
};

CanonicalDirections canonical_directions(const AggregateVector& u, int num_masks);

/// Sum over masks of the impurity of u restricted to the mask.
double directions_cost(const AggregateVector& u, const DirectionSet& d, Measure m);

/// Instance obtained by collapsing every vector of inst under d. The result
/// keeps inst's L and measure; its column map composes d's mask structure
/// with nothing (collapsed coordinates are synthetic).
InstanceSpec collapse_instance(const InstanceSpec& inst, const DirectionSet& d);

/// Reinterpret an assignment computed on a collapsed instance against the
/// original instance. The collapse preserves vector order, so this is the
/// identity on bucket ids; only the length is checked.
PartitionAssignment lift_partition(const PartitionAssignment& p_low, const InstanceSpec& original);

}  // namespace impart

#endif  // IMPART_DIRECTIONS_HPP
