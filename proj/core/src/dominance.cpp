#include "impart/dominance.hpp"

#include "impart/directions.hpp"
#include "impart/impurity.hpp"

namespace impart {

SolveResult solve_dominance(const InstanceSpec& inst) {
  const int k = inst.dim();
  const int L = inst.num_buckets;

  PartitionAssignment p;
  p.bucket_of.reserve(static_cast<std::size_t>(inst.n()));

  if (k <= L) {
    for (const auto& v : inst.vectors) {
      p.bucket_of.push_back(dominant_component(v));
    }
  } else {
    const CanonicalDirections canon = canonical_directions(inst.total(), L);
    for (const auto& v : inst.vectors) {
      p.bucket_of.push_back(dominant_component(collapse(v, canon.directions)));
    }
  }
  return SolveResult{p, partition_impurity(inst, p)};
}

}  // namespace impart
