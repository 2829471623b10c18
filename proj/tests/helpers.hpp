#ifndef IMPART_TESTS_HELPERS_HPP
#define IMPART_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "impart/directions.hpp"
#include "impart/generators.hpp"
#include "impart/types.hpp"

namespace impart::testing {

/// Random instance with n in [1, n_max], k in [1, k_max], L in [2, L_max],
/// coordinates in [0, coord_max]; vectors are non-null and every column is
/// nonzero by construction.
inline InstanceSpec random_instance(Rng& rng, int n_max, int k_max, int L_max,
                                    std::int64_t coord_max, Measure m, int n_min = 1,
                                    int k_min = 1) {
  GeneratorParams p;
  p.n = static_cast<int>(rng.range(n_min, n_max));
  p.k = static_cast<int>(rng.range(k_min, k_max));
  p.coord_max = coord_max;
  const int L = static_cast<int>(rng.range(2, L_max));
  return generate_instance("random", p, L, m, rng.next());
}

/// Random non-null aggregate with entries in [0, coord_max].
inline AggregateVector random_aggregate(Rng& rng, int k_max, std::int64_t coord_max,
                                        int k_min = 1) {
  const int k = static_cast<int>(rng.range(k_min, k_max));
  IntVector v(static_cast<std::size_t>(k), 0);
  bool any = false;
  while (!any) {
    for (auto& x : v) {
      x = rng.range(0, coord_max);
      any = any || x > 0;
    }
  }
  return AggregateVector::of(v);
}

/// Uniformly random family of num_masks orthogonal covering masks: every
/// coordinate gets a uniform label.
inline DirectionSet random_directions(Rng& rng, int dim, int num_masks) {
  DirectionSet d;
  d.masks.resize(static_cast<std::size_t>(num_masks));
  for (int j = 0; j < dim; ++j) {
    d.masks[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(num_masks)))].push_back(j);
  }
  return d;
}

/// Restriction of u to one mask, as a dense vector of the mask's entries.
inline IntVector restrict_to(const AggregateVector& u, const std::vector<int>& mask) {
  IntVector out;
  out.reserve(mask.size());
  for (int j : mask) out.push_back(u.sums[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace impart::testing

#endif  // IMPART_TESTS_HELPERS_HPP
