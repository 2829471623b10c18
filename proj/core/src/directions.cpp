#include "impart/directions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "impart/impurity.hpp"

namespace impart {

bool DirectionSet::valid_for(int dim) const {
  std::vector<int> seen(static_cast<std::size_t>(dim), 0);
  for (const auto& mask : masks) {
    for (int j : mask) {
      if (j < 0 || j >= dim) return false;
      if (seen[static_cast<std::size_t>(j)]++) return false;
    }
  }
  for (int c : seen) {
    if (c != 1) return false;
  }
  return true;
}

DirectionSet DirectionSet::identity(int dim, int num_masks) {
  DirectionSet d;
  d.masks.resize(static_cast<std::size_t>(std::max(dim, num_masks)));
  for (int j = 0; j < dim; ++j) d.masks[static_cast<std::size_t>(j)] = {j};
  d.masks.resize(static_cast<std::size_t>(num_masks));
  return d;
}

IntVector collapse(const IntVector& v, const DirectionSet& d) {
  IntVector out;
  out.reserve(d.masks.size());
  for (const auto& mask : d.masks) {
    std::int64_t dot = 0;
    for (int j : mask) {
      if (j < 0 || j >= static_cast<int>(v.size())) {
        throw std::invalid_argument("direction mask index out of range for vector dimension");
      }
      dot += v[static_cast<std::size_t>(j)];
    }
    out.push_back(dot);
  }
  return out;
}

CanonicalDirections canonical_directions(const AggregateVector& u, int num_masks) {
  const int k = u.dim();
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return u.sums[static_cast<std::size_t>(a)] > u.sums[static_cast<std::size_t>(b)];
  });

  CanonicalDirections out;
  out.order = order;
  if (k <= num_masks) {
    out.directions = DirectionSet::identity(k, num_masks);
    return out;
  }
  DirectionSet d;
  d.masks.resize(static_cast<std::size_t>(num_masks));
  for (int r = 0; r + 1 < num_masks; ++r) {
    d.masks[static_cast<std::size_t>(r)] = {order[static_cast<std::size_t>(r)]};
  }
  std::vector<int>& tail = d.masks.back();
  tail.assign(order.begin() + (num_masks - 1), order.end());
  std::sort(tail.begin(), tail.end());
  out.directions = std::move(d);
  return out;
}

double directions_cost(const AggregateVector& u, const DirectionSet& d, Measure m) {
  double total = 0.0;
  for (const auto& mask : d.masks) {
    AggregateVector restricted = AggregateVector::zero(static_cast<int>(mask.size()));
    std::int64_t l1 = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      const std::int64_t x = u.sums[static_cast<std::size_t>(mask[i])];
      restricted.sums[i] = x;
      l1 += x;
      if (x > restricted.linf) {
        restricted.linf = x;
        restricted.argmax = static_cast<int>(i);
      }
    }
    restricted.l1 = l1;
    total += impurity(restricted, m);
  }
  return total;
}

InstanceSpec collapse_instance(const InstanceSpec& inst, const DirectionSet& d) {
  if (!d.valid_for(inst.dim())) {
    throw std::invalid_argument("direction set is not valid for the instance dimension");
  }
  InstanceSpec out;
  out.num_buckets = inst.num_buckets;
  out.measure = inst.measure;
  out.original_dim = d.size();
  out.column_map.resize(static_cast<std::size_t>(d.size()));
  std::iota(out.column_map.begin(), out.column_map.end(), 0);
  out.vectors.reserve(inst.vectors.size());
  for (const auto& v : inst.vectors) out.vectors.push_back(collapse(v, d));
  return out;
}

PartitionAssignment lift_partition(const PartitionAssignment& p_low, const InstanceSpec& original) {
  if (p_low.size() != original.n()) {
    throw InvalidPartitionError("collapsed assignment length does not match the original instance");
  }
  return p_low;
}

}  // namespace impart
