#include <algorithm>
#include <stdexcept>

#include "impart/types.hpp"

namespace impart {

std::string measure_name(Measure m) {
  return m == Measure::Gini ? "gini" : "entropy";
}

Measure measure_from_name(const std::string& name) {
  if (name == "gini") return Measure::Gini;
  if (name == "entropy") return Measure::Entropy;
  throw std::invalid_argument("unknown measure '" + name + "' (expected 'gini' or 'entropy')");
}

AggregateVector AggregateVector::zero(int dim) {
  AggregateVector a;
  a.sums.assign(static_cast<std::size_t>(dim), 0);
  return a;
}

AggregateVector AggregateVector::of(const IntVector& v) {
  AggregateVector a = zero(static_cast<int>(v.size()));
  a.add(v);
  return a;
}

void AggregateVector::add(const IntVector& v) {
  if (v.size() != sums.size()) {
    throw std::invalid_argument("aggregate/vector dimension mismatch");
  }
  l1 = 0;
  linf = 0;
  argmax = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sums[i] += v[i];
    l1 += sums[i];
    if (sums[i] > linf) {
      linf = sums[i];
      argmax = static_cast<int>(i);
    }
  }
}

std::int64_t InstanceSpec::total_mass() const {
  std::int64_t c = 0;
  for (const auto& v : vectors) {
    for (std::int64_t x : v) c += x;
  }
  return c;
}

AggregateVector InstanceSpec::total() const {
  AggregateVector a = AggregateVector::zero(dim());
  for (const auto& v : vectors) a.add(v);
  return a;
}

InstanceSpec make_instance(std::vector<IntVector> vectors, int num_buckets, Measure measure) {
  if (vectors.empty()) {
    throw InvalidInstanceError("instance must contain at least one vector");
  }
  if (num_buckets < 2) {
    throw InvalidInstanceError("bucket count L must be at least 2, got " +
                               std::to_string(num_buckets));
  }
  const std::size_t k = vectors.front().size();
  if (k == 0) {
    throw InvalidInstanceError("vectors must have dimension at least 1");
  }
  std::int64_t max_coord = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != k) {
      throw InvalidInstanceError("ragged input: vector " + std::to_string(i) + " has dimension " +
                                 std::to_string(vectors[i].size()) + ", expected " +
                                 std::to_string(k));
    }
    bool any = false;
    for (std::int64_t x : vectors[i]) {
      if (x < 0) {
        throw InvalidInstanceError("negative entry in vector " + std::to_string(i));
      }
      if (x > kMaxCoordinate) {
        throw InvalidInstanceError("coordinate " + std::to_string(x) + " in vector " +
                                   std::to_string(i) + " exceeds the cap 2^40");
      }
      max_coord = std::max(max_coord, x);
      any = any || x > 0;
    }
    if (!any) {
      throw InvalidInstanceError("vector " + std::to_string(i) + " is null (all coordinates zero)");
    }
  }
  // Overflow guard on exact aggregation: n * k * max_coord <= 2^62.
  const __int128 bound = static_cast<__int128>(vectors.size()) * static_cast<__int128>(k) *
                         static_cast<__int128>(max_coord);
  if (bound > static_cast<__int128>(kMaxTotalMass)) {
    throw InvalidInstanceError("instance too heavy: n*k*max_coordinate exceeds 2^62");
  }

  // Strip all-zero columns, recording the map back to input coordinates.
  std::vector<int> keep;
  for (std::size_t j = 0; j < k; ++j) {
    bool nonzero = false;
    for (const auto& v : vectors) nonzero = nonzero || v[j] != 0;
    if (nonzero) keep.push_back(static_cast<int>(j));
  }
  InstanceSpec inst;
  inst.num_buckets = num_buckets;
  inst.measure = measure;
  inst.original_dim = static_cast<int>(k);
  inst.column_map = keep;
  if (keep.size() == k) {
    inst.vectors = std::move(vectors);
  } else {
    inst.vectors.reserve(vectors.size());
    for (const auto& v : vectors) {
      IntVector w;
      w.reserve(keep.size());
      for (int j : keep) w.push_back(v[static_cast<std::size_t>(j)]);
      inst.vectors.push_back(std::move(w));
    }
  }
  return inst;
}

AggregateVector bucket_aggregate(const InstanceSpec& inst, const PartitionAssignment& p, int bucket) {
  if (p.size() != inst.n()) {
    throw InvalidPartitionError("partition length does not match instance size");
  }
  AggregateVector a = AggregateVector::zero(inst.dim());
  for (int i = 0; i < inst.n(); ++i) {
    if (p.bucket_of[static_cast<std::size_t>(i)] == bucket) {
      a.add(inst.vectors[static_cast<std::size_t>(i)]);
    }
  }
  return a;
}

}  // namespace impart
