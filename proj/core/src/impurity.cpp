#include "impart/impurity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace impart {

double generator_f(Measure m, double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  switch (m) {
    case Measure::Gini:
      return x * (1.0 - x);
    case Measure::Entropy:
      return -x * std::log2(x);
  }
  return 0.0;
}

namespace {

double impurity_of_sums(const std::vector<std::int64_t>& sums, std::int64_t l1, Measure m) {
  if (l1 == 0) return 0.0;
  const double l1d = static_cast<double>(l1);
  double acc = 0.0;
  switch (m) {
    case Measure::Entropy: {
      const double log_l1 = std::log2(l1d);
      for (std::int64_t s : sums) {
        if (s > 0 && s < l1) {
          acc += static_cast<double>(s) * (log_l1 - std::log2(static_cast<double>(s)));
        }
      }
      break;
    }
    case Measure::Gini: {
      // Per-term u_i*(l1-u_i)/l1 with the subtraction done in exact integers;
      // avoids the cancellation of the l1 - sum(u_i^2)/l1 form.
      for (std::int64_t s : sums) {
        if (s > 0) {
          acc += static_cast<double>(s) * (static_cast<double>(l1 - s) / l1d);
        }
      }
      break;
    }
  }
  return acc;
}

}  // namespace

double impurity(const AggregateVector& u, Measure m) {
  return impurity_of_sums(u.sums, u.l1, m);
}

double impurity(const IntVector& v, Measure m) {
  std::int64_t l1 = 0;
  for (std::int64_t x : v) l1 += x;
  return impurity_of_sums(v, l1, m);
}

double partition_impurity(const InstanceSpec& inst, const PartitionAssignment& p) {
  if (p.size() != inst.n()) {
    throw InvalidPartitionError("partition length " + std::to_string(p.size()) +
                                " does not match instance size " + std::to_string(inst.n()));
  }
  const int dim = inst.dim();
  std::vector<AggregateVector> agg(static_cast<std::size_t>(inst.num_buckets),
                                   AggregateVector::zero(dim));
  for (int i = 0; i < inst.n(); ++i) {
    int b = p.bucket_of[static_cast<std::size_t>(i)];
    if (b < 0 || b >= inst.num_buckets) {
      throw InvalidPartitionError("bucket id " + std::to_string(b) + " out of range [0, " +
                                  std::to_string(inst.num_buckets) + ")");
    }
    agg[static_cast<std::size_t>(b)].add(inst.vectors[static_cast<std::size_t>(i)]);
  }
  double total = 0.0;
  for (const auto& a : agg) total += impurity(a, inst.measure);
  return total;
}

std::vector<double> bucket_impurities(const InstanceSpec& inst, const PartitionAssignment& p) {
  if (p.size() != inst.n()) {
    throw InvalidPartitionError("partition length does not match instance size");
  }
  const int dim = inst.dim();
  std::vector<AggregateVector> agg(static_cast<std::size_t>(inst.num_buckets),
                                   AggregateVector::zero(dim));
  for (int i = 0; i < inst.n(); ++i) {
    int b = p.bucket_of[static_cast<std::size_t>(i)];
    if (b < 0 || b >= inst.num_buckets) {
      throw InvalidPartitionError("bucket id out of range");
    }
    agg[static_cast<std::size_t>(b)].add(inst.vectors[static_cast<std::size_t>(i)]);
  }
  std::vector<double> out;
  out.reserve(agg.size());
  for (const auto& a : agg) out.push_back(impurity(a, inst.measure));
  return out;
}

double ratio_of(const AggregateVector& u) {
  if (u.l1 == 0) throw std::invalid_argument("ratio of a zero vector is undefined");
  const std::int64_t denom = u.l1 - u.linf;
  if (denom == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(u.l1) / static_cast<double>(denom);
}

bool ratio_less(std::int64_t l1_a, std::int64_t linf_a, std::int64_t l1_b, std::int64_t linf_b) {
  const std::int64_t da = l1_a - linf_a;
  const std::int64_t db = l1_b - linf_b;
  if (da == 0) return false;           // pure sorts after everything
  if (db == 0) return true;            // anything impure sorts before pure
  // l1_a/da < l1_b/db  <=>  l1_a*db < l1_b*da, exactly.
  return static_cast<__int128>(l1_a) * db < static_cast<__int128>(l1_b) * da;
}

int dominant_component(const AggregateVector& u) {
  if (u.l1 == 0) throw std::invalid_argument("dominant component of a zero vector is undefined");
  return u.argmax;
}

int dominant_component(const IntVector& v) {
  return dominant_component(AggregateVector::of(v));
}

}  // namespace impart
