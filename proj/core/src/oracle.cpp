#include "impart/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "impart/impurity.hpp"

namespace impart {

std::uint64_t count_set_partitions(int n, int max_blocks) {
  const int bmax = std::min(n, max_blocks);
  if (n <= 0 || bmax <= 0) return 0;
  constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
  // Row-by-row Stirling recurrence S(i, b) = b*S(i-1, b) + S(i-1, b-1),
  // saturating on overflow.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(bmax) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int b = std::min(i, bmax); b >= 1; --b) {
      const std::uint64_t below = row[static_cast<std::size_t>(b)];
      const std::uint64_t left = row[static_cast<std::size_t>(b - 1)];
      std::uint64_t val;
      if (below != 0 && below > (kSat - left) / static_cast<std::uint64_t>(b)) {
        val = kSat;
      } else {
        val = below * static_cast<std::uint64_t>(b) + left;
      }
      row[static_cast<std::size_t>(b)] = val;
    }
    row[0] = 0;
  }
  std::uint64_t total = 0;
  for (int b = 1; b <= bmax; ++b) {
    const std::uint64_t v = row[static_cast<std::size_t>(b)];
    if (total > kSat - v) return kSat;
    total += v;
  }
  return total;
}

namespace {

class PartitionEnumerator {
 public:
  PartitionEnumerator(const InstanceSpec& inst)
      : inst_(inst),
        sums_(static_cast<std::size_t>(inst.num_buckets),
              IntVector(static_cast<std::size_t>(inst.dim()), 0)),
        bucket_cost_(static_cast<std::size_t>(inst.num_buckets), 0.0),
        rgs_(static_cast<std::size_t>(inst.n()), 0) {}

  SolveResult run() {
    recurse(0, 0, 0.0);
    return SolveResult{best_p_, best_};
  }

 private:
  void recurse(int i, int used, double cost) {
    if (cost >= best_) return;  // impurity only grows as vectors are added
    if (i == inst_.n()) {
      best_ = cost;
      best_p_.bucket_of = rgs_;
      return;
    }
    const IntVector& v = inst_.vectors[static_cast<std::size_t>(i)];
    const int limit = std::min(used + 1, inst_.num_buckets);
    for (int b = 0; b < limit; ++b) {
      IntVector& s = sums_[static_cast<std::size_t>(b)];
      const double old_cost = bucket_cost_[static_cast<std::size_t>(b)];
      for (std::size_t j = 0; j < v.size(); ++j) s[j] += v[j];
      const double new_cost = impurity(s, inst_.measure);
      bucket_cost_[static_cast<std::size_t>(b)] = new_cost;
      rgs_[static_cast<std::size_t>(i)] = b;
      recurse(i + 1, std::max(used, b + 1), cost - old_cost + new_cost);
      bucket_cost_[static_cast<std::size_t>(b)] = old_cost;
      for (std::size_t j = 0; j < v.size(); ++j) s[j] -= v[j];
    }
  }

  const InstanceSpec& inst_;
  std::vector<IntVector> sums_;
  std::vector<double> bucket_cost_;
  std::vector<int> rgs_;
  double best_ = std::numeric_limits<double>::infinity();
  PartitionAssignment best_p_;
};

}  // namespace

SolveResult brute_force_opt(const InstanceSpec& inst, std::uint64_t cap) {
  const std::uint64_t count = count_set_partitions(inst.n(), inst.num_buckets);
  if (count > cap) {
    throw TooLargeError("exhaustive search over " + std::to_string(count) +
                            " set partitions exceeds the cap " + std::to_string(cap),
                        count);
  }
  return PartitionEnumerator(inst).run();
}

DirectionsResult brute_force_directions(const AggregateVector& u, int num_masks, Measure m,
                                        std::uint64_t cap) {
  const int k = u.dim();
  if (num_masks < 1) throw std::invalid_argument("need at least one mask");
  // L^k upper-bounds the labeled enumeration; the RGS walk visits fewer.
  long double label_count = std::pow(static_cast<long double>(num_masks), k);
  if (label_count > static_cast<long double>(cap)) {
    throw TooLargeError("exhaustive direction search exceeds the cap",
                        label_count > 1e19L ? std::numeric_limits<std::uint64_t>::max()
                                            : static_cast<std::uint64_t>(label_count));
  }

  std::vector<int> label(static_cast<std::size_t>(k), 0);
  std::vector<int> best_label;
  double best = std::numeric_limits<double>::infinity();

  // Cost of one block = impurity of u restricted to its components.
  std::vector<IntVector> blocks(static_cast<std::size_t>(num_masks));
  auto evaluate = [&]() {
    for (auto& blk : blocks) blk.clear();
    for (int j = 0; j < k; ++j) {
      blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(
          u.sums[static_cast<std::size_t>(j)]);
    }
    double cost = 0.0;
    for (const auto& blk : blocks) {
      if (!blk.empty()) cost += impurity(blk, m);
    }
    if (cost < best) {
      best = cost;
      best_label = label;
    }
  };

  // Restricted-growth strings over components: visits each unordered family
  // of at most num_masks masks exactly once.
  auto rec = [&](auto&& self, int j, int used) -> void {
    if (j == k) {
      evaluate();
      return;
    }
    const int limit = std::min(used + 1, num_masks);
    for (int b = 0; b < limit; ++b) {
      label[static_cast<std::size_t>(j)] = b;
      self(self, j + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);

  DirectionsResult out;
  out.cost = best;
  out.directions.masks.resize(static_cast<std::size_t>(num_masks));
  for (int j = 0; j < k; ++j) {
    out.directions.masks[static_cast<std::size_t>(best_label[static_cast<std::size_t>(j)])]
        .push_back(j);
  }
  return out;
}

ReductionResult reduce_3partition(const std::vector<std::int64_t>& numbers, int num_buckets) {
  if (numbers.empty()) throw InvalidInstanceError("reduction needs a nonempty number list");
  if (num_buckets < 1) throw InvalidInstanceError("reduction needs at least one bucket");
  const int k = static_cast<int>(numbers.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (numbers[i] <= 0) {
      throw InvalidInstanceError("reduction numbers must be positive, got " +
                                 std::to_string(numbers[i]) + " at position " + std::to_string(i));
    }
    if (numbers[i] > kMaxCoordinate) {
      throw InvalidInstanceError("reduction number exceeds the coordinate cap 2^40");
    }
    sum += numbers[i];
  }

  ReductionResult out;
  if (k != 3 * num_buckets) {
    out.warnings.push_back("expected k = 3L numbers (k=" + std::to_string(k) +
                           ", L=" + std::to_string(num_buckets) + ")");
  }
  // u_i in (T/4, T/3) with T = sum/L, compared exactly: 4*L*u_i > sum and
  // 3*L*u_i < sum.
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    const __int128 x = static_cast<__int128>(numbers[i]) * num_buckets;
    if (!(4 * x > sum && 3 * x < sum)) {
      out.warnings.push_back("number " + std::to_string(numbers[i]) + " at position " +
                             std::to_string(i) + " is outside (T/4, T/3)");
    }
  }

  InstanceSpec inst;
  inst.num_buckets = num_buckets;
  inst.measure = Measure::Entropy;
  inst.original_dim = k;
  inst.column_map.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) inst.column_map[static_cast<std::size_t>(j)] = j;
  inst.vectors.reserve(numbers.size());
  for (int i = 0; i < k; ++i) {
    IntVector v(static_cast<std::size_t>(k), 0);
    v[static_cast<std::size_t>(i)] = numbers[static_cast<std::size_t>(i)];
    inst.vectors.push_back(std::move(v));
  }

  const double total_impurity = impurity(inst.total(), Measure::Entropy);
  out.threshold =
      total_impurity - static_cast<double>(sum) * std::log2(static_cast<double>(num_buckets));
  out.instance = std::move(inst);
  return out;
}

}  // namespace impart
