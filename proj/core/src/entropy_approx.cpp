#include "impart/entropy_approx.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "impart/directions.hpp"
#include "impart/impurity.hpp"
#include "impart/two_dim.hpp"

namespace impart {

DominanceClasses DominanceClasses::build(const InstanceSpec& inst) {
  const int n = inst.n();
  std::vector<std::int64_t> l1(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> linf(static_cast<std::size_t>(n), 0);
  DominanceClasses out;
  out.members.assign(static_cast<std::size_t>(inst.dim()), {});
  for (int i = 0; i < n; ++i) {
    const IntVector& v = inst.vectors[static_cast<std::size_t>(i)];
    int dom = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      l1[static_cast<std::size_t>(i)] += v[j];
      if (v[j] > linf[static_cast<std::size_t>(i)]) {
        linf[static_cast<std::size_t>(i)] = v[j];
        dom = static_cast<int>(j);
      }
    }
    out.members[static_cast<std::size_t>(dom)].push_back(i);
  }
  for (auto& cls : out.members) {
    std::stable_sort(cls.begin(), cls.end(), [&](int a, int b) {
      return ratio_less(l1[static_cast<std::size_t>(a)], linf[static_cast<std::size_t>(a)],
                        l1[static_cast<std::size_t>(b)], linf[static_cast<std::size_t>(b)]);
    });
  }
  return out;
}

int DominanceClasses::num_nonempty() const {
  int m = 0;
  for (const auto& cls : members) m += cls.empty() ? 0 : 1;
  return m;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_entropy(const InstanceSpec& inst, const char* what) {
  if (inst.measure != Measure::Entropy) {
    throw std::invalid_argument(std::string(what) + " is defined for the Entropy measure only");
  }
}

/// Memoized two-class subroutine results. Keyed by (class, dropped ratio
/// prefix, bucket budget); values are independent of the active component w,
/// so one table serves every (w, l) pass.
class A2cTable {
 public:
  struct Entry {
    double i2 = 0.0;
    double impurity = 0.0;
    std::vector<int> bucket_of;  // over the class suffix, ids 0..used-1
    int used = 0;
  };

  A2cTable(const InstanceSpec& inst, const DominanceClasses& classes)
      : inst_(inst), classes_(classes), memo_(classes.members.size()) {}

  const Entry& get(int cls, int drop, int buckets) {
    auto& per_class = memo_[static_cast<std::size_t>(cls)];
    const std::int64_t key = static_cast<std::int64_t>(drop) * 1000003 + buckets;
    auto it = per_class.find(key);
    if (it != per_class.end()) return it->second;
    return per_class.emplace(key, compute(cls, drop, buckets)).first->second;
  }

 private:
  Entry compute(int cls, int drop, int buckets) const {
    Entry e;
    const auto& mem = classes_.members[static_cast<std::size_t>(cls)];
    const int len = static_cast<int>(mem.size()) - drop;
    if (len <= 0) return e;
    std::vector<IntVector> subset;
    subset.reserve(static_cast<std::size_t>(len));
    for (int r = drop; r < static_cast<int>(mem.size()); ++r) {
      subset.push_back(inst_.vectors[static_cast<std::size_t>(mem[static_cast<std::size_t>(r)])]);
    }
    A2cResult r = a2c(subset, buckets, Measure::Entropy);
    e.i2 = r.i2;
    e.impurity = r.impurity;
    e.bucket_of = std::move(r.assignment.bucket_of);
    for (int b : e.bucket_of) e.used = std::max(e.used, b + 1);
    return e;
  }

  const InstanceSpec& inst_;
  const DominanceClasses& classes_;
  std::vector<std::unordered_map<std::int64_t, Entry>> memo_;
};

struct Candidate {
  double impurity = kInf;
  int special_count = 0;
  PartitionAssignment assignment;

  /// Deterministic preference: lower impurity, then fewer vectors in the
  /// special bucket, then lexicographically smaller assignment.
  bool better_than(const Candidate& other) const {
    if (impurity != other.impurity) return impurity < other.impurity;
    if (special_count != other.special_count) return special_count < other.special_count;
    return assignment.bucket_of < other.assignment.bucket_of;
  }
};

struct State {
  int buckets = 0;
  std::int64_t side = 0;
  double i2 = 0.0;
  int parent = -1;
  int take = 0;
  int pure_buckets = 0;
};

/// The (w, l)-indexed state DP shared by the pseudo-polynomial solver and
/// its pruned variant. A cap t < 0 disables both the side-mass cutoff and
/// the per-cell pruning.
class StateDp {
 public:
  StateDp(const InstanceSpec& inst, const DominanceClasses& classes, A2cTable& table,
          std::int64_t cap, DpStats* stats)
      : inst_(inst), classes_(classes), table_(table), cap_(cap), stats_(stats) {}

  std::optional<Candidate> best_over_all() {
    std::optional<Candidate> best;
    const int k = inst_.dim();
    for (int w = 0; w < k; ++w) {
      const int class_size = static_cast<int>(classes_.members[static_cast<std::size_t>(w)].size());
      for (int take_w = 0; take_w <= class_size; ++take_w) {
        run_single(w, take_w, best);
      }
    }
    return best;
  }

 private:
  void record_level(const std::vector<State>& states) {
    if (stats_ == nullptr) return;
    auto& keys = stats_->level_keys.emplace_back();
    keys.reserve(states.size());
    for (const State& s : states) keys.emplace_back(s.buckets, s.side);
    stats_->peak_states = std::max(stats_->peak_states, static_cast<std::uint64_t>(states.size()));
  }

  std::int64_t cell_of(std::int64_t side) const {
    const std::int64_t cells = 4 * static_cast<std::int64_t>(inst_.dim());
    std::int64_t cell = static_cast<std::int64_t>(static_cast<__int128>(side) * cells / cap_);
    return std::min(cell, cells - 1);
  }

  void run_single(int w, int take_w, std::optional<Candidate>& best) {
    const int L = inst_.num_buckets;

    // Levels: class w first, then the remaining nonempty classes in
    // component order. Side masses are measured against component w.
    std::vector<int> levels{w};
    for (int q = 0; q < inst_.dim(); ++q) {
      if (q != w && !classes_.members[static_cast<std::size_t>(q)].empty()) levels.push_back(q);
    }

    // side_prefix[level][j] = ||prefix||_1 - sum of the w-components of the
    // first j ratio-ordered members of the level's class.
    std::vector<std::vector<std::int64_t>> side_prefix(levels.size());
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const auto& mem = classes_.members[static_cast<std::size_t>(levels[li])];
      auto& pre = side_prefix[li];
      pre.assign(mem.size() + 1, 0);
      for (std::size_t j = 0; j < mem.size(); ++j) {
        const IntVector& v = inst_.vectors[static_cast<std::size_t>(mem[j])];
        std::int64_t l1 = 0;
        for (std::int64_t x : v) l1 += x;
        pre[j + 1] = pre[j] + (l1 - v[static_cast<std::size_t>(w)]);
      }
    }

    std::vector<std::vector<State>> levels_states(levels.size());

    // Seed: the special bucket takes the take_w smallest-ratio w-dominant
    // vectors; leftovers of class w get 1..L-1 pure buckets.
    {
      const auto& mem = classes_.members[static_cast<std::size_t>(w)];
      const std::int64_t side0 = side_prefix[0][static_cast<std::size_t>(take_w)];
      if (cap_ >= 0 && side0 > cap_) return;
      auto& seed = levels_states[0];
      const int leftover = static_cast<int>(mem.size()) - take_w;
      if (leftover == 0) {
        seed.push_back(State{1, side0, 0.0, -1, take_w, 0});
      } else {
        for (int bp = 1; bp <= std::min(L - 1, leftover); ++bp) {
          const double i2 = table_.get(w, take_w, bp).i2;
          seed.push_back(State{1 + bp, side0, i2, -1, take_w, bp});
        }
      }
      if (stats_ != nullptr) stats_->states_generated += seed.size();
      record_level(seed);
    }

    for (std::size_t li = 1; li < levels.size(); ++li) {
      const int q = levels[li];
      const auto& mem = classes_.members[static_cast<std::size_t>(q)];
      const auto& prev = levels_states[li - 1];
      auto& next = levels_states[li];
      std::map<std::pair<int, std::int64_t>, std::size_t> slot;

      auto add = [&](const State& st) {
        if (stats_ != nullptr) ++stats_->states_generated;
        const auto key = std::make_pair(st.buckets, st.side);
        auto it = slot.find(key);
        if (it == slot.end()) {
          slot.emplace(key, next.size());
          next.push_back(st);
        } else if (st.i2 < next[it->second].i2) {
          next[it->second] = st;
        }
      };

      for (std::size_t pi = 0; pi < prev.size(); ++pi) {
        const State& s = prev[pi];
        for (int take = 0; take <= static_cast<int>(mem.size()); ++take) {
          const std::int64_t side = s.side + side_prefix[li][static_cast<std::size_t>(take)];
          if (cap_ >= 0 && side > cap_) break;  // side_prefix is non-decreasing
          const int leftover = static_cast<int>(mem.size()) - take;
          if (leftover == 0) {
            add(State{s.buckets, side, s.i2, static_cast<int>(pi), take, 0});
          } else {
            for (int bp = 1; bp <= std::min(L - s.buckets, leftover); ++bp) {
              const double i2 = s.i2 + table_.get(q, take, bp).i2;
              add(State{s.buckets + bp, side, i2, static_cast<int>(pi), take, bp});
            }
          }
        }
      }

      if (cap_ >= 0) prune_cells(next);
      record_level(next);
      if (next.empty()) return;
    }

    for (const State& s : levels_states.back()) {
      Candidate cand = materialize(levels, levels_states, s);
      if (!best.has_value() || cand.better_than(*best)) best = std::move(cand);
    }
  }

  /// Per (buckets, side-mass cell), keep the state with the smallest pure
  /// 2-impurity; ties prefer smaller side mass, then earlier generation.
  void prune_cells(std::vector<State>& states) {
    std::map<std::pair<int, std::int64_t>, std::size_t> keep;
    std::vector<bool> alive(states.size(), false);
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto key = std::make_pair(states[i].buckets, cell_of(states[i].side));
      auto it = keep.find(key);
      if (it == keep.end()) {
        keep.emplace(key, i);
        alive[i] = true;
        continue;
      }
      if (stats_ != nullptr) stats_->cell_collision = true;
      const State& held = states[it->second];
      if (states[i].i2 < held.i2 ||
          (states[i].i2 == held.i2 && states[i].side < held.side)) {
        alive[it->second] = false;
        alive[i] = true;
        it->second = i;
      }
    }
    std::vector<State> out;
    out.reserve(keep.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (alive[i]) out.push_back(states[i]);
    }
    states = std::move(out);
  }

  Candidate materialize(const std::vector<int>& levels,
                        const std::vector<std::vector<State>>& levels_states,
                        const State& last) const {
    // Recover the per-level (take, pure_buckets) choices.
    std::vector<std::pair<int, int>> choices(levels.size());
    const State* cur = &last;
    for (std::size_t li = levels.size(); li-- > 0;) {
      choices[li] = {cur->take, cur->pure_buckets};
      if (li > 0) cur = &levels_states[li - 1][static_cast<std::size_t>(cur->parent)];
    }

    Candidate cand;
    cand.assignment.bucket_of.assign(static_cast<std::size_t>(inst_.n()), 0);
    AggregateVector special = AggregateVector::zero(inst_.dim());
    int next_bucket = 1;
    double pure_impurity = 0.0;
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const auto& mem = classes_.members[static_cast<std::size_t>(levels[li])];
      const auto [take, bp] = choices[li];
      for (int r = 0; r < take; ++r) {
        const int idx = mem[static_cast<std::size_t>(r)];
        special.add(inst_.vectors[static_cast<std::size_t>(idx)]);
        cand.assignment.bucket_of[static_cast<std::size_t>(idx)] = 0;
        ++cand.special_count;
      }
      if (bp > 0) {
        const A2cTable::Entry& entry = table_.get(levels[li], take, bp);
        for (std::size_t r = static_cast<std::size_t>(take); r < mem.size(); ++r) {
          const int seg = entry.bucket_of[r - static_cast<std::size_t>(take)];
          cand.assignment.bucket_of[static_cast<std::size_t>(mem[r])] = next_bucket + seg;
        }
        next_bucket += entry.used;
        pure_impurity += entry.impurity;
      }
    }
    cand.impurity = impurity(special, Measure::Entropy) + pure_impurity;
    return cand;
  }

  const InstanceSpec& inst_;
  const DominanceClasses& classes_;
  A2cTable& table_;
  std::int64_t cap_;
  DpStats* stats_;
};

SolveResult solve_with_cap(const InstanceSpec& inst, std::int64_t cap, DpStats* stats,
                           const char* what) {
  require_entropy(inst, what);
  const DominanceClasses classes = DominanceClasses::build(inst);
  A2cTable table(inst, classes);

  std::optional<Candidate> best;
  if (classes.num_nonempty() <= inst.num_buckets) {
    SolveResult pure = solve_pure_only(inst);
    best = Candidate{pure.impurity, 0, std::move(pure.assignment)};
  }

  StateDp dp(inst, classes, table, cap, stats);
  std::optional<Candidate> from_dp = dp.best_over_all();
  if (from_dp.has_value() && (!best.has_value() || from_dp->better_than(*best))) {
    best = std::move(from_dp);
  }
  if (!best.has_value()) {
    throw InfeasibleError(std::string(what) + ": no partition within the side-mass cap");
  }
  return SolveResult{std::move(best->assignment), best->impurity};
}

}  // namespace

SolveResult solve_pure_only(const InstanceSpec& inst) {
  require_entropy(inst, "solve_pure_only");
  const DominanceClasses classes = DominanceClasses::build(inst);
  std::vector<int> cls;
  for (int q = 0; q < inst.dim(); ++q) {
    if (!classes.members[static_cast<std::size_t>(q)].empty()) cls.push_back(q);
  }
  const int m = static_cast<int>(cls.size());
  const int L = inst.num_buckets;
  if (m > L) {
    throw InfeasibleError("pure-only partition needs " + std::to_string(m) +
                          " buckets but only " + std::to_string(L) + " are available");
  }

  A2cTable table(inst, classes);
  const double inf = kInf;
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(m) + 1,
                                      std::vector<double>(static_cast<std::size_t>(L) + 1, inf));
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(m) + 1,
                                       std::vector<int>(static_cast<std::size_t>(L) + 1, -1));
  dp[0][0] = 0.0;
  for (int i = 1; i <= m; ++i) {
    const int size_i =
        static_cast<int>(classes.members[static_cast<std::size_t>(cls[static_cast<std::size_t>(i - 1)])].size());
    for (int b = i; b <= L; ++b) {
      for (int bp = 1; bp <= std::min(b - (i - 1), size_i); ++bp) {
        const double prev = dp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b - bp)];
        if (prev == inf) continue;
        const double val = prev + table.get(cls[static_cast<std::size_t>(i - 1)], 0, bp).i2;
        if (val < dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]) {
          dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = val;
          choice[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = bp;
        }
      }
    }
  }
  int best_b = -1;
  for (int b = m; b <= L; ++b) {
    if (best_b < 0 || dp[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)] <
                          dp[static_cast<std::size_t>(m)][static_cast<std::size_t>(best_b)]) {
      best_b = b;
    }
  }

  PartitionAssignment p;
  p.bucket_of.assign(static_cast<std::size_t>(inst.n()), 0);
  double total_impurity = 0.0;
  // Walk the choices backwards, then hand out bucket ids in class order.
  std::vector<int> alloc(static_cast<std::size_t>(m), 0);
  for (int i = m, b = best_b; i >= 1; --i) {
    const int bp = choice[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
    alloc[static_cast<std::size_t>(i - 1)] = bp;
    b -= bp;
  }
  int next_bucket = 0;
  for (int i = 0; i < m; ++i) {
    const A2cTable::Entry& entry = table.get(cls[static_cast<std::size_t>(i)], 0,
                                             alloc[static_cast<std::size_t>(i)]);
    const auto& mem = classes.members[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])];
    for (std::size_t r = 0; r < mem.size(); ++r) {
      p.bucket_of[static_cast<std::size_t>(mem[r])] = next_bucket + entry.bucket_of[r];
    }
    next_bucket += entry.used;
    total_impurity += entry.impurity;
  }
  return SolveResult{std::move(p), total_impurity};
}

SolveResult solve_pseudo(const InstanceSpec& inst, DpStats* stats) {
  return solve_with_cap(inst, -1, stats, "solve_pseudo");
}

SolveResult solve_pruned(const InstanceSpec& inst, std::int64_t t, DpStats* stats) {
  if (t < 1) throw std::invalid_argument("pruning cap t must be at least 1");
  return solve_with_cap(inst, t, stats, "solve_pruned");
}

namespace {

SolveResult apoly_core(const InstanceSpec& inst) {
  SolveResult best = solve_pure_only(inst);
  const std::uint64_t mass = static_cast<std::uint64_t>(inst.total_mass());
  const int e = mass <= 1 ? 0 : static_cast<int>(std::bit_width(mass - 1));
  for (int j = 1; j <= e; ++j) {
    SolveResult cand = solve_pruned(inst, std::int64_t{1} << j);
    if (cand.impurity < best.impurity) best = std::move(cand);
  }
  return best;
}

}  // namespace

SolveResult solve_apoly(const InstanceSpec& inst) {
  require_entropy(inst, "solve_apoly");
  if (inst.dim() <= inst.num_buckets) {
    return apoly_core(inst);
  }
  const CanonicalDirections canon = canonical_directions(inst.total(), inst.num_buckets);
  const InstanceSpec collapsed = collapse_instance(inst, canon.directions);
  SolveResult low = apoly_core(collapsed);
  PartitionAssignment lifted = lift_partition(low.assignment, inst);
  const double value = partition_impurity(inst, lifted);
  return SolveResult{std::move(lifted), value};
}

}  // namespace impart
