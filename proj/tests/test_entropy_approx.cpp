#include <algorithm>
#include <cmath>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "impart/dominance.hpp"
#include "impart/entropy_approx.hpp"
#include "impart/impurity.hpp"
#include "impart/oracle.hpp"
#include "impart/two_dim.hpp"

using namespace impart;
using namespace impart::testing;

namespace {

// Buckets that contain vectors with different dominant components.
int count_mixed_buckets(const InstanceSpec& inst, const PartitionAssignment& p) {
  std::vector<std::set<int>> doms(static_cast<std::size_t>(inst.num_buckets));
  for (int i = 0; i < inst.n(); ++i) {
    doms[static_cast<std::size_t>(p.bucket_of[static_cast<std::size_t>(i)])].insert(
        dominant_component(inst.vectors[static_cast<std::size_t>(i)]));
  }
  int mixed = 0;
  for (const auto& s : doms) mixed += s.size() > 1 ? 1 : 0;
  return mixed;
}

// Within each dominance class, the members of any one bucket must form a
// contiguous block of the ratio order.
bool pure_blocks_ratio_contiguous(const InstanceSpec& inst, const PartitionAssignment& p) {
  const DominanceClasses classes = DominanceClasses::build(inst);
  for (const auto& mem : classes.members) {
    std::vector<int> run;
    for (int idx : mem) {
      const int b = p.bucket_of[static_cast<std::size_t>(idx)];
      if (run.empty() || run.back() != b) {
        if (std::find(run.begin(), run.end(), b) != run.end()) return false;
        run.push_back(b);
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("dominance classes order members by ratio with pure vectors last") {
  InstanceSpec inst =
      make_instance({{1024, 0}, {2, 1}, {0, 1}, {5, 4}, {3, 0}}, 2, Measure::Entropy);
  const DominanceClasses classes = DominanceClasses::build(inst);
  // Class 0: (5,4) ratio 9/5, (2,1) ratio 3, then the pure (1024,0), (3,0)
  // by input index. Class 1: (0,1).
  CHECK(classes.members[0] == std::vector<int>{3, 1, 0, 4});
  CHECK(classes.members[1] == std::vector<int>{2});
  CHECK(classes.num_nonempty() == 2);
}

TEST_CASE("pure-only DP pinned examples") {
  {
    InstanceSpec inst = make_instance({{4, 1}, {1, 4}}, 2, Measure::Entropy);
    const SolveResult r = solve_pure_only(inst);
    CHECK(r.assignment.bucket_of[0] != r.assignment.bucket_of[1]);
    // 2 * I((4,1)) = 2*(5*log2(5) - 4*log2(4))
    CHECK(r.impurity == doctest::Approx(7.219280948873623).epsilon(1e-12));
  }
  {
    // Single dominance class: identical to the two-class subroutine.
    std::vector<IntVector> vs{{9, 1}, {4, 2}, {7, 0}};
    InstanceSpec inst = make_instance(vs, 3, Measure::Entropy);
    const SolveResult r = solve_pure_only(inst);
    const A2cResult direct = a2c(vs, 3, Measure::Entropy);
    CHECK(r.impurity == doctest::Approx(direct.impurity).epsilon(1e-12));
  }
  {
    // Three classes, two buckets: pigeonhole infeasibility.
    InstanceSpec inst = make_instance({{5, 1, 0}, {0, 5, 1}, {1, 0, 5}}, 2, Measure::Entropy);
    CHECK_THROWS_AS(solve_pure_only(inst), InfeasibleError);
  }
  {
    InstanceSpec gini = make_instance({{4, 1}, {1, 4}}, 2, Measure::Gini);
    CHECK_THROWS_AS(solve_pure_only(gini), std::invalid_argument);
  }
}

TEST_CASE("pseudo solver recovers the mixed-bucket optimum of the tightness instance") {
  InstanceSpec inst = make_instance({{1024, 0}, {2, 1}, {0, 1}}, 2, Measure::Entropy);
  DpStats stats;
  const SolveResult r = solve_pseudo(inst, &stats);
  CHECK(r.impurity == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(r.assignment.bucket_of[1] == r.assignment.bucket_of[2]);
  CHECK(r.assignment.bucket_of[0] != r.assignment.bucket_of[1]);
  CHECK(count_mixed_buckets(inst, r.assignment) <= 1);
  CHECK(stats.states_generated > 0);
}

TEST_CASE("pseudo solver is exact on all-pure instances") {
  InstanceSpec inst = make_instance({{3, 0, 0}, {5, 0, 0}, {0, 0, 2}, {0, 1, 0}}, 3,
                                    Measure::Entropy);
  const SolveResult r = solve_pseudo(inst);
  CHECK(r.impurity == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("state deduplication keeps one state per key") {
  Rng rng(246);
  for (int trial = 0; trial < 20; ++trial) {
    const InstanceSpec inst = random_instance(rng, 7, 3, 3, 5, Measure::Entropy, 2, 2);
    DpStats stats;
    solve_pseudo(inst, &stats);
    for (const auto& level : stats.level_keys) {
      std::set<std::pair<int, std::int64_t>> seen(level.begin(), level.end());
      CHECK(seen.size() == level.size());
    }
  }
}

TEST_CASE("pseudo and variants stay above the oracle and keep the structure") {
  Rng rng(1357);
  for (int trial = 0; trial < 80; ++trial) {
    const InstanceSpec inst = random_instance(rng, 8, 3, 3, 6, Measure::Entropy);
    const double opt = brute_force_opt(inst).impurity;

    const SolveResult pseudo = solve_pseudo(inst);
    CHECK(pseudo.impurity >= opt - 1e-9 * (1 + opt));
    CHECK(pseudo.impurity ==
          doctest::Approx(partition_impurity(inst, pseudo.assignment)).epsilon(1e-9));
    CHECK(count_mixed_buckets(inst, pseudo.assignment) <= 1);
    CHECK(pure_blocks_ratio_contiguous(inst, pseudo.assignment));

    const SolveResult apoly = solve_apoly(inst);
    CHECK(apoly.impurity >= opt - 1e-9 * (1 + opt));
    CHECK(apoly.impurity ==
          doctest::Approx(partition_impurity(inst, apoly.assignment)).epsilon(1e-9));
  }
}

TEST_CASE("pruned solver behaviour in t") {
  InstanceSpec tight = make_instance({{1024, 0}, {2, 1}, {0, 1}}, 2, Measure::Entropy);

  // The winning special bucket {(2,1),(0,1)} has side mass 2, so t=4 finds it.
  CHECK(solve_pruned(tight, 4).impurity == doctest::Approx(4.0).epsilon(1e-9));

  // t=1 still admits every c=0 state: the all-pure solutions survive.
  InstanceSpec pure = make_instance({{4, 0}, {0, 3}}, 2, Measure::Entropy);
  CHECK(solve_pruned(pure, 1).impurity == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(solve_pruned(tight, 0), std::invalid_argument);

  Rng rng(8642);
  for (int trial = 0; trial < 40; ++trial) {
    const InstanceSpec inst = random_instance(rng, 7, 3, 3, 5, Measure::Entropy);
    const std::int64_t mass = inst.total_mass();

    DpStats pseudo_stats;
    const SolveResult pseudo = solve_pseudo(inst, &pseudo_stats);

    DpStats full_stats;
    const SolveResult at_capacity = solve_pruned(inst, mass, &full_stats);
    CHECK(at_capacity.impurity >= pseudo.impurity - 1e-9 * (1 + pseudo.impurity));
    if (!full_stats.cell_collision) {
      CHECK(at_capacity.impurity == doctest::Approx(pseudo.impurity).epsilon(1e-9));
    }

    // Doubling t never hurts when no pruning cell ever merged candidates.
    // A very small t can leave the search space empty when there are more
    // dominance classes than buckets; those t are skipped.
    double prev = std::numeric_limits<double>::infinity();
    bool clean = true;
    for (std::int64_t t = 2; t <= 2 * mass && clean; t *= 2) {
      DpStats st;
      SolveResult r;
      try {
        r = solve_pruned(inst, t, &st);
      } catch (const InfeasibleError&) {
        continue;
      }
      clean = !st.cell_collision;
      if (clean) {
        CHECK(r.impurity <= prev + 1e-9 * (1 + prev));
        prev = r.impurity;
      }
    }
  }
}

TEST_CASE("polynomial driver pinned examples") {
  {
    InstanceSpec tight = make_instance({{1024, 0}, {2, 1}, {0, 1}}, 2, Measure::Entropy);
    CHECK(solve_apoly(tight).impurity == doctest::Approx(4.0).epsilon(1e-9));
  }
  {
    InstanceSpec single = make_instance({{2, 1}}, 2, Measure::Entropy);
    const SolveResult r = solve_apoly(single);
    CHECK(r.impurity ==
          doctest::Approx(impurity(IntVector{2, 1}, Measure::Entropy)).epsilon(1e-12));
  }
  {
    // Uniform-norm worst case: one mixed vector among many pure ones. The
    // polynomial driver separates it; dominance lumps everything together.
    std::vector<IntVector> vs(7, IntVector{64, 0});
    vs.push_back(IntVector{64, 32});
    InstanceSpec inst = make_instance(vs, 2, Measure::Entropy);
    const SolveResult apoly = solve_apoly(inst);
    const SolveResult dom = solve_dominance(inst);
    CHECK(apoly.impurity <= dom.impurity + 1e-9);
    for (int i = 0; i < 7; ++i) {
      CHECK(apoly.assignment.bucket_of[static_cast<std::size_t>(i)] !=
            apoly.assignment.bucket_of[7]);
    }
    // Isolating the mixed vector attains the singleton lower bound.
    CHECK(apoly.impurity ==
          doctest::Approx(impurity(IntVector{64, 32}, Measure::Entropy)).epsilon(1e-12));
  }
}

TEST_CASE("polynomial driver collapses high-dimensional instances") {
  Rng rng(11119);
  for (int trial = 0; trial < 25; ++trial) {
    const InstanceSpec inst = random_instance(rng, 7, 5, 3, 5, Measure::Entropy, 2, 4);
    const SolveResult r = solve_apoly(inst);
    CHECK(static_cast<int>(r.assignment.bucket_of.size()) == inst.n());
    const double opt = brute_force_opt(inst).impurity;
    CHECK(r.impurity >= opt - 1e-9 * (1 + opt));
    CHECK(r.impurity == doctest::Approx(partition_impurity(inst, r.assignment)).epsilon(1e-9));
  }
}
