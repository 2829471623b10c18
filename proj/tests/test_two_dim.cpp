#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "impart/impurity.hpp"
#include "impart/oracle.hpp"
#include "impart/two_dim.hpp"

using namespace impart;
using namespace impart::testing;

namespace {

InstanceSpec as_instance(const std::vector<TwoVector>& vs, int L, Measure m) {
  std::vector<IntVector> raw;
  raw.reserve(vs.size());
  for (const auto& v : vs) raw.push_back({v.a, v.b});
  return make_instance(std::move(raw), L, m);
}

std::vector<TwoVector> random_two_vectors(Rng& rng, int n_max, std::int64_t coord_max) {
  const int n = static_cast<int>(rng.range(1, n_max));
  std::vector<TwoVector> vs(static_cast<std::size_t>(n));
  for (auto& v : vs) {
    do {
      v.a = rng.range(0, coord_max);
      v.b = rng.range(0, coord_max);
    } while (v.a == 0 && v.b == 0);
  }
  return vs;
}

}  // namespace

TEST_CASE("two-class projection branches and scaling") {
  CHECK(chi2c({5, 1, 1}) == TwoVector{10, 4});
  CHECK(chi2c({2, 2, 2}) == TwoVector{6, 6});
  CHECK(chi2c({4, 0}) == TwoVector{8, 0});
  CHECK_THROWS_AS(chi2c({0, 0}), std::invalid_argument);
}

TEST_CASE("2-d solver pinned examples") {
  {
    std::vector<TwoVector> vs{{4, 0}, {3, 1}, {0, 4}};
    const SolveResult r = solve_2d_optimal(vs, 2, Measure::Entropy);
    // Optimal split {(4,0),(3,1)} | {(0,4)}: I((7,1)) = 8*log2(8) - 7*log2(7)
    CHECK(r.impurity == doctest::Approx(4.348515545596771).epsilon(1e-12));
    CHECK(r.assignment.bucket_of[0] == r.assignment.bucket_of[1]);
    CHECK(r.assignment.bucket_of[0] != r.assignment.bucket_of[2]);
  }
  {
    std::vector<TwoVector> vs{{1, 1}, {1, 1}, {1, 1}};
    const SolveResult r = solve_2d_optimal(vs, 1, Measure::Entropy);
    CHECK(r.impurity == doctest::Approx(6.0).epsilon(1e-12));
  }
  {
    // Plenty of buckets: the value is never above the all-singletons value,
    // and the oracle certifies equality on this instance.
    std::vector<TwoVector> vs{{3, 1}, {1, 2}, {5, 5}};
    const SolveResult r = solve_2d_optimal(vs, 3, Measure::Entropy);
    double singles = 0.0;
    for (const auto& v : vs) singles += impurity(IntVector{v.a, v.b}, Measure::Entropy);
    CHECK(r.impurity <= singles + 1e-12);
    const double opt = brute_force_opt(as_instance(vs, 3, Measure::Entropy)).impurity;
    CHECK(r.impurity == doctest::Approx(opt).epsilon(1e-9));
  }
}

TEST_CASE("2-d solver equals the exhaustive oracle") {
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const Measure m = trial % 2 == 0 ? Measure::Entropy : Measure::Gini;
    const std::vector<TwoVector> vs = random_two_vectors(rng, 9, 6);
    const int L = static_cast<int>(rng.range(1, 3));
    const SolveResult r = solve_2d_optimal(vs, L, m);

    InstanceSpec inst = as_instance(vs, std::max(2, L), m);
    // Emulate L=1 against the L>=2 instance type by forcing one bucket.
    double opt;
    if (L == 1) {
      AggregateVector all = inst.total();
      opt = impurity(all, m);
    } else {
      opt = brute_force_opt(inst).impurity;
    }
    CHECK(std::abs(r.impurity - opt) <= 1e-9 * (1 + opt));
    CHECK(r.impurity ==
          doctest::Approx(partition_impurity(as_instance(vs, std::max(2, L), m), r.assignment))
              .epsilon(1e-9));
  }
}

TEST_CASE("bucket membership is contiguous in the a/(a+b) order") {
  Rng rng(778);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<TwoVector> vs = random_two_vectors(rng, 9, 9);
    const int L = static_cast<int>(rng.range(1, 4));
    const SolveResult r = solve_2d_optimal(vs, L, Measure::Entropy);

    std::vector<int> order(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
      return static_cast<__int128>(vs[static_cast<std::size_t>(i)].a) *
                 (vs[static_cast<std::size_t>(j)].a + vs[static_cast<std::size_t>(j)].b) <
             static_cast<__int128>(vs[static_cast<std::size_t>(j)].a) *
                 (vs[static_cast<std::size_t>(i)].a + vs[static_cast<std::size_t>(i)].b);
    });
    std::vector<int> seen;
    for (int idx : order) {
      const int b = r.assignment.bucket_of[static_cast<std::size_t>(idx)];
      if (seen.empty() || seen.back() != b) seen.push_back(b);
    }
    std::vector<int> unique_sorted = seen;
    std::sort(unique_sorted.begin(), unique_sorted.end());
    unique_sorted.erase(std::unique(unique_sorted.begin(), unique_sorted.end()),
                        unique_sorted.end());
    CHECK(seen.size() == unique_sorted.size());  // no bucket appears in two runs
  }
}

TEST_CASE("two-class subroutine pinned examples") {
  {
    std::vector<IntVector> set{{4, 0}, {3, 1}};
    const A2cResult r = a2c(set, 2, Measure::Entropy);
    CHECK(r.assignment.bucket_of[0] != r.assignment.bucket_of[1]);
    CHECK(r.impurity == doctest::Approx(impurity(IntVector{3, 1}, Measure::Entropy)).epsilon(1e-12));
  }
  {
    std::vector<IntVector> set{{4, 0}, {3, 1}, {4, 1}};
    const A2cResult r = a2c(set, 1, Measure::Entropy);
    CHECK(r.assignment.bucket_of == std::vector<int>{0, 0, 0});
    CHECK(r.impurity ==
          doctest::Approx(impurity(IntVector{11, 2}, Measure::Entropy)).epsilon(1e-12));
  }
  {
    std::vector<IntVector> set{{8, 0}, {8, 0}, {2, 1}};
    const A2cResult r = a2c(set, 2, Measure::Entropy);
    CHECK(r.assignment.bucket_of[0] == r.assignment.bucket_of[1]);
    CHECK(r.assignment.bucket_of[2] != r.assignment.bucket_of[0]);
    CHECK(r.impurity == doctest::Approx(impurity(IntVector{2, 1}, Measure::Entropy)).epsilon(1e-12));
  }
}

TEST_CASE("2-impurity scaling is exact by homogeneity") {
  // For an even-mass vector the paper-scale projection has integer entries;
  // the x2-scaled impurity halves to it exactly.
  const IntVector v{6, 2, 2};
  const TwoVector img = chi2c(v);  // (12, 8)
  CHECK(img == TwoVector{12, 8});
  const double scaled = impurity(IntVector{img.a, img.b}, Measure::Entropy);
  const double unscaled = impurity(IntVector{6, 4}, Measure::Entropy);
  CHECK(0.5 * scaled == doctest::Approx(unscaled).epsilon(1e-15));
}

TEST_CASE("pure-set 2-impurity sandwich") {
  Rng rng(909);
  int exercised = 0;
  for (int trial = 0; trial < 400 && exercised < 200; ++trial) {
    const int k = static_cast<int>(rng.range(2, 6));
    const int size = static_cast<int>(rng.range(1, 6));
    const int dom = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    std::vector<IntVector> set;
    for (int i = 0; i < size; ++i) {
      IntVector v(static_cast<std::size_t>(k), 0);
      for (auto& x : v) x = rng.range(0, 6);
      // Force dom to be the (equal-largest, smallest-index) component.
      std::int64_t mx = 0;
      for (auto x : v) mx = std::max(mx, x);
      v[static_cast<std::size_t>(dom)] = std::max<std::int64_t>(mx + (dom > 0 ? 1 : 0), 1);
      set.push_back(std::move(v));
    }
    ++exercised;

    AggregateVector whole = AggregateVector::zero(k);
    for (const auto& v : set) whole.add(v);
    const double true_impurity = impurity(whole, Measure::Entropy);

    TwoVector img_sum{0, 0};
    double singles = 0.0;
    for (const auto& v : set) {
      const TwoVector img = chi2c(v);
      img_sum.a += img.a;
      img_sum.b += img.b;
      singles += impurity(v, Measure::Entropy);
    }
    const double i2 = 0.5 * impurity(IntVector{img_sum.a, img_sum.b}, Measure::Entropy);

    CHECK(0.5 * i2 <= true_impurity * (1 + 1e-9) + 1e-12);
    CHECK(true_impurity <=
          2 * i2 + 4 * std::log2(static_cast<double>(k)) * singles + 1e-9 * (1 + true_impurity));
  }
  CHECK(exercised >= 200);
}
