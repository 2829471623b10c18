#include "impart/two_dim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "impart/impurity.hpp"

namespace impart {

TwoVector chi2c(const IntVector& v) {
  std::int64_t l1 = 0;
  std::int64_t linf = 0;
  for (std::int64_t x : v) {
    l1 += x;
    linf = std::max(linf, x);
  }
  if (l1 == 0) throw std::invalid_argument("chi2c of a zero vector is undefined");
  if (2 * linf >= l1) {
    return TwoVector{2 * linf, 2 * (l1 - linf)};
  }
  return TwoVector{l1, l1};
}

namespace {

double two_impurity(std::int64_t a, std::int64_t b, Measure m) {
  const std::int64_t l1 = a + b;
  if (l1 == 0 || a == 0 || b == 0) return 0.0;
  const double l1d = static_cast<double>(l1);
  switch (m) {
    case Measure::Entropy: {
      const double log_l1 = std::log2(l1d);
      return static_cast<double>(a) * (log_l1 - std::log2(static_cast<double>(a))) +
             static_cast<double>(b) * (log_l1 - std::log2(static_cast<double>(b)));
    }
    case Measure::Gini:
      return 2.0 * static_cast<double>(a) * (static_cast<double>(b) / l1d);
  }
  return 0.0;
}

// a1/(a1+b1) < a2/(a2+b2), exactly.
bool key_less(const TwoVector& x, const TwoVector& y) {
  return static_cast<__int128>(x.a) * (y.a + y.b) < static_cast<__int128>(y.a) * (x.a + x.b);
}

}  // namespace

SolveResult solve_2d_optimal(std::span<const TwoVector> vectors, int num_buckets, Measure m) {
  const int n = static_cast<int>(vectors.size());
  if (n == 0) return SolveResult{PartitionAssignment{}, 0.0};
  if (num_buckets < 1) throw std::invalid_argument("need at least one bucket");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return key_less(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)]);
  });

  std::vector<std::int64_t> pa(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> pb(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const TwoVector& v = vectors[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    pa[static_cast<std::size_t>(i) + 1] = pa[static_cast<std::size_t>(i)] + v.a;
    pb[static_cast<std::size_t>(i) + 1] = pb[static_cast<std::size_t>(i)] + v.b;
  }
  auto seg_cost = [&](int lo, int hi) {  // [lo, hi)
    return two_impurity(pa[static_cast<std::size_t>(hi)] - pa[static_cast<std::size_t>(lo)],
                        pb[static_cast<std::size_t>(hi)] - pb[static_cast<std::size_t>(lo)], m);
  };

  const int max_b = std::min(num_buckets, n);
  const double inf = std::numeric_limits<double>::infinity();
  // dp[b][j]: best cost of covering the first j sorted vectors with exactly b segments.
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(max_b) + 1,
                                      std::vector<double>(static_cast<std::size_t>(n) + 1, inf));
  std::vector<std::vector<int>> cut(static_cast<std::size_t>(max_b) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  dp[0][0] = 0.0;
  for (int b = 1; b <= max_b; ++b) {
    for (int j = b; j <= n; ++j) {
      double best = inf;
      int best_i = -1;
      for (int i = b - 1; i < j; ++i) {
        const double prev = dp[static_cast<std::size_t>(b) - 1][static_cast<std::size_t>(i)];
        if (prev == inf) continue;
        const double c = prev + seg_cost(i, j);
        if (c < best) {
          best = c;
          best_i = i;
        }
      }
      dp[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] = best;
      cut[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] = best_i;
    }
  }

  int best_b = 1;
  for (int b = 2; b <= max_b; ++b) {
    if (dp[static_cast<std::size_t>(b)][static_cast<std::size_t>(n)] <
        dp[static_cast<std::size_t>(best_b)][static_cast<std::size_t>(n)]) {
      best_b = b;
    }
  }

  PartitionAssignment p;
  p.bucket_of.assign(static_cast<std::size_t>(n), 0);
  int j = n;
  for (int b = best_b; b >= 1; --b) {
    const int i = cut[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
    for (int r = i; r < j; ++r) {
      p.bucket_of[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = b - 1;
    }
    j = i;
  }
  return SolveResult{std::move(p), dp[static_cast<std::size_t>(best_b)][static_cast<std::size_t>(n)]};
}

A2cResult a2c(std::span<const IntVector> pure_set, int num_buckets, Measure m) {
  const int n = static_cast<int>(pure_set.size());
  A2cResult out;
  if (n == 0) return out;
  if (num_buckets < 1) throw std::invalid_argument("need at least one bucket");

  struct Entry {
    std::int64_t l1;
    std::int64_t linf;
    int index;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::int64_t l1 = 0;
    std::int64_t linf = 0;
    for (std::int64_t x : pure_set[static_cast<std::size_t>(i)]) {
      l1 += x;
      linf = std::max(linf, x);
    }
    entries.push_back(Entry{l1, linf, i});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return ratio_less(x.l1, x.linf, y.l1, y.linf);
  });

  std::vector<TwoVector> images;
  images.reserve(static_cast<std::size_t>(n));
  for (const Entry& e : entries) {
    images.push_back(chi2c(pure_set[static_cast<std::size_t>(e.index)]));
  }
  SolveResult low = solve_2d_optimal(images, num_buckets, m);

  out.i2 = 0.5 * low.impurity;
  out.assignment.bucket_of.assign(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    out.assignment.bucket_of[static_cast<std::size_t>(entries[static_cast<std::size_t>(r)].index)] =
        low.assignment.bucket_of[static_cast<std::size_t>(r)];
  }

  const int dim = static_cast<int>(pure_set.front().size());
  std::vector<AggregateVector> agg(static_cast<std::size_t>(num_buckets),
                                   AggregateVector::zero(dim));
  for (int i = 0; i < n; ++i) {
    agg[static_cast<std::size_t>(out.assignment.bucket_of[static_cast<std::size_t>(i)])].add(
        pure_set[static_cast<std::size_t>(i)]);
  }
  for (const auto& a : agg) out.impurity += impurity(a, m);
  return out;
}

}  // namespace impart
