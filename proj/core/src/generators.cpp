#include "impart/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "impart/oracle.hpp"

namespace impart {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty draw range");
  // Rejection sampling over the largest multiple of bound, so the draw is
  // exactly uniform and the consumed stream is deterministic.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty draw range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

namespace {

std::vector<IntVector> gen_random(const GeneratorParams& p, Rng& rng) {
  if (p.n < 1 || p.k < 1 || p.coord_max < 1) {
    throw InvalidInstanceError("random generator needs n >= 1, k >= 1, coord max >= 1");
  }
  std::vector<IntVector> vs(static_cast<std::size_t>(p.n));
  for (auto& v : vs) {
    do {
      v.assign(static_cast<std::size_t>(p.k), 0);
      for (auto& x : v) x = rng.range(0, p.coord_max);
    } while (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }));
  }
  // Patch all-zero columns so instances keep their nominal dimension.
  for (int j = 0; j < p.k; ++j) {
    bool nonzero = false;
    for (const auto& v : vs) nonzero = nonzero || v[static_cast<std::size_t>(j)] != 0;
    if (!nonzero) {
      const std::size_t r = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(p.n)));
      vs[r][static_cast<std::size_t>(j)] = rng.range(1, p.coord_max);
    }
  }
  return vs;
}

std::vector<IntVector> gen_uniform_l1(const GeneratorParams& p, Rng& rng) {
  if (p.n < 1 || p.k < 1 || p.s < 1) {
    throw InvalidInstanceError("uniform-l1 generator needs n >= 1, k >= 1, s >= 1");
  }
  std::vector<IntVector> vs(static_cast<std::size_t>(p.n));
  for (auto& v : vs) {
    // Random weak composition of s into k parts: k-1 sorted cut points.
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(p.k) - 1);
    for (auto& c : cuts) c = rng.range(0, p.s);
    std::sort(cuts.begin(), cuts.end());
    v.reserve(static_cast<std::size_t>(p.k));
    std::int64_t prev = 0;
    for (std::int64_t c : cuts) {
      v.push_back(c - prev);
      prev = c;
    }
    v.push_back(p.s - prev);
  }
  // Repair all-zero columns without changing any l1 norm: shift one unit
  // from the largest coordinate of a chosen vector into the empty column.
  for (int j = 0; j < p.k; ++j) {
    bool nonzero = false;
    for (const auto& v : vs) nonzero = nonzero || v[static_cast<std::size_t>(j)] != 0;
    if (nonzero) continue;
    const std::size_t r = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(p.n)));
    auto& v = vs[r];
    const std::size_t arg = static_cast<std::size_t>(
        std::max_element(v.begin(), v.end()) - v.begin());
    v[arg] -= 1;
    v[static_cast<std::size_t>(j)] += 1;
  }
  return vs;
}

std::vector<IntVector> gen_tight(const GeneratorParams& p) {
  if (p.s < 2) throw InvalidInstanceError("tight generator needs s >= 2");
  return {{p.s, 0}, {2, 1}, {0, 1}};
}

std::vector<IntVector> gen_tight2(const GeneratorParams& p) {
  if (p.n < 2 || p.s < 2) throw InvalidInstanceError("tight2 generator needs n >= 2, s >= 2");
  std::vector<IntVector> vs(static_cast<std::size_t>(p.n) - 1, IntVector{p.s, 0});
  vs.push_back(IntVector{p.s, p.s / 2});
  return vs;
}

}  // namespace

InstanceSpec generate_instance(const std::string& kind, const GeneratorParams& params,
                               int num_buckets, Measure measure, std::uint64_t seed) {
  if (kind == "3part") {
    if (measure != Measure::Entropy) {
      throw InvalidInstanceError("the 3part generator defines an Entropy instance");
    }
    if (params.numbers.empty()) {
      throw InvalidInstanceError("the 3part generator needs --numbers");
    }
    return reduce_3partition(params.numbers, num_buckets).instance;
  }
  Rng rng(seed);
  std::vector<IntVector> vs;
  if (kind == "random") {
    vs = gen_random(params, rng);
  } else if (kind == "uniform-l1") {
    vs = gen_uniform_l1(params, rng);
  } else if (kind == "tight") {
    vs = gen_tight(params);
  } else if (kind == "tight2") {
    vs = gen_tight2(params);
  } else {
    throw InvalidInstanceError("unknown generator '" + kind + "'");
  }
  return make_instance(std::move(vs), num_buckets, measure);
}

}  // namespace impart
