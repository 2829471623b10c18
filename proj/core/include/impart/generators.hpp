#ifndef IMPART_GENERATORS_HPP
#define IMPART_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "impart/types.hpp"

namespace impart {

/// Seeded deterministic stream. Bounded draws are implemented here instead
/// of std::uniform_int_distribution, whose output is implementation
/// defined; fixed seeds must give byte-identical instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct GeneratorParams {
  int n = 6;
  int k = 3;
  std::int64_t coord_max = 8;          // M: random coordinates drawn from [0, M]
  std::int64_t s = 64;                 // scale for tight / tight2 / uniform-l1
  std::vector<std::int64_t> numbers;   // input numbers for the 3part generator
};

/// Known generator kinds: "random", "uniform-l1", "tight", "tight2",
/// "3part". Fixed (kind, params, L, measure, seed) gives a byte-identical
/// instance. "3part" is Entropy-only and ignores the seed.
InstanceSpec generate_instance(const std::string& kind, const GeneratorParams& params,
                               int num_buckets, Measure measure, std::uint64_t seed);

}  // namespace impart

#endif  // IMPART_GENERATORS_HPP
