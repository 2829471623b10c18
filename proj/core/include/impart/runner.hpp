#ifndef IMPART_RUNNER_HPP
#define IMPART_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "impart/generators.hpp"
#include "impart/oracle.hpp"
#include "impart/report.hpp"
#include "impart/types.hpp"

namespace impart {

/// Algorithm names accepted by the dispatcher: dom, 2d, pure, pseudo,
/// apoly, oracle.
const std::vector<std::string>& known_algorithms();

struct RunOptions {
  bool attach_oracle = false;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

/// Dispatches one solver on one instance and assembles the full report:
/// recomputed impurity, per-bucket impurities, lower bounds and certified
/// ratio. The reported impurity always comes from partition_impurity on the
/// returned assignment, never from solver internals.
SolverReport run_algorithm(const std::string& algo, const InstanceSpec& inst,
                           const RunOptions& opts = {});

struct BenchConfig {
  std::string suite = "random";  // generator kind
  int count = 10;
  int n_max = 8;
  int k_max = 3;
  int L_max = 3;
  std::int64_t coord_max = 6;
  std::int64_t s = 32;
  Measure measure = Measure::Entropy;
  std::uint64_t seed = 1;
  std::vector<std::string> solvers;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

/// Runs every configured solver on `count` generated instances and writes
/// one CSV row per (instance, solver) plus per-solver max/mean ratio summary
/// rows. An empty solver list yields a header-only CSV.
void run_bench(const BenchConfig& config, std::ostream& out);

}  // namespace impart

#endif  // IMPART_RUNNER_HPP
