// impart: solvers and benchmarks for minimum-impurity partitioning of
// nonnegative integer count vectors.
//
// Exit codes: 0 success, 1 input/usage error, 2 infeasible.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "impart/io.hpp"
#include "impart/runner.hpp"

namespace {

std::uint64_t oracle_cap_from_env() {
  const char* env = std::getenv("IMPURITY_MAX_ORACLE");
  if (env == nullptr || *env == '\0') return impart::kDefaultOracleCap;
  try {
    return static_cast<std::uint64_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw std::invalid_argument("IMPURITY_MAX_ORACLE is not a valid integer");
  }
}

std::vector<std::int64_t> parse_number_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    out.push_back(std::stoll(field));
  }
  return out;
}

struct RunFlags {
  std::string algo;
  std::string input;
  std::string format = "json";
  std::string gen;
  std::string measure = "entropy";
  std::string numbers;
  std::string save_instance;
  int L = 2;
  int n = 6;
  int k = 3;
  std::int64_t coord_max = 8;
  std::int64_t s = 64;
  std::uint64_t seed = 0;
  bool attach_oracle = false;
};

impart::InstanceSpec load_or_generate(const RunFlags& f) {
  if (!f.input.empty() && !f.gen.empty()) {
    throw std::invalid_argument("--input and --gen are mutually exclusive");
  }
  if (f.input.empty() && f.gen.empty()) {
    throw std::invalid_argument("one of --input or --gen is required");
  }
  const impart::Measure m = impart::measure_from_name(f.measure);
  if (!f.input.empty()) {
    switch (impart::format_from_name(f.format)) {
      case impart::InstanceFormat::Json:
        return impart::load_instance_json(f.input);
      case impart::InstanceFormat::Csv:
        return impart::load_instance_csv(f.input, f.L, m);
    }
  }
  impart::GeneratorParams params;
  params.n = f.n;
  params.k = f.k;
  params.coord_max = f.coord_max;
  params.s = f.s;
  if (!f.numbers.empty()) params.numbers = parse_number_list(f.numbers);
  return impart::generate_instance(f.gen, params, f.L, m, f.seed);
}

int run_command(const RunFlags& f) {
  const impart::InstanceSpec inst = load_or_generate(f);
  if (!f.save_instance.empty()) {
    std::ofstream out(f.save_instance, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + f.save_instance + "'");
    out << impart::instance_to_json(inst) << '\n';
  }
  impart::RunOptions opts;
  opts.attach_oracle = f.attach_oracle;
  opts.oracle_cap = oracle_cap_from_env();
  const impart::SolverReport report = impart::run_algorithm(f.algo, inst, opts);
  std::cout << report.to_json() << std::endl;
  std::cerr << "runtime_ms " << impart::format_real(report.runtime_ms) << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-impurity partitioning solvers"};
  app.require_subcommand(1);

  RunFlags rf;
  CLI::App* run = app.add_subcommand("run", "solve one instance and print a JSON report");
  run->add_option("--algo", rf.algo, "solver: dom|2d|pure|pseudo|apoly|oracle")->required();
  run->add_option("--input", rf.input, "instance file path");
  run->add_option("--format", rf.format, "input format: json|csv (default json)");
  run->add_option("--gen", rf.gen, "generator: random|uniform-l1|tight|tight2|3part");
  run->add_option("--L", rf.L, "bucket count (csv input and generators)");
  run->add_option("--measure", rf.measure, "impurity measure: entropy|gini");
  run->add_option("--seed", rf.seed, "generator seed");
  run->add_option("--n", rf.n, "generator: number of vectors");
  run->add_option("--k", rf.k, "generator: dimension");
  run->add_option("--M", rf.coord_max, "generator: max coordinate");
  run->add_option("--s", rf.s, "generator: scale for tight/tight2/uniform-l1");
  run->add_option("--numbers", rf.numbers, "generator 3part: comma-separated numbers");
  run->add_option("--save-instance", rf.save_instance, "write the canonical instance JSON here");
  run->add_flag("--oracle", rf.attach_oracle, "attach the brute-force lower bound when feasible");

  impart::BenchConfig bc;
  std::string bench_measure = "entropy";
  std::string bench_solvers;
  CLI::App* bench = app.add_subcommand("bench", "run a solver comparison suite, CSV on stdout");
  bench->add_option("--suite", bc.suite, "generator kind for the suite (default random)");
  bench->add_option("--count", bc.count, "number of instances");
  bench->add_option("--n-max", bc.n_max, "max n per instance");
  bench->add_option("--k-max", bc.k_max, "max k per instance");
  bench->add_option("--L-max", bc.L_max, "max L per instance");
  bench->add_option("--coord-max", bc.coord_max, "max coordinate");
  bench->add_option("--s", bc.s, "l1 norm for uniform-l1 suites");
  bench->add_option("--seed", bc.seed, "suite seed");
  bench->add_option("--measure", bench_measure, "impurity measure: entropy|gini");
  bench->add_option("--solvers", bench_solvers, "comma-separated solver list (may be empty)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run->parsed()) {
      bool known = false;
      for (const auto& name : impart::known_algorithms()) known = known || name == rf.algo;
      if (!known) throw std::invalid_argument("unknown algorithm '" + rf.algo + "'");
      if (rf.measure == "gini" && (rf.algo == "pure" || rf.algo == "pseudo" || rf.algo == "apoly")) {
        throw std::invalid_argument("--algo " + rf.algo +
                                    " supports the Entropy measure only (unsupported combination)");
      }
      return run_command(rf);
    }
    bc.measure = impart::measure_from_name(bench_measure);
    bc.oracle_cap = oracle_cap_from_env();
    if (!bench_solvers.empty()) {
      std::istringstream in(bench_solvers);
      std::string field;
      while (std::getline(in, field, ',')) bc.solvers.push_back(field);
    }
    impart::run_bench(bc, std::cout);
    return 0;
  } catch (const impart::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << std::endl;
    return 2;
  } catch (const impart::TooLargeError& e) {
    std::cerr << "instance too large: " << e.what() << std::endl;
    return 1;
  } catch (const impart::ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
              << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
