#include "impart/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "impart/dominance.hpp"
#include "impart/entropy_approx.hpp"
#include "impart/impurity.hpp"
#include "impart/two_dim.hpp"

namespace impart {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SolveResult dispatch(const std::string& algo, const InstanceSpec& inst, std::uint64_t oracle_cap) {
  if (algo == "dom") return solve_dominance(inst);
  if (algo == "pure") return solve_pure_only(inst);
  if (algo == "pseudo") return solve_pseudo(inst);
  if (algo == "apoly") return solve_apoly(inst);
  if (algo == "oracle") return brute_force_opt(inst, oracle_cap);
  if (algo == "2d") {
    if (inst.dim() != 2) {
      throw std::invalid_argument("--algo 2d needs a 2-dimensional instance, got k=" +
                                  std::to_string(inst.dim()));
    }
    std::vector<TwoVector> vs;
    vs.reserve(static_cast<std::size_t>(inst.n()));
    for (const auto& v : inst.vectors) vs.push_back(TwoVector{v[0], v[1]});
    return solve_2d_optimal(vs, inst.num_buckets, inst.measure);
  }
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

// The exhaustive direction bound is attached whenever its enumeration is
// clearly cheap.
constexpr std::uint64_t kDirectionBoundBudget = 200'000;

bool direction_bound_cheap(int k, int num_buckets) {
  long double count = std::pow(static_cast<long double>(num_buckets), k);
  return count <= static_cast<long double>(kDirectionBoundBudget);
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{"dom", "2d", "pure", "pseudo", "apoly", "oracle"};
  return names;
}

SolverReport run_algorithm(const std::string& algo, const InstanceSpec& inst,
                           const RunOptions& opts) {
  const Clock::time_point start = Clock::now();
  SolveResult result = dispatch(algo, inst, opts.oracle_cap);
  const double elapsed = ms_since(start);

  SolverReport report;
  report.algorithm = algo;
  report.n = inst.n();
  report.k = inst.dim();
  report.num_buckets = inst.num_buckets;
  report.total_mass = inst.total_mass();
  report.measure = inst.measure;
  report.content_hash = instance_hash(inst);
  report.runtime_ms = elapsed;
  report.assignment = result.assignment.bucket_of;
  report.impurity = partition_impurity(inst, result.assignment);
  report.per_bucket = bucket_impurities(inst, result.assignment);

  for (const auto& v : inst.vectors) report.bounds.singleton_sum += impurity(v, inst.measure);
  if (direction_bound_cheap(inst.dim(), inst.num_buckets)) {
    report.bounds.direction_bound =
        brute_force_directions(inst.total(), inst.num_buckets, inst.measure).cost;
  }
  if (algo == "oracle") {
    report.bounds.oracle_opt = report.impurity;
  } else if (opts.attach_oracle) {
    try {
      report.bounds.oracle_opt = brute_force_opt(inst, opts.oracle_cap).impurity;
    } catch (const TooLargeError&) {
      // Attaching the oracle bound is best effort; leave it absent.
    }
  }

  const double best_lb = report.bounds.best();
  if (best_lb > 0.0) {
    report.certified_ratio = report.impurity / best_lb;
  } else if (report.impurity == 0.0) {
    report.certified_ratio = 1.0;
  }
  return report;
}

void run_bench(const BenchConfig& config, std::ostream& out) {
  out << "instance,generator,n,k,L,measure,solver,impurity,lower_bound,ratio,runtime_ms\n";
  if (config.solvers.empty()) return;

  if (config.measure == Measure::Gini) {
    for (const auto& s : config.solvers) {
      if (s == "pure" || s == "pseudo" || s == "apoly") {
        throw std::invalid_argument("solver '" + s + "' supports the Entropy measure only");
      }
    }
  }

  struct Agg {
    double max_ratio = 0.0;
    double sum_ratio = 0.0;
    double sum_runtime = 0.0;
    double max_runtime = 0.0;
    int count = 0;
  };
  std::vector<Agg> agg(config.solvers.size());

  Rng rng(config.seed);
  const bool want_oracle_bound =
      std::find(config.solvers.begin(), config.solvers.end(), "oracle") != config.solvers.end();

  for (int i = 0; i < config.count; ++i) {
    GeneratorParams params;
    params.coord_max = config.coord_max;
    params.s = config.s;
    int L = 2;
    if (config.suite == "random" || config.suite == "uniform-l1") {
      params.n = static_cast<int>(rng.range(2, config.n_max));
      params.k = static_cast<int>(rng.range(2, config.k_max));
      L = static_cast<int>(rng.range(2, config.L_max));
    } else if (config.suite == "tight" || config.suite == "tight2") {
      params.n = std::max(2, config.n_max);
      params.s = std::int64_t{1} << rng.range(2, 14);
      L = 2;
    } else if (config.suite == "3part") {
      L = static_cast<int>(rng.range(2, config.L_max));
      params.numbers.clear();
      for (int q = 0; q < 3 * L; ++q) params.numbers.push_back(rng.range(1, config.coord_max));
    }
    const InstanceSpec inst =
        generate_instance(config.suite, params, L, config.measure, rng.next());

    double singleton = 0.0;
    for (const auto& v : inst.vectors) singleton += impurity(v, inst.measure);
    double best_lb = singleton;
    if (direction_bound_cheap(inst.dim(), inst.num_buckets)) {
      best_lb = std::max(
          best_lb, brute_force_directions(inst.total(), inst.num_buckets, inst.measure).cost);
    }
    bool have_oracle = false;
    double oracle_value = 0.0;
    double oracle_ms = 0.0;
    if (want_oracle_bound) {
      try {
        const Clock::time_point start = Clock::now();
        oracle_value = run_algorithm("oracle", inst, RunOptions{false, config.oracle_cap}).impurity;
        oracle_ms = ms_since(start);
        have_oracle = true;
        best_lb = std::max(best_lb, oracle_value);
      } catch (const TooLargeError&) {
      }
    }

    for (std::size_t si = 0; si < config.solvers.size(); ++si) {
      const std::string& solver = config.solvers[si];
      std::string impurity_field;
      std::string ratio_field;
      double runtime = 0.0;
      bool ok = false;
      double value = 0.0;
      if (solver == "oracle") {
        ok = have_oracle;
        value = oracle_value;
        runtime = oracle_ms;
      } else {
        try {
          const Clock::time_point start = Clock::now();
          SolveResult r = dispatch(solver, inst, config.oracle_cap);
          runtime = ms_since(start);
          value = partition_impurity(inst, r.assignment);
          ok = true;
        } catch (const InfeasibleError&) {
        } catch (const std::invalid_argument&) {
        }
      }
      if (ok) {
        impurity_field = format_real(value);
        if (best_lb > 0.0) {
          const double ratio = value / best_lb;
          ratio_field = format_real(ratio);
          agg[si].max_ratio = std::max(agg[si].max_ratio, ratio);
          agg[si].sum_ratio += ratio;
          ++agg[si].count;
        } else if (value == 0.0) {
          ratio_field = format_real(1.0);
          agg[si].max_ratio = std::max(agg[si].max_ratio, 1.0);
          agg[si].sum_ratio += 1.0;
          ++agg[si].count;
        }
        agg[si].sum_runtime += runtime;
        agg[si].max_runtime = std::max(agg[si].max_runtime, runtime);
      }
      out << i << ',' << config.suite << ',' << inst.n() << ',' << inst.dim() << ','
          << inst.num_buckets << ',' << measure_name(inst.measure) << ',' << solver << ','
          << impurity_field << ',' << format_real(best_lb) << ',' << ratio_field << ','
          << format_real(runtime) << '\n';
    }
  }

  for (std::size_t si = 0; si < config.solvers.size(); ++si) {
    const Agg& a = agg[si];
    out << "max,,,,,," << config.solvers[si] << ",,,"
        << (a.count > 0 ? format_real(a.max_ratio) : "") << ',' << format_real(a.max_runtime)
        << '\n';
    out << "mean,,,,,," << config.solvers[si] << ",,,"
        << (a.count > 0 ? format_real(a.sum_ratio / a.count) : "") << ','
        << (a.count > 0 ? format_real(a.sum_runtime / a.count) : "") << '\n';
  }
}

}  // namespace impart
