#ifndef IMPART_REPORT_HPP
#define IMPART_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "impart/types.hpp"

namespace impart {

/// Lower bounds attached to a report. singleton_sum (sum of single-vector
/// impurities) is always available; the direction bound is computed when the
/// exhaustive direction search is cheap; the oracle bound when requested and
/// feasible.
struct LowerBounds {
  double singleton_sum = 0.0;
  std::optional<double> direction_bound;
  std::optional<double> oracle_opt;

  double best() const;
};

struct SolverReport {
  std::string algorithm;

  // Instance fingerprint.
  int n = 0;
  int k = 0;
  int num_buckets = 0;
  std::int64_t total_mass = 0;
  Measure measure = Measure::Entropy;
  std::string content_hash;

  double impurity = 0.0;
  std::vector<int> assignment;
  std::vector<double> per_bucket;
  LowerBounds bounds;
  /// impurity / best lower bound; absent when the best lower bound is 0 and
  /// the impurity is not.
  std::optional<double> certified_ratio;

  /// Wall-clock solve time. Deliberately not part of the JSON serialization
  /// so that fixed inputs give byte-identical reports; the CLI prints it on
  /// stderr instead.
  double runtime_ms = 0.0;

  /// Fixed key order, reals with 12 significant digits.
  std::string to_json() const;
};

/// 12-significant-digit decimal form used everywhere reals are printed.
std::string format_real(double x);

/// FNV-1a fingerprint over (n, k, L, measure, coordinates).
std::string instance_hash(const InstanceSpec& inst);

}  // namespace impart

#endif  // IMPART_REPORT_HPP
