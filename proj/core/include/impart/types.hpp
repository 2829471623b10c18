#ifndef IMPART_TYPES_HPP
#define IMPART_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace impart {

/// Impurity measure selector. Both measures use base-2 logarithms and the
/// convention 0 * log(1/0) = 0, so a vector supported on a single coordinate
/// always has impurity exactly 0.
enum class Measure { Gini, Entropy };

std::string measure_name(Measure m);
Measure measure_from_name(const std::string& name);

/// A data point: nonnegative integer counts, one per coordinate.
using IntVector = std::vector<std::int64_t>;

/// Largest admissible single coordinate (2^40). Together with the load-time
/// bound n * k * max_coord <= 2^62 this keeps every exact aggregate sum, and
/// the total mass C, inside int64 range.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 40;
inline constexpr std::int64_t kMaxTotalMass = std::int64_t{1} << 62;

/// Component-wise exact sum of a set of vectors, with the cached statistics
/// every algorithm keys on: l1 = sum of entries, linf = max entry, argmax =
/// the smallest index attaining linf.
struct AggregateVector {
  std::vector<std::int64_t> sums;
  std::int64_t l1 = 0;
  std::int64_t linf = 0;
  int argmax = 0;

  static AggregateVector of(const IntVector& v);
  static AggregateVector zero(int dim);

  void add(const IntVector& v);
  int dim() const { return static_cast<int>(sums.size()); }
  bool is_zero() const { return l1 == 0; }
};

/// Map from vector index to bucket id in [0, L). Empty buckets are legal and
/// contribute impurity 0.
struct PartitionAssignment {
  std::vector<int> bucket_of;

  int size() const { return static_cast<int>(bucket_of.size()); }
  bool operator==(const PartitionAssignment&) const = default;
};

/// A problem instance: n non-null vectors of equal dimension, a bucket count
/// L >= 2 and a measure. Construct through make_instance, which validates,
/// strips all-zero columns and records the column map so reports can name
/// original coordinates.
struct InstanceSpec {
  std::vector<IntVector> vectors;
  int num_buckets = 2;
  Measure measure = Measure::Entropy;

  /// column_map[j] = index of retained column j in the input before all-zero
  /// columns were stripped; original_dim is the pre-strip dimension.
  std::vector<int> column_map;
  int original_dim = 0;

  int n() const { return static_cast<int>(vectors.size()); }
  int dim() const { return vectors.empty() ? 0 : static_cast<int>(vectors.front().size()); }

  /// C = sum of l1 norms over all vectors.
  std::int64_t total_mass() const;

  /// Exact aggregate of the whole instance.
  AggregateVector total() const;
};

InstanceSpec make_instance(std::vector<IntVector> vectors, int num_buckets, Measure measure);

/// Aggregate of one bucket of a partition.
AggregateVector bucket_aggregate(const InstanceSpec& inst, const PartitionAssignment& p, int bucket);

/// Solver output: an assignment plus the impurity the solver claims for it.
/// Reporting layers recompute the impurity from the assignment and never
/// trust this cached value.
struct SolveResult {
  PartitionAssignment assignment;
  double impurity = 0.0;
};

// Error taxonomy. Input and validation problems map to CLI exit code 1,
// infeasibility to exit code 2.

struct InvalidInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPartitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a solver cannot produce a feasible partition, e.g. pure-only
/// with more dominance classes than buckets.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by exhaustive oracles when the enumeration count exceeds the cap.
struct TooLargeError : std::runtime_error {
  TooLargeError(const std::string& what, std::uint64_t count)
      : std::runtime_error(what), enumeration_count(count) {}
  std::uint64_t enumeration_count;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace impart

#endif  // IMPART_TYPES_HPP
