#ifndef IMPART_IO_HPP
#define IMPART_IO_HPP

#include <iosfwd>
#include <string>

#include "impart/types.hpp"

namespace impart {

enum class InstanceFormat { Json, Csv };

InstanceFormat format_from_name(const std::string& name);

/// Loads a JSON instance file:
///   {"L": 2, "measure": "entropy", "vectors": [[1024,0],[2,1],[0,1]]}
/// Parse and schema violations raise ParseError with line/column; the
/// resulting vectors go through make_instance (zero columns stripped,
/// caps enforced).
InstanceSpec load_instance_json(const std::string& path);
InstanceSpec load_instance_json_text(const std::string& text);

/// Loads a CSV file with one vector per row; L and measure come from the
/// caller (CLI flags).
InstanceSpec load_instance_csv(const std::string& path, int num_buckets, Measure measure);
InstanceSpec load_instance_csv_text(const std::string& text, int num_buckets, Measure measure);

/// Canonical JSON serialization of an instance (fixed key order, no
/// whitespace variance): byte-identical for identical instances.
std::string instance_to_json(const InstanceSpec& inst);

}  // namespace impart

#endif  // IMPART_IO_HPP
