#include "impart/report.hpp"

#include <algorithm>
#include <cstdio>

namespace impart {

double LowerBounds::best() const {
  double b = singleton_sum;
  if (direction_bound.has_value()) b = std::max(b, *direction_bound);
  if (oracle_opt.has_value()) b = std::max(b, *oracle_opt);
  return b;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string instance_hash(const InstanceSpec& inst) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset basis
  auto mix = [&h](std::uint64_t x) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(inst.n()));
  mix(static_cast<std::uint64_t>(inst.dim()));
  mix(static_cast<std::uint64_t>(inst.num_buckets));
  mix(inst.measure == Measure::Gini ? 1 : 2);
  for (const auto& v : inst.vectors) {
    for (std::int64_t x : v) mix(static_cast<std::uint64_t>(x));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string SolverReport::to_json() const {
  std::string out;
  out.reserve(256 + assignment.size() * 4);
  out += "{\"algorithm\":\"" + algorithm + "\",";
  out += "\"instance\":{\"n\":" + std::to_string(n) + ",\"k\":" + std::to_string(k) +
         ",\"L\":" + std::to_string(num_buckets) + ",\"C\":" + std::to_string(total_mass) +
         ",\"measure\":\"" + measure_name(measure) + "\",\"hash\":\"" + content_hash + "\"},";
  out += "\"impurity\":" + format_real(impurity) + ",";
  out += "\"per_bucket_impurity\":[";
  for (std::size_t i = 0; i < per_bucket.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(per_bucket[i]);
  }
  out += "],\"assignment\":[";
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(assignment[i]);
  }
  out += "],\"lower_bounds\":{\"singleton_sum\":" + format_real(bounds.singleton_sum);
  out += ",\"direction_bound\":";
  out += bounds.direction_bound.has_value() ? format_real(*bounds.direction_bound) : "null";
  out += ",\"oracle_opt\":";
  out += bounds.oracle_opt.has_value() ? format_real(*bounds.oracle_opt) : "null";
  out += "},\"certified_ratio\":";
  out += certified_ratio.has_value() ? format_real(*certified_ratio) : "null";
  out += "}";
  return out;
}

}  // namespace impart
