#include "impart/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace impart {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte_pos) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte_pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

InstanceFormat format_from_name(const std::string& name) {
  if (name == "json") return InstanceFormat::Json;
  if (name == "csv") return InstanceFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected 'json' or 'csv')");
}

InstanceSpec load_instance_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("JSON parse error: ") + e.what(), line, col);
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object", 1, 1);
  if (!doc.contains("L") || !doc["L"].is_number_integer()) {
    throw ParseError("missing or non-integer field \"L\"", 1, 1);
  }
  if (!doc.contains("measure") || !doc["measure"].is_string()) {
    throw ParseError("missing or non-string field \"measure\"", 1, 1);
  }
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw ParseError("missing or non-array field \"vectors\"", 1, 1);
  }
  Measure measure;
  try {
    measure = measure_from_name(doc["measure"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  std::vector<IntVector> vectors;
  vectors.reserve(doc["vectors"].size());
  for (std::size_t i = 0; i < doc["vectors"].size(); ++i) {
    const auto& row = doc["vectors"][i];
    if (!row.is_array()) {
      throw ParseError("vectors[" + std::to_string(i) + "] is not an array", 1, 1);
    }
    IntVector v;
    v.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) {
        throw ParseError("non-integer entry in vectors[" + std::to_string(i) + "]", 1, 1);
      }
      v.push_back(cell.get<std::int64_t>());
    }
    vectors.push_back(std::move(v));
  }
  return make_instance(std::move(vectors), doc["L"].get<int>(), measure);
}

InstanceSpec load_instance_json(const std::string& path) {
  return load_instance_json_text(read_file(path));
}

InstanceSpec load_instance_csv_text(const std::string& text, int num_buckets, Measure measure) {
  std::vector<IntVector> vectors;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    IntVector v;
    std::size_t pos = 0;
    int col = 1;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::string field =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        const long long value = std::stoll(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing characters");
        v.push_back(value);
      } catch (const std::exception&) {
        throw ParseError("cannot parse integer field '" + field + "'", line_no, col);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
      col = static_cast<int>(pos) + 1;
    }
    vectors.push_back(std::move(v));
  }
  return make_instance(std::move(vectors), num_buckets, measure);
}

InstanceSpec load_instance_csv(const std::string& path, int num_buckets, Measure measure) {
  return load_instance_csv_text(read_file(path), num_buckets, measure);
}

std::string instance_to_json(const InstanceSpec& inst) {
  std::string out = "{\"L\":" + std::to_string(inst.num_buckets) + ",\"measure\":\"" +
                    measure_name(inst.measure) + "\",\"vectors\":[";
  for (int i = 0; i < inst.n(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    const IntVector& v = inst.vectors[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(v[j]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace impart
