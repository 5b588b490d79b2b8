#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spinsq/errors.hpp"
#include "spinsq/version.hpp"

namespace spinsq {

// Row-oriented result table with a fixed column schema. Undefined marks
// quantities that have no value at a grid point (NA in CSV, null in JSON);
// it is distinct from NaN, which never appears in output.

struct Undefined {};

using Cell = std::variant<std::int64_t, double, std::string, Undefined>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Shortest-unambiguous formatting is not enough for byte-stable artifacts
// across libc versions; 17 significant digits round-trip any double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_string(const Cell& cell) {
  if (std::holds_alternative<Undefined>(cell)) return "NA";
  if (const auto* i = std::get_if<std::int64_t>(&cell))
    return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  return std::get<std::string>(cell);
}

inline std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw domain_error("to_csv: row width does not match schema");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

using Metadata = std::vector<std::pair<std::string, std::string>>;

inline std::string to_json(const Table& table, const Metadata& config_echo) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json meta;
  meta["version"] = kVersion;
  meta["energy_unit"] = kEnergyUnit;
  meta["time_unit"] = kTimeUnit;
  nlohmann::ordered_json cfg;
  for (const auto& [key, value] : config_echo) cfg[key] = value;
  meta["config"] = std::move(cfg);
  root["metadata"] = std::move(meta);
  root["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw domain_error("to_json: row width does not match schema");
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Cell& cell = row[c];
      if (std::holds_alternative<Undefined>(cell))
        obj[table.columns[c]] = nullptr;
      else if (const auto* i = std::get_if<std::int64_t>(&cell))
        obj[table.columns[c]] = *i;
      else if (const auto* d = std::get_if<double>(&cell))
        obj[table.columns[c]] = *d;
      else
        obj[table.columns[c]] = std::get<std::string>(cell);
    }
    rows.push_back(std::move(obj));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace spinsq
