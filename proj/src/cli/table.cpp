#include "abvortex/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace abvortex::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::stod(s);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

void ResultTable::add_row(Row row) {
  if (row.values.size() != columns.size())
    throw std::invalid_argument("row has " + std::to_string(row.values.size()) +
                                " values, schema has " + std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::map<std::string, std::string> ResultTable::metadata_map() const {
  return {metadata.begin(), metadata.end()};
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string to_csv(const ResultTable& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.metadata) out << "# " << key << '=' << value << '\n';
  out << "# column_units=";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i].unit;
  out << '\n';
  for (const auto& c : table.columns) out << c.name << ',';
  out << "status\n";
  for (const auto& row : table.rows) {
    for (double v : row.values) out << format_real(v) << ',';
    out << row.status << '\n';
  }
  return out.str();
}

std::string to_json(const ResultTable& table) {
  std::ostringstream out;
  out << "{\n  \"metadata\": {\n";
  for (const auto& [key, value] : table.metadata)
    out << "    " << quoted(key) << ": " << quoted(value) << ",\n";
  out << "    \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? ", " : "") << quoted(table.columns[i].name);
  out << ", \"status\"],\n    \"column_units\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? ", " : "") << quoted(table.columns[i].unit);
  out << "]\n  },\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n    [" : "\n    [");
    for (double v : table.rows[r].values)
      out << (std::isfinite(v) ? format_real(v) : std::string("null")) << ", ";
    out << quoted(table.rows[r].status) << ']';
  }
  out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

ResultTable parse_csv(const std::string& text) {
  ResultTable t;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> units;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string value = line.substr(eq + 1);
      if (key == "column_units")
        units = split(value, ',');
      else
        t.metadata.emplace_back(key, value);
      continue;
    }
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (!header_seen) {
      header_seen = true;
      if (cells.empty() || cells.back() != "status")
        throw std::runtime_error("CSV header must end with a status column");
      cells.pop_back();
      for (std::size_t i = 0; i < cells.size(); ++i)
        t.columns.push_back({cells[i], i < units.size() ? units[i] : std::string{}});
      continue;
    }
    Row row;
    row.status = cells.back();
    cells.pop_back();
    for (const auto& c : cells) row.values.push_back(parse_real(c));
    t.add_row(std::move(row));
  }
  return t;
}

ResultTable parse_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ResultTable t;
  const auto& meta = j.at("metadata");
  std::vector<std::string> names;
  std::vector<std::string> units;
  for (auto it = meta.begin(); it != meta.end(); ++it) {
    if (it.key() == "columns")
      names = it.value().get<std::vector<std::string>>();
    else if (it.key() == "column_units")
      units = it.value().get<std::vector<std::string>>();
    else
      t.metadata.emplace_back(it.key(), it.value().get<std::string>());
  }
  if (names.empty() || names.back() != "status")
    throw std::runtime_error("JSON columns must end with status");
  names.pop_back();
  for (std::size_t i = 0; i < names.size(); ++i)
    t.columns.push_back({names[i], i < units.size() ? units[i] : std::string{}});
  for (const auto& r : j.at("rows")) {
    Row row;
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      row.values.push_back(r[i].is_null() ? std::numeric_limits<double>::quiet_NaN()
                                          : r[i].get<double>());
    row.status = r.back().get<std::string>();
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace abvortex::cli
