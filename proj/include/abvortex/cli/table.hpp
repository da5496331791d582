#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace abvortex::cli {

struct Column {
  std::string name;
  std::string unit;
  bool operator==(const Column&) const = default;
};

/// One row of reals plus a status ("ok", or the reason the row failed).
struct Row {
  std::vector<double> values;
  std::string status = "ok";
};

struct ResultTable {
  std::vector<Column> columns;
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws std::invalid_argument when the arity does not match the schema.
  void add_row(Row row);
  std::map<std::string, std::string> metadata_map() const;
};

/// 17 significant digits, scientific, '.' separator; "nan"/"inf" spelled out.
std::string format_real(double v);

std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);

ResultTable parse_csv(const std::string& text);
ResultTable parse_json(const std::string& text);

}  // namespace abvortex::cli
