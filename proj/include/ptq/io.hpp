#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ptq/model.hpp"

namespace ptq::io {

inline constexpr const char* kFormatTag = "ptq-sim v1";

/// Empty cells mark flagged or undefined values.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// One output file: parameters, ordered metadata, a result table and free
/// form diagnostics.
struct Dataset {
  SystemParams params;
  std::vector<std::pair<std::string, std::string>> metadata;
  Table table;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();

  void note(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

/// Shortest round-trip-safe fixed formatting used in every output file.
std::string format_number(double value);

void write_csv(std::ostream& out, const Dataset& data);
void write_json(std::ostream& out, const Dataset& data);

/// Columns re_<name>, im_<name> for a complex value.
void push_complex(std::vector<Cell>& row, Complex value);

}  // namespace ptq::io
