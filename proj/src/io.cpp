#include "ptq/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ptq/error.hpp"

namespace ptq::io {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw Error(ErrorCode::InvalidArgument, "row width " + std::to_string(row.size()) + " != " +
                                                std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  if (!std::isfinite(value)) return "";
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void push_complex(std::vector<Cell>& row, Complex value) {
  row.emplace_back(value.real());
  row.emplace_back(value.imag());
}

namespace {

std::string params_line(const SystemParams& p) {
  return "omega=" + format_number(p.omega) + ",j=" + format_number(p.j) + ",gamma=" + format_number(p.gamma);
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v == 0.0 ? 0.0 : v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void write_csv(std::ostream& out, const Dataset& data) {
  out << "# " << kFormatTag << '\n';
  out << "# params: " << params_line(data.params) << '\n';
  for (const auto& [key, value] : data.metadata) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < data.table.columns.size(); ++i)
    out << (i ? "," : "") << data.table.columns[i];
  out << '\n';
  for (const auto& row : data.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Dataset& data) {
  nlohmann::ordered_json doc;
  doc["format"] = kFormatTag;
  doc["params"] = {{"omega", data.params.omega}, {"j", data.params.j}, {"gamma", data.params.gamma}};

  nlohmann::ordered_json results;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : data.metadata) meta[key] = value;
  results["metadata"] = meta;
  results["columns"] = data.table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : data.table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[data.table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  results["rows"] = std::move(rows);
  doc["results"] = std::move(results);
  doc["diagnostics"] = data.diagnostics;
  out << doc.dump(2) << '\n';
}

}  // namespace ptq::io
