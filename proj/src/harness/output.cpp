#include "qtr/harness/output.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "qtr/errors.hpp"

namespace qtr::harness {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw NumericalError("table row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw ValidationError("column", "no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

double Table::number(std::size_t row, const std::string& column) const {
  return std::get<double>(rows.at(row).at(column_index(column)));
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        out << format_number(*d);
      } else {
        out << csv_escape(std::get<std::string>(row[i]));
      }
    }
    out << "\r\n";
  }
}

void write_json(std::ostream& out, const Table& table) {
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    out << obj.dump() << '\n';
  }
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

}  // namespace qtr::harness
