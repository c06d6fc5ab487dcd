// output.hpp: Tabular records rendered as CSV (RFC-4180 quoting) or JSON lines.
// Numbers are written with 17 significant digits so every double round-trips.

#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "qtr/harness/config.hpp"

namespace qtr::harness {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::size_t column_index(const std::string& name) const;
  double number(std::size_t row, const std::string& column) const;
};

std::string format_number(double value);
std::string csv_escape(const std::string& field);

void write_csv(std::ostream& out, const Table& table);
// One JSON object per record, keys = column names.
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace qtr::harness
