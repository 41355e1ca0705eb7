#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace creutz {

// Column-named table of numeric rows, the common currency of the CLI.
// Doubles print with round-trip-safe precision; non-finite values print as
// inf/-inf/nan in CSV and as strings in JSON.
struct Cell {
  std::variant<std::int64_t, double, std::string> value;

  Cell(int v) : value(static_cast<std::int64_t>(v)) {}
  Cell(std::int64_t v) : value(v) {}
  Cell(double v) : value(v) {}
  Cell(bool v) : value(static_cast<std::int64_t>(v ? 1 : 0)) {}
  Cell(std::string v) : value(std::move(v)) {}
  Cell(const char* v) : value(std::string(v)) {}
};

struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells);
};

// 17 significant digits, enough to reconstruct the exact double.
std::string format_double(double x);

std::string to_csv(const DataTable& table);
std::string to_json(const DataTable& table);

// Parses CSV produced by to_csv back into a table (numbers only become
// doubles/ints by syntax). Used for round-trip checks and golden tests.
DataTable parse_csv(const std::string& text);

void write_table(std::ostream& os, const DataTable& table, bool json);

}  // namespace creutz
