#include "creutz/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "creutz/errors.hpp"

namespace creutz {

void DataTable::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns.size())
    throw invalid_input_error("table row width does not match the column count");
  rows.push_back(std::move(cells));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell.value)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell.value)) return format_double(*d);
  return std::get<std::string>(cell.value);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell.value)) return *i;
  if (const auto* d = std::get_if<double>(&cell.value)) {
    if (std::isfinite(*d)) return *d;
    return format_double(*d);  // JSON has no inf/nan literals
  }
  return std::get<std::string>(cell.value);
}

}  // namespace

std::string to_csv(const DataTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << cell_text(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const DataTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

DataTable parse_csv(const std::string& text) {
  DataTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (header) {
      table.columns = fields;
      header = false;
      continue;
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) {
      char* end = nullptr;
      const double d = std::strtod(f.c_str(), &end);
      const bool numeric = end != f.c_str() && *end == '\0' && !f.empty();
      if (!numeric) {
        row.emplace_back(f);
      } else if (f.find_first_of(".eE") == std::string::npos && std::abs(d) < 9.2e18 &&
                 f.find("inf") == std::string::npos && f.find("nan") == std::string::npos) {
        row.emplace_back(static_cast<std::int64_t>(std::strtoll(f.c_str(), nullptr, 10)));
      } else {
        row.emplace_back(d);
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

void write_table(std::ostream& os, const DataTable& table, bool json) {
  os << (json ? to_json(table) : to_csv(table));
}

}  // namespace creutz
