#ifndef INFLUGAME_TABLE_HPP
#define INFLUGAME_TABLE_HPP

#include <cfenv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace influgame {

/// Fixed-point decimal with round-half-to-even at the requested precision.
inline std::string format_fixed(double v, int digits) {
  if (digits < 0 || digits > 12) throw std::invalid_argument("bad precision");
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite table value");
  double scale = 1.0;
  for (int i = 0; i < digits; ++i) scale *= 10.0;
  // nearbyint under FE_TONEAREST rounds halfway cases to even
  const auto units = static_cast<std::int64_t>(std::nearbyint(v * scale));
  const bool neg = units < 0;
  std::uint64_t mag = neg ? -static_cast<std::uint64_t>(units) : units;
  std::string digits_str = std::to_string(mag);
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  std::string out;
  if (neg) out += '-';
  out += digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) {
    out += '.';
    out += digits_str.substr(digits_str.size() - digits);
  }
  return out;
}

struct Column {
  std::string name;
  std::vector<double> values;
  int precision = 4;
};

/// Named measure columns per node; the unit of CLI output.
struct CentralityTable {
  std::vector<std::string> row_labels;
  std::vector<Column> columns;

  void add_column(std::string name, std::vector<double> values, int precision) {
    if (values.size() != row_labels.size())
      throw std::invalid_argument("column length does not match row count");
    columns.push_back({std::move(name), std::move(values), precision});
  }
};

namespace detail {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string to_csv(const CentralityTable& table) {
  std::ostringstream out;
  out << "node";
  for (const Column& c : table.columns) out << "," << detail::csv_escape(c.name);
  out << "\n";
  for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
    out << detail::csv_escape(table.row_labels[r]);
    for (const Column& c : table.columns)
      out << "," << format_fixed(c.values[r], c.precision);
    out << "\n";
  }
  return out.str();
}

inline std::string to_markdown(const CentralityTable& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"node"};
  for (const Column& c : table.columns) header.push_back(c.name);
  cells.push_back(header);
  for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
    std::vector<std::string> row{table.row_labels[r]};
    for (const Column& c : table.columns)
      row.push_back(format_fixed(c.values[r], c.precision));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    out << "|";
    for (std::size_t i = 0; i < row.size(); ++i)
      out << " " << row[i] << std::string(width[i] - row[i].size(), ' ') << " |";
    out << "\n";
  };
  emit_row(cells[0]);
  out << "|";
  for (std::size_t i = 0; i < width.size(); ++i)
    out << std::string(width[i] + 2, '-') << "|";
  out << "\n";
  for (std::size_t r = 1; r < cells.size(); ++r) emit_row(cells[r]);
  return out.str();
}

}  // namespace influgame

#endif  // INFLUGAME_TABLE_HPP
