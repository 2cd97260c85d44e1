#ifndef INFLUGAME_REPRODUCE_HPP
#define INFLUGAME_REPRODUCE_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "influgame/classical.hpp"
#include "influgame/datasets.hpp"
#include "influgame/exact.hpp"
#include "influgame/netformat.hpp"
#include "influgame/table.hpp"

namespace influgame {

/// Reference values for the bundled case studies, stored as printed strings
/// so that each cell carries its own precision.
struct GoldenTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_names;
  std::vector<std::vector<std::string>> cells;  // [row][col]
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

}  // namespace detail

inline GoldenTable parse_golden_csv(const std::string& text) {
  GoldenTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty reference table");
  auto header = detail::split_csv_line(line);
  if (header.size() < 2 || header[0] != "node")
    throw DataError("reference table header must start with 'node'");
  table.col_names.assign(header.begin() + 1, header.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != header.size())
      throw DataError("reference table row has wrong field count");
    table.row_labels.push_back(fields[0]);
    table.cells.emplace_back(fields.begin() + 1, fields.end());
  }
  return table;
}

inline GoldenTable load_golden_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open reference table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_golden_csv(buf.str());
}

/// Number of digits after the decimal point in a printed value.
inline int printed_decimals(const std::string& cell) {
  const auto dot = cell.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(cell.size() - dot - 1);
}

/// One computed cell checked against its reference string. A cell matches
/// when the computed value is within half a unit in the last printed digit
/// of the reference (the tightest claim a printed value can make).
struct CellCheck {
  std::string row;
  std::string col;
  std::string expected;
  double actual = 0.0;
  double tolerance = 0.0;
  bool match = false;
};

struct CompareReport {
  std::vector<CellCheck> checks;  // row-major, all cells
  int mismatches = 0;
};

inline CompareReport compare_table(const CentralityTable& computed,
                                   const GoldenTable& golden) {
  if (computed.row_labels != golden.row_labels)
    throw DataError("computed and reference tables have different rows");
  if (computed.columns.size() != golden.col_names.size())
    throw DataError("computed and reference tables have different column counts");
  for (std::size_t c = 0; c < computed.columns.size(); ++c)
    if (computed.columns[c].name != golden.col_names[c])
      throw DataError("column name mismatch: " + computed.columns[c].name + " vs " +
                      golden.col_names[c]);
  CompareReport report;
  for (std::size_t r = 0; r < golden.row_labels.size(); ++r) {
    for (std::size_t c = 0; c < golden.col_names.size(); ++c) {
      CellCheck check;
      check.row = golden.row_labels[r];
      check.col = golden.col_names[c];
      check.expected = golden.cells[r][c];
      check.actual = computed.columns[c].values[r];
      const int d = printed_decimals(check.expected);
      check.tolerance = 0.5 * std::pow(10.0, -d);
      const double expected = std::strtod(check.expected.c_str(), nullptr);
      // Tiny slack so exact-half cases rounded the other way still pass.
      check.match = std::fabs(check.actual - expected) <= check.tolerance + 1e-12;
      if (!check.match) ++report.mismatches;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

namespace detail {

struct CaseColumns {
  std::vector<double> bz, ss, ce, cs;
};

inline CaseColumns case_columns(const GameReport& report) {
  return {banzhaf(report), shapley_shubik(report), effort_centrality(report),
          satisfaction(report)};
}

}  // namespace detail

/// Full measure table for the monkeys network: classical measures plus the
/// four game measures under each of the four threshold cases.
inline CentralityTable build_monkeys_table(const std::string& data_dir,
                                           int workers = 1) {
  EnumerateOptions opt;
  opt.workers = workers;
  std::vector<detail::CaseColumns> cases;
  InfluenceGraph base = load_builtin("monkeys", "C1", data_dir).graph();
  for (const char* c : {"C1", "C2", "C3", "C4"})
    cases.push_back(
        detail::case_columns(enumerate_coalitions(load_builtin("monkeys", c, data_dir), opt)));
  CentralityTable t;
  t.row_labels = base.labels();
  t.add_column("CD", degree_centrality(base, Direction::In), 2);
  t.add_column("CC", closeness_centrality(base), 3);
  t.add_column("CB", betweenness_centrality(base, EndpointPolicy::Exclude), 3);
  const int bz_prec[] = {2, 3, 4, 4};
  const int ss_prec[] = {2, 3, 3, 3};
  const int ce_prec[] = {1, 2, 2, 0};
  for (int k = 0; k < 4; ++k)
    t.add_column("Bz-C" + std::to_string(k + 1), cases[k].bz, bz_prec[k]);
  for (int k = 0; k < 4; ++k)
    t.add_column("SS-C" + std::to_string(k + 1), cases[k].ss, ss_prec[k]);
  for (int k = 0; k < 4; ++k)
    t.add_column("CE-C" + std::to_string(k + 1), cases[k].ce, ce_prec[k]);
  for (int k = 0; k < 4; ++k)
    t.add_column("CS-C" + std::to_string(k + 1), cases[k].cs, 3);
  return t;
}

/// Full measure table for the dining-table partners network (three constant
/// threshold cases).
inline CentralityTable build_dining_table(const std::string& data_dir,
                                          int workers = 1) {
  EnumerateOptions opt;
  opt.workers = workers;
  std::vector<detail::CaseColumns> cases;
  InfluenceGraph base = load_builtin("dining", "C1", data_dir).graph();
  for (const char* c : {"C1", "C2", "C3"})
    cases.push_back(
        detail::case_columns(enumerate_coalitions(load_builtin("dining", c, data_dir), opt)));
  CentralityTable t;
  t.row_labels = base.labels();
  t.add_column("CDin", degree_centrality(base, Direction::In), 2);
  t.add_column("CDout", degree_centrality(base, Direction::Out), 2);
  t.add_column("CC", closeness_centrality(base), 4);
  t.add_column("CB", betweenness_centrality(base, EndpointPolicy::Include), 3);
  const int bz_prec[] = {2, 3, 4};
  const int cs_prec[] = {6, 4, 4};
  for (int k = 0; k < 3; ++k)
    t.add_column("Bz-C" + std::to_string(k + 1), cases[k].bz, bz_prec[k]);
  for (int k = 0; k < 3; ++k)
    t.add_column("SS-C" + std::to_string(k + 1), cases[k].ss, 4);
  for (int k = 0; k < 3; ++k)
    t.add_column("CE-C" + std::to_string(k + 1), cases[k].ce, 2);
  for (int k = 0; k < 3; ++k)
    t.add_column("CS-C" + std::to_string(k + 1), cases[k].cs, cs_prec[k]);
  return t;
}

/// Full measure table for the student government network (single case).
inline CentralityTable build_studentgov_table(const std::string& data_dir,
                                              int workers = 1) {
  EnumerateOptions opt;
  opt.workers = workers;
  const InfluenceGame game = load_builtin("studentgov", "C1", data_dir);
  const InfluenceGraph& base = game.graph();
  const auto cols = detail::case_columns(enumerate_coalitions(game, opt));
  CentralityTable t;
  t.row_labels = base.labels();
  t.add_column("CDin", degree_centrality(base, Direction::In), 1);
  t.add_column("CDout", degree_centrality(base, Direction::Out), 1);
  t.add_column("CC", closeness_centrality(base), 3);
  t.add_column("CB", betweenness_centrality(base, EndpointPolicy::Include), 3);
  t.add_column("Bz", cols.bz, 3);
  t.add_column("SS", cols.ss, 3);
  t.add_column("CE", cols.ce, 2);
  t.add_column("CS", cols.cs, 3);
  return t;
}

inline CentralityTable build_reference_table(const std::string& dataset,
                                             const std::string& data_dir,
                                             int workers = 1) {
  if (dataset == "monkeys") return build_monkeys_table(data_dir, workers);
  if (dataset == "dining") return build_dining_table(data_dir, workers);
  if (dataset == "studentgov") return build_studentgov_table(data_dir, workers);
  throw DataError("unknown dataset '" + dataset +
                  "' (expected monkeys, dining, or studentgov)");
}

struct ReproduceResult {
  CentralityTable computed;
  GoldenTable golden;
  CompareReport report;
  std::string text;  // deterministic, byte-stable report
};

/// Recomputes a case-study table and diffs it against the bundled reference
/// values. The textual report is byte-identical for any worker count.
inline ReproduceResult reproduce_table(const std::string& dataset,
                                       const std::string& data_dir,
                                       int workers = 1) {
  ReproduceResult result;
  result.computed = build_reference_table(dataset, data_dir, workers);
  result.golden = load_golden_csv(data_dir + "/golden/" + dataset + ".csv");
  result.report = compare_table(result.computed, result.golden);
  std::ostringstream out;
  out << "dataset " << dataset << "\n";
  out << to_csv(result.computed);
  for (const CellCheck& c : result.report.checks) {
    if (c.match) continue;
    out << "diff node=" << c.row << " col=" << c.col << " expected=" << c.expected
        << " actual=" << format_fixed(c.actual, printed_decimals(c.expected) + 4)
        << "\n";
  }
  out << "cells " << result.report.checks.size() << " mismatches "
      << result.report.mismatches << "\n";
  result.text = out.str();
  return result;
}

}  // namespace influgame

#endif  // INFLUGAME_REPRODUCE_HPP
