#include <catch2/catch_amalgamated.hpp>

#include "influgame/table.hpp"

#include "influgame/reproduce.hpp"

using namespace influgame;

TEST_CASE("fixed-point formatting rounds half to even") {
  REQUIRE(format_fixed(0.5, 0) == "0");
  REQUIRE(format_fixed(1.5, 0) == "2");
  REQUIRE(format_fixed(2.5, 0) == "2");
  REQUIRE(format_fixed(0.125, 2) == "0.12");
  REQUIRE(format_fixed(0.375, 2) == "0.38");
  REQUIRE(format_fixed(-0.375, 2) == "-0.38");
  REQUIRE(format_fixed(0.1, 3) == "0.100");
  REQUIRE(format_fixed(12.3456, 2) == "12.35");
  REQUIRE(format_fixed(0.0, 4) == "0.0000");
  REQUIRE_THROWS_AS(format_fixed(1.0, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(format_fixed(1.0 / 0.0, 2), std::invalid_argument);
}

TEST_CASE("csv output with quoting") {
  CentralityTable t;
  t.row_labels = {"plain", "with,comma", "with\"quote"};
  t.add_column("m", {0.1, 0.25, 1.0}, 2);
  REQUIRE(to_csv(t) ==
          "node,m\n"
          "plain,0.10\n"
          "\"with,comma\",0.25\n"
          "\"with\"\"quote\",1.00\n");
}

TEST_CASE("markdown output is aligned") {
  CentralityTable t;
  t.row_labels = {"a", "bb"};
  t.add_column("x", {1.0, 0.5}, 1);
  REQUIRE(to_markdown(t) ==
          "| node | x   |\n"
          "|------|-----|\n"
          "| a    | 1.0 |\n"
          "| bb   | 0.5 |\n");
}

TEST_CASE("column length mismatch is rejected") {
  CentralityTable t;
  t.row_labels = {"a", "b"};
  REQUIRE_THROWS_AS(t.add_column("x", {1.0}, 2), std::invalid_argument);
}

TEST_CASE("reference table parsing and per-cell precision") {
  const auto g = parse_golden_csv("node,A,B\n1,0.50,0.1234\n2,1,0.0000\n");
  REQUIRE(g.col_names == std::vector<std::string>{"A", "B"});
  REQUIRE(g.row_labels == std::vector<std::string>{"1", "2"});
  REQUIRE(g.cells[0][1] == "0.1234");
  REQUIRE(printed_decimals("0.50") == 2);
  REQUIRE(printed_decimals("1") == 0);
  REQUIRE(printed_decimals("0.1234") == 4);
}

TEST_CASE("table comparison uses half-ulp tolerance of the printed value") {
  GoldenTable golden;
  golden.row_labels = {"1"};
  golden.col_names = {"A", "B"};
  golden.cells = {{"0.50", "0.500"}};
  CentralityTable computed;
  computed.row_labels = {"1"};
  computed.add_column("A", {0.504}, 2);   // within 0.005 of 0.50
  computed.add_column("B", {0.5007}, 3);  // outside 0.0005 of 0.500
  const auto report = compare_table(computed, golden);
  REQUIRE(report.checks.size() == 2);
  REQUIRE(report.checks[0].match);
  REQUIRE_FALSE(report.checks[1].match);
  REQUIRE(report.mismatches == 1);
}

TEST_CASE("comparison rejects mismatched shapes") {
  GoldenTable golden;
  golden.row_labels = {"1"};
  golden.col_names = {"A"};
  golden.cells = {{"0.5"}};
  CentralityTable computed;
  computed.row_labels = {"1"};
  computed.add_column("Z", {0.5}, 1);
  REQUIRE_THROWS_AS(compare_table(computed, golden), DataError);
}
