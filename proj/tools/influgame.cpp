// influgame: centrality measures for influence games.
//
// Subcommands:
//   compute    measures for one network / one threshold case
//   reproduce  full case-study table diffed against bundled reference values
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 capacity exceeded.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "influgame/influgame.hpp"

#ifndef INFLUGAME_DATA_DIR
#define INFLUGAME_DATA_DIR "data"
#endif

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCapacity = 3;

int env_workers() {
  const char* v = std::getenv("INFLUGAME_WORKERS");
  if (v == nullptr) return 1;
  const long w = std::strtol(v, nullptr, 10);
  return w >= 1 && w <= 256 ? static_cast<int>(w) : 1;
}

struct ComputeArgs {
  std::string network;
  std::string builtin;
  std::string case_id = "C1";
  int quota = -1;  // -1: take quota from the file
  std::vector<std::string> measures;
  bool exact = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  int precision = 4;
  std::string data_dir = INFLUGAME_DATA_DIR;
};

const std::vector<std::string> kMeasureNames = {
    "din",    "dout",        "closeness", "betweenness", "bz",
    "ss",     "effort",      "satisfaction", "width"};

bool valid_measure(const std::string& m) {
  for (const auto& k : kMeasureNames)
    if (k == m) return true;
  return false;
}

bool needs_game(const std::string& m) {
  return m == "bz" || m == "ss" || m == "effort" || m == "satisfaction" ||
         m == "width";
}

int run_compute(const ComputeArgs& args) {
  using namespace influgame;
  if (args.network.empty() == args.builtin.empty()) {
    std::cerr << "error: exactly one of --network / --builtin is required\n";
    return kExitUsage;
  }
  if (args.measures.empty()) {
    std::cerr << "error: --measures must name at least one measure\n";
    return kExitUsage;
  }
  for (const auto& m : args.measures)
    if (!valid_measure(m)) {
      std::cerr << "error: unknown measure '" << m << "'\n";
      return kExitUsage;
    }
  const bool sampling = args.sample > 0;
  if (sampling)
    for (const auto& m : args.measures)
      if (m != "bz" && m != "ss" && m != "satisfaction") {
        std::cerr << "error: --sample supports only bz, ss, satisfaction\n";
        return kExitUsage;
      }

  // Load the graph and (if any game measure is requested) the quota.
  InfluenceGraph graph(0, {}, {});
  int quota = args.quota;
  if (!args.builtin.empty()) {
    const InfluenceGame game = load_builtin(args.builtin, args.case_id, args.data_dir);
    graph = game.graph();
    if (quota < 0) quota = game.quota();
  } else {
    const NetworkFile file = load_network_file(args.network);
    graph = to_graph(file);
    if (quota < 0 && file.quota) quota = *file.quota;
  }
  bool game_needed = false;
  for (const auto& m : args.measures) game_needed |= needs_game(m);
  if (game_needed && quota < 0) {
    std::cerr << "error: game measures need a quota (file directive or --quota)\n";
    return kExitUsage;
  }

  CentralityTable table;
  table.row_labels = graph.labels();
  GameReport report;
  EstimateReport est_bz, est_ss, est_cs;
  if (game_needed) {
    const InfluenceGame game(graph, quota);
    if (sampling) {
      for (const auto& m : args.measures) {
        if (m == "bz") est_bz = estimate_banzhaf_raw(game, args.sample, args.seed);
        if (m == "ss") est_ss = estimate_shapley(game, args.sample, args.seed);
        if (m == "satisfaction")
          est_cs = estimate_satisfaction(game, args.sample, args.seed);
      }
    } else {
      EnumerateOptions opt;
      opt.workers = env_workers();
      report = enumerate_coalitions(game, opt);
    }
  }
  for (const auto& m : args.measures) {
    const int p = args.precision;
    if (m == "din") {
      table.add_column("din", degree_centrality(graph, influgame::Direction::In), p);
    } else if (m == "dout") {
      table.add_column("dout", degree_centrality(graph, influgame::Direction::Out), p);
    } else if (m == "closeness") {
      table.add_column("closeness", closeness_centrality(graph), p);
    } else if (m == "betweenness") {
      table.add_column("betweenness", betweenness_centrality(graph), p);
    } else if (m == "bz") {
      table.add_column("bz", sampling ? est_bz.estimate : banzhaf(report), p);
    } else if (m == "ss") {
      table.add_column("ss", sampling ? est_ss.estimate : shapley_shubik(report), p);
    } else if (m == "effort") {
      table.add_column("effort", effort_centrality(report), p);
    } else if (m == "satisfaction") {
      table.add_column("satisfaction",
                       sampling ? est_cs.estimate : satisfaction(report), p);
    } else if (m == "width") {
      table.add_column("width", width_centrality(report), p);
    }
  }
  std::cout << (args.format == "md" ? to_markdown(table) : to_csv(table));
  return 0;
}

int run_reproduce(const std::string& dataset, const std::string& data_dir) {
  const auto result = influgame::reproduce_table(dataset, data_dir, env_workers());
  std::cout << result.text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic centrality measures for influence games"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "Compute centrality measures");
  compute->add_option("--network", cargs.network, "Network file path");
  compute->add_option("--builtin", cargs.builtin,
                      "Bundled dataset: monkeys, dining, studentgov");
  compute->add_option("--case", cargs.case_id, "Threshold case (C1..C4)");
  compute->add_option("--quota", cargs.quota, "Activation quota (overrides file)");
  compute->add_option("--measures", cargs.measures,
                      "Comma-separated: din,dout,closeness,betweenness,bz,ss,"
                      "effort,satisfaction,width")
      ->delimiter(',');
  compute->add_flag("--exact", cargs.exact, "Exact enumeration (default)");
  compute->add_option("--sample", cargs.sample, "Monte Carlo sample count");
  compute->add_option("--seed", cargs.seed, "RNG seed for --sample");
  compute->add_option("--format", cargs.format, "Output format: csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  compute->add_option("--precision", cargs.precision, "Decimal digits")
      ->check(CLI::Range(0, 12));
  compute->add_option("--data-dir", cargs.data_dir, "Directory with bundled datasets");

  std::string rep_dataset;
  std::string rep_data_dir = INFLUGAME_DATA_DIR;
  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Recompute a case-study table and diff it "
                                      "against bundled reference values");
  reproduce->add_option("dataset", rep_dataset, "monkeys, dining, or studentgov")
      ->required();
  reproduce->add_option("--data-dir", rep_data_dir, "Directory with bundled datasets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (cargs.exact && cargs.sample > 0) {
        std::cerr << "error: --exact and --sample are mutually exclusive\n";
        return kExitUsage;
      }
      return run_compute(cargs);
    }
    return run_reproduce(rep_dataset, rep_data_dir);
  } catch (const influgame::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const influgame::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const influgame::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
