// Command-line front end: runs scenarios with the learning algorithm and the
// matching/random baselines, or sweeps epsilon / UAV speed, writing CSV series
// and summary tables.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavsim/uavsim.hpp"

namespace {

using uavsim::runner::UsageError;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read scenario file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Accepts "1,2,3" or an inclusive range "1..20".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const auto lo = std::stoull(text.substr(0, dots));
      const auto hi = std::stoull(text.substr(dots + 2));
      if (hi < lo) throw UsageError("--seeds range '" + text + "' is empty");
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      for (const auto& item : split(text, ',')) seeds.push_back(std::stoull(item));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse --seeds '" + text + "' (expected list or lo..hi range)");
  }
  if (seeds.empty()) throw UsageError("--seeds '" + text + "' names no seeds");
  return seeds;
}

std::vector<double> parse_values(const std::string& flag, const std::string& text) {
  std::vector<double> values;
  try {
    for (const auto& item : split(text, ',')) values.push_back(std::stod(item));
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + flag + " values '" + text + "'");
  }
  if (values.empty()) throw UsageError(flag + " names no values");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-UAV downlink simulator: independent Q-learning with matching and "
               "random baselines"};
  std::string scenario_path;
  std::string algo_list = "marl";
  std::string seed_spec = "1";
  std::string out_dir = "out";
  std::string sweep_spec;
  bool plot_script = false;

  app.add_option("--scenario", scenario_path, "Scenario configuration file (key = value lines)")
      ->required();
  app.add_option("--algo", algo_list, "Comma-separated algorithms: marl, match, random");
  app.add_option("--seeds", seed_spec, "Seed list '1,2,3' or inclusive range '1..20'");
  app.add_option("--out", out_dir, "Output directory for CSV files");
  app.add_option("--sweep", sweep_spec,
                 "Sweep spec '<param>=<v1,v2,...>' with param epsilon or speed");
  app.add_flag("--emit-plot-script", plot_script, "Also write plot.py next to the CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const uavsim::Scenario scenario = uavsim::parse_scenario(read_file(scenario_path));
    const std::vector<std::uint64_t> seeds = parse_seeds(seed_spec);

    if (!sweep_spec.empty()) {
      const auto eq = sweep_spec.find('=');
      if (eq == std::string::npos)
        throw UsageError("--sweep expects '<param>=<v1,v2,...>', got '" + sweep_spec + "'");
      const std::string param = sweep_spec.substr(0, eq);
      const auto values = parse_values("--sweep", sweep_spec.substr(eq + 1));
      const auto result = uavsim::runner::sweep(scenario, param, values, seeds, out_dir,
                                                plot_script);
      std::cout << "wrote " << result.rows.size() << " runs and " << result.table_file << "\n";
      return 0;
    }

    std::vector<uavsim::runner::Algo> algos;
    for (const auto& name : split(algo_list, ','))
      algos.push_back(uavsim::runner::parse_algo(name));
    const auto summary = uavsim::runner::run(scenario, algos, seeds, out_dir, plot_script);
    for (const auto& row : summary.rows)
      std::cout << row.algo << ": final v_avg " << row.final_v_avg_mean << " +/- "
                << row.final_v_avg_std << " over " << row.num_seeds << " seed(s)\n";
    std::cout << "wrote " << summary.csv_files.size() << " run file(s) and "
              << summary.summary_file << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const uavsim::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return 2;
  }
}
