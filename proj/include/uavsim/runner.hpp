#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavsim/baselines.hpp"
#include "uavsim/learn.hpp"
#include "uavsim/metrics.hpp"
#include "uavsim/scenario.hpp"

namespace uavsim::runner {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class Algo { marl, match, random };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::marl: return "marl";
    case Algo::match: return "match";
    case Algo::random: return "random";
  }
  throw std::logic_error("algo_name: unknown algorithm");
}

inline Algo parse_algo(const std::string& name) {
  if (name == "marl") return Algo::marl;
  if (name == "match") return Algo::match;
  if (name == "random") return Algo::random;
  throw UsageError("unknown algorithm '" + name + "' (expected marl, match, or random)");
}

struct RunResult {
  metrics::EpisodeLog log;
  metrics::RewardSeries series;
};

// One (algorithm, seed) episode plus its fleet reward series. The cumulative
// series uses the scenario's discount for every algorithm, so curves are
// comparable across schemes.
inline RunResult run_one(const Scenario& scenario, Algo algo, std::uint64_t seed) {
  RunResult out;
  switch (algo) {
    case Algo::marl: out.log = learn::run_episode(scenario, seed).log; break;
    case Algo::match: out.log = baselines::run_match_episode(scenario, seed); break;
    case Algo::random: out.log = baselines::run_random_episode(scenario, seed); break;
  }
  out.series = metrics::reward_series(out.log, scenario.learning.discount);
  return out;
}

inline double final_v_avg(const metrics::RewardSeries& series) {
  return series.v_avg.empty() ? 0.0 : series.v_avg.back();
}

struct SummaryRow {
  std::string algo;
  int num_seeds = 0;
  double final_v_avg_mean = 0.0;
  double final_v_avg_std = 0.0;  // sample standard deviation across seeds
};

struct RunSummary {
  std::vector<SummaryRow> rows;
  std::vector<std::string> csv_files;  // one per (algo, seed), relative to out_dir
  std::string summary_file;
};

struct SweepRow {
  std::string param;
  double value = 0.0;
  std::uint64_t seed = 0;
  double final_v_avg = 0.0;
  std::string series_file;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::string table_file;
};

namespace detail {

inline std::string g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
}

inline SummaryRow summarize(const std::string& algo, const std::vector<double>& finals) {
  SummaryRow row;
  row.algo = algo;
  row.num_seeds = static_cast<int>(finals.size());
  double mean = 0.0;
  for (double v : finals) mean += v;
  mean /= static_cast<double>(finals.size());
  double var = 0.0;
  if (finals.size() > 1) {
    for (double v : finals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(finals.size() - 1);
  }
  row.final_v_avg_mean = mean;
  row.final_v_avg_std = std::sqrt(var);
  return row;
}

inline const char* kPlotScript = R"PY(#!/usr/bin/env python3
"""Plot the fleet-average cumulative reward (v_avg) of every per-run CSV
in this directory. Usage: python3 plot.py [output.png]"""
import csv
import glob
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "reward_curves.png")

fig, ax = plt.subplots(figsize=(8, 5))
for path in sorted(glob.glob(os.path.join(here, "*.csv"))):
    name = os.path.basename(path)
    if name in ("summary.csv",) or name.startswith("sweep_"):
        continue
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    if not rows or "v_avg" not in rows[0]:
        continue
    ax.plot([int(r["t"]) for r in rows], [float(r["v_avg"]) for r in rows],
            label=name.removesuffix(".csv"))

ax.set_xlabel("time slot")
ax.set_ylabel("fleet-average cumulative reward")
ax.legend(fontsize=7)
fig.tight_layout()
fig.savefig(out, dpi=150)
print(f"wrote {out}")
)PY";

}  // namespace detail

inline void emit_plot_script(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  detail::write_text(std::filesystem::path(out_dir) / "plot.py", detail::kPlotScript);
}

// Runs every (algorithm, seed) pair, writing <algo>_seed<seed>.csv per run and
// a summary.csv with the mean and standard deviation of the final v_avg per
// algorithm.
inline RunSummary run(const Scenario& scenario, const std::vector<Algo>& algos,
                      const std::vector<std::uint64_t>& seeds, const std::string& out_dir,
                      bool plot_script = false) {
  if (algos.empty()) throw UsageError("no algorithms given");
  if (seeds.empty()) throw UsageError("no seeds given");
  for (Algo a : algos) {
    if (a == Algo::match &&
        (scenario.radio.num_subchannels != 1 || scenario.radio.num_power_levels != 1))
      throw UsageError(
          "algorithm 'match' requires num_subchannels = 1 and num_power_levels = 1");
  }
  scenario.validate();
  std::filesystem::create_directories(out_dir);

  RunSummary summary;
  std::string table = "algo,num_seeds,final_v_avg_mean,final_v_avg_std\n";
  for (Algo algo : algos) {
    std::vector<double> finals;
    finals.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
      const RunResult res = run_one(scenario, algo, seed);
      const std::string name =
          std::string(algo_name(algo)) + "_seed" + std::to_string(seed) + ".csv";
      metrics::write_csv(res.series, res.log, (std::filesystem::path(out_dir) / name).string());
      summary.csv_files.push_back(name);
      finals.push_back(final_v_avg(res.series));
    }
    const SummaryRow row = detail::summarize(algo_name(algo), finals);
    summary.rows.push_back(row);
    table += row.algo + "," + std::to_string(row.num_seeds) + "," +
             detail::g9(row.final_v_avg_mean) + "," + detail::g9(row.final_v_avg_std) + "\n";
  }
  const auto summary_path = std::filesystem::path(out_dir) / "summary.csv";
  detail::write_text(summary_path, table);
  summary.summary_file = summary_path.string();
  if (plot_script) emit_plot_script(out_dir);
  return summary;
}

// Cross product of sweep values and seeds for the learning algorithm; writes
// one series CSV per run plus a long-format sweep_<param>.csv table.
inline SweepResult sweep(const Scenario& base, const std::string& param,
                         const std::vector<double>& values,
                         const std::vector<std::uint64_t>& seeds, const std::string& out_dir,
                         bool plot_script = false) {
  if (param != "epsilon" && param != "speed")
    throw UsageError("unknown sweep parameter '" + param + "' (expected epsilon or speed)");
  if (values.empty()) throw UsageError("no sweep values given");
  if (seeds.empty()) throw UsageError("no seeds given");
  std::filesystem::create_directories(out_dir);

  SweepResult result;
  std::string table = "param,value,seed,final_v_avg,series_file\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scenario sc = base;
    if (param == "epsilon") sc.learning.epsilon = values[i];
    else sc.fleet.uav_speed_mps = values[i];
    sc.validate();
    for (std::uint64_t seed : seeds) {
      const RunResult res = run_one(sc, Algo::marl, seed);
      const std::string name =
          param + "_v" + std::to_string(i) + "_seed" + std::to_string(seed) + ".csv";
      metrics::write_csv(res.series, res.log, (std::filesystem::path(out_dir) / name).string());
      SweepRow row{param, values[i], seed, final_v_avg(res.series), name};
      result.rows.push_back(row);
      table += param + "," + detail::g9(values[i]) + "," + std::to_string(seed) + "," +
               detail::g9(row.final_v_avg) + "," + name + "\n";
    }
  }
  const auto table_path = std::filesystem::path(out_dir) / ("sweep_" + param + ".csv");
  detail::write_text(table_path, table);
  result.table_file = table_path.string();
  if (plot_script) emit_plot_script(out_dir);
  return result;
}

}  // namespace uavsim::runner
