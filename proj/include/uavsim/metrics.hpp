#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavsim/radio.hpp"

namespace uavsim::metrics {

// One slot of an episode: what every UAV did and got.
struct SlotRecord {
  int slot = 0;
  std::vector<int> states;             // per-UAV QoS indicator after the slot
  std::vector<radio::Action> actions;  // per-UAV action taken this slot
  std::vector<double> rewards;         // per-UAV instantaneous reward
};

struct EpisodeLog {
  int num_uavs = 0;
  std::vector<SlotRecord> per_slot;  // contiguous slots from 0
  std::string scenario_hash;
  std::string algorithm;
  std::uint64_t seed = 0;

  void validate() const {
    for (std::size_t t = 0; t < per_slot.size(); ++t) {
      const auto& rec = per_slot[t];
      if (rec.slot != static_cast<int>(t))
        throw std::invalid_argument("EpisodeLog: slots must be contiguous from 0");
      if (static_cast<int>(rec.states.size()) != num_uavs ||
          static_cast<int>(rec.actions.size()) != num_uavs ||
          static_cast<int>(rec.rewards.size()) != num_uavs)
        throw std::invalid_argument("EpisodeLog: per-slot vectors must have one entry per UAV");
    }
  }
};

struct RewardSeries {
  std::vector<double> v_avg;  // per-slot fleet-average cumulative reward
  std::vector<double> r_sum;  // per-slot summed instantaneous reward
};

// Instantaneous rewards regrouped as [uav][slot].
inline std::vector<std::vector<double>> instantaneous_rewards(const EpisodeLog& log) {
  std::vector<std::vector<double>> out(log.num_uavs,
                                       std::vector<double>(log.per_slot.size(), 0.0));
  for (std::size_t t = 0; t < log.per_slot.size(); ++t)
    for (int m = 0; m < log.num_uavs; ++m) out[m][t] = log.per_slot[t].rewards[m];
  return out;
}

// Causal discounted accumulation v_m^t = sum_{tau<=t} discount^tau * r_m^tau,
// returned as [uav][slot]. discount = 1 gives the plain running sum.
inline std::vector<std::vector<double>> cumulative_reward(const EpisodeLog& log,
                                                          double discount) {
  if (discount < 0.0 || discount > 1.0)
    throw std::invalid_argument("cumulative_reward: discount must be in [0,1]");
  std::vector<std::vector<double>> out(log.num_uavs,
                                       std::vector<double>(log.per_slot.size(), 0.0));
  for (int m = 0; m < log.num_uavs; ++m) {
    double acc = 0.0;
    double weight = 1.0;
    for (std::size_t t = 0; t < log.per_slot.size(); ++t) {
      acc += weight * log.per_slot[t].rewards[m];
      weight *= discount;
      out[m][t] = acc;
    }
  }
  return out;
}

// v_avg is the per-slot mean of the cumulative series over UAVs; r_sum is the
// per-slot sum of instantaneous rewards (a sum, not a mean — kept as the
// conventional printed form).
inline RewardSeries fleet_series(const std::vector<std::vector<double>>& cumulative_per_uav,
                                 const std::vector<std::vector<double>>& reward_per_uav) {
  if (cumulative_per_uav.size() != reward_per_uav.size())
    throw std::invalid_argument("fleet_series: UAV counts differ");
  const std::size_t num_uavs = cumulative_per_uav.size();
  std::size_t num_slots = 0;
  if (num_uavs > 0) num_slots = cumulative_per_uav[0].size();
  for (std::size_t m = 0; m < num_uavs; ++m)
    if (cumulative_per_uav[m].size() != num_slots || reward_per_uav[m].size() != num_slots)
      throw std::invalid_argument("fleet_series: ragged input series");
  RewardSeries s;
  s.v_avg.assign(num_slots, 0.0);
  s.r_sum.assign(num_slots, 0.0);
  for (std::size_t t = 0; t < num_slots; ++t) {
    double v = 0.0, r = 0.0;
    for (std::size_t m = 0; m < num_uavs; ++m) {
      v += cumulative_per_uav[m][t];
      r += reward_per_uav[m][t];
    }
    s.v_avg[t] = num_uavs > 0 ? v / static_cast<double>(num_uavs) : 0.0;
    s.r_sum[t] = r;
  }
  return s;
}

// Convenience: log -> fleet series in one call.
inline RewardSeries reward_series(const EpisodeLog& log, double discount) {
  return fleet_series(cumulative_reward(log, discount), instantaneous_rewards(log));
}

namespace detail {
inline void append_g9(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  out += buf;
}
}  // namespace detail

// CSV body with header t,v_avg,r_sum,r_uav_0,...; 9 significant digits,
// LF line endings.
inline std::string format_csv(const RewardSeries& series, const EpisodeLog& log) {
  if (series.v_avg.size() != log.per_slot.size() || series.r_sum.size() != log.per_slot.size())
    throw std::invalid_argument("format_csv: series/log length mismatch");
  std::string out = "t,v_avg,r_sum";
  for (int m = 0; m < log.num_uavs; ++m) out += ",r_uav_" + std::to_string(m);
  out += "\n";
  for (std::size_t t = 0; t < log.per_slot.size(); ++t) {
    out += std::to_string(t);
    out += ",";
    detail::append_g9(out, series.v_avg[t]);
    out += ",";
    detail::append_g9(out, series.r_sum[t]);
    for (int m = 0; m < log.num_uavs; ++m) {
      out += ",";
      detail::append_g9(out, log.per_slot[t].rewards[m]);
    }
    out += "\n";
  }
  return out;
}

inline void write_csv(const RewardSeries& series, const EpisodeLog& log,
                      const std::string& path) {
  const std::string body = format_csv(series, log);
  std::ofstream f(path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!f) throw std::runtime_error("write_csv: cannot open '" + path + "' for writing");
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

}  // namespace uavsim::metrics
