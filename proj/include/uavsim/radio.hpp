#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavsim/channel.hpp"

namespace uavsim::radio {

// Discrete transmit powers, ordered ascending, in milliwatts.
struct PowerLevels {
  std::vector<double> levels_mw;

  void validate() const {
    if (levels_mw.empty()) throw std::invalid_argument("PowerLevels: need at least one level");
    double prev = 0.0;
    for (double p : levels_mw) {
      if (!(p > prev)) throw std::invalid_argument("PowerLevels: levels must be positive and strictly increasing");
      prev = p;
    }
  }
};

// One UAV's joint choice for a slot. Holding single indices makes the
// "at most one user / subchannel / power level" constraints structural.
struct Action {
  int user = 0;
  int subchannel = 0;
  int power_level = 0;
};

// Flat index over the (user, subchannel, power level) action set; power level
// varies fastest. Inverse of action_from_index.
inline int action_to_index(const Action& a, int num_subchannels, int num_power_levels) {
  return (a.user * num_subchannels + a.subchannel) * num_power_levels + a.power_level;
}

inline Action action_from_index(int index, int num_subchannels, int num_power_levels) {
  if (num_subchannels < 1 || num_power_levels < 1)
    throw std::invalid_argument("action_from_index: dimensions must be >= 1");
  Action a;
  a.power_level = index % num_power_levels;
  index /= num_power_levels;
  a.subchannel = index % num_subchannels;
  a.user = index / num_subchannels;
  return a;
}

struct RewardParams {
  double bandwidth_per_subchannel_hz = 75.0e3;  // W/K
  double power_cost = 100.0;                    // cost per mW of transmit power
  double sinr_threshold_linear = 1.9952623149688795;  // 3 dB
  double noise_mw = 1.0e-8;                     // -80 dBm

  void validate() const {
    if (!(bandwidth_per_subchannel_hz > 0.0))
      throw std::invalid_argument("RewardParams: bandwidth_per_subchannel_hz must be > 0");
    if (!(power_cost > 0.0)) throw std::invalid_argument("RewardParams: power_cost must be > 0");
    if (!(sinr_threshold_linear > 0.0))
      throw std::invalid_argument("RewardParams: sinr_threshold_linear must be > 0");
    if (!(noise_mw > 0.0)) throw std::invalid_argument("RewardParams: noise_mw must be > 0");
  }
};

// The maximal power (dBm) split into J equal linear steps {Pmax*j/J}.
inline PowerLevels power_levels_from_max(double max_dbm, int count) {
  if (count < 1) throw std::invalid_argument("power_levels_from_max: count must be >= 1");
  const double max_mw = std::pow(10.0, max_dbm / 10.0);
  PowerLevels levels;
  levels.levels_mw.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j)
    levels.levels_mw.push_back(max_mw * static_cast<double>(j) / static_cast<double>(count));
  return levels;
}

// SINR of `agent`'s link to its selected user. Interference is summed over
// the other UAVs that currently occupy the same subchannel, using their gain
// toward this agent's user. All powers in milliwatts.
inline double sinr(int agent, const std::vector<Action>& joint_actions,
                   const channel::GainMatrix& gains, const PowerLevels& levels,
                   double noise_mw) {
  if (static_cast<int>(joint_actions.size()) != gains.num_uavs)
    throw std::invalid_argument("sinr: joint_actions size does not match gain matrix");
  const Action& own = joint_actions[static_cast<std::size_t>(agent)];
  if (own.user < 0 || own.user >= gains.num_users || own.subchannel < 0 ||
      own.subchannel >= gains.num_subchannels || own.power_level < 0 ||
      own.power_level >= static_cast<int>(levels.levels_mw.size()))
    throw std::invalid_argument("sinr: action indices out of range");
  const double signal = gains.at(agent, own.user, own.subchannel) *
                        levels.levels_mw[static_cast<std::size_t>(own.power_level)];
  double interference = 0.0;
  for (int j = 0; j < gains.num_uavs; ++j) {
    if (j == agent) continue;
    const Action& other = joint_actions[static_cast<std::size_t>(j)];
    if (other.subchannel != own.subchannel) continue;
    interference += gains.at(j, own.user, other.subchannel) *
                    levels.levels_mw[static_cast<std::size_t>(other.power_level)];
  }
  return signal / (interference + noise_mw);
}

// Shannon rate over the per-subchannel bandwidth, in bit/s.
inline double rate(double gamma, double bandwidth_hz) {
  if (gamma < 0.0) throw std::invalid_argument("rate: gamma must be >= 0");
  return bandwidth_hz * std::log2(1.0 + gamma);
}

struct RewardResult {
  double value = 0.0;
  int qos_state = 0;  // 1 iff the SINR met the QoS threshold
};

// QoS-gated energy-efficiency reward: s * (rate - cost*P). Zero whenever the
// threshold is missed; may go negative when the cost exceeds the rate.
inline RewardResult reward(int agent, const std::vector<Action>& joint_actions,
                           const channel::GainMatrix& gains, const RewardParams& params,
                           const PowerLevels& levels) {
  const double gamma = sinr(agent, joint_actions, gains, levels, params.noise_mw);
  RewardResult result;
  result.qos_state = gamma >= params.sinr_threshold_linear ? 1 : 0;
  if (result.qos_state == 1) {
    const double power_mw =
        levels.levels_mw[static_cast<std::size_t>(joint_actions[static_cast<std::size_t>(agent)].power_level)];
    result.value = rate(gamma, params.bandwidth_per_subchannel_hz) - params.power_cost * power_mw;
  }
  return result;
}

}  // namespace uavsim::radio
