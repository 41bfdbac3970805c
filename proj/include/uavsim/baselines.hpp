#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavsim/channel.hpp"
#include "uavsim/env.hpp"
#include "uavsim/metrics.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/rng.hpp"
#include "uavsim/scenario.hpp"

namespace uavsim::baselines {

class UnsupportedConfiguration : public std::runtime_error {
 public:
  explicit UnsupportedConfiguration(const std::string& what) : std::runtime_error(what) {}
};

class InfeasibleMatching : public std::runtime_error {
 public:
  explicit InfeasibleMatching(const std::string& what) : std::runtime_error(what) {}
};

// Strict rankings for both sides of the matching.
struct PreferenceProfile {
  std::vector<std::vector<int>> uav_prefs;   // per UAV, users best-first
  std::vector<std::vector<int>> user_prefs;  // per user, UAVs best-first
};

// UAVs rank users by the reward a dedicated interference-free link would earn;
// users rank UAVs by raw gain. Both rankings are an implementation choice —
// the matching scheme itself does not dictate the utilities. Ties break toward
// the lower index. Only the single-subchannel, single-power-level baseline
// configuration is supported.
inline PreferenceProfile build_preferences(const channel::GainMatrix& gains,
                                           const radio::PowerLevels& levels,
                                           const radio::RewardParams& params) {
  if (gains.num_subchannels != 1)
    throw UnsupportedConfiguration(
        "build_preferences: matching baseline requires num_subchannels = 1");
  if (levels.levels_mw.size() != 1)
    throw UnsupportedConfiguration(
        "build_preferences: matching baseline requires num_power_levels = 1");
  const int num_uavs = gains.num_uavs;
  const int num_users = gains.num_users;
  const double p_mw = levels.levels_mw[0];

  PreferenceProfile prof;
  prof.uav_prefs.resize(num_uavs);
  prof.user_prefs.resize(num_users);

  for (int m = 0; m < num_uavs; ++m) {
    std::vector<double> utility(num_users);
    for (int l = 0; l < num_users; ++l) {
      const double gamma = gains.at(m, l, 0) * p_mw / params.noise_mw;
      const int qos = gamma >= params.sinr_threshold_linear ? 1 : 0;
      utility[l] = qos * (radio::rate(gamma, params.bandwidth_per_subchannel_hz) -
                          params.power_cost * p_mw);
    }
    auto& order = prof.uav_prefs[m];
    order.resize(num_users);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return utility[a] > utility[b]; });
  }

  for (int l = 0; l < num_users; ++l) {
    auto& order = prof.user_prefs[l];
    order.resize(num_uavs);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return gains.at(a, l, 0) > gains.at(b, l, 0);
    });
  }
  return prof;
}

// UAV-proposing deferred acceptance. Returns the matched user per UAV. With
// strict preferences the result is the UAV-optimal stable matching.
inline std::vector<int> gale_shapley(const PreferenceProfile& prefs) {
  const int num_uavs = static_cast<int>(prefs.uav_prefs.size());
  const int num_users = static_cast<int>(prefs.user_prefs.size());
  if (num_uavs > num_users)
    throw InfeasibleMatching("gale_shapley: more UAVs than users; one-to-one matching infeasible");

  // user_rank[l][m] = position of UAV m in user l's list (lower is better)
  std::vector<std::vector<int>> user_rank(num_users, std::vector<int>(num_uavs, 0));
  for (int l = 0; l < num_users; ++l)
    for (int pos = 0; pos < num_uavs; ++pos) user_rank[l][prefs.user_prefs[l][pos]] = pos;

  std::vector<int> next_proposal(num_uavs, 0);    // index into each UAV's list
  std::vector<int> matched_user(num_uavs, -1);
  std::vector<int> matched_uav(num_users, -1);
  std::vector<int> free_uavs(num_uavs);
  std::iota(free_uavs.begin(), free_uavs.end(), 0);

  while (!free_uavs.empty()) {
    const int m = free_uavs.back();
    free_uavs.pop_back();
    const int l = prefs.uav_prefs[m][next_proposal[m]++];
    const int holder = matched_uav[l];
    if (holder == -1) {
      matched_uav[l] = m;
      matched_user[m] = l;
    } else if (user_rank[l][m] < user_rank[l][holder]) {
      matched_uav[l] = m;
      matched_user[m] = l;
      matched_user[holder] = -1;
      free_uavs.push_back(holder);
    } else {
      free_uavs.push_back(m);
    }
  }
  return matched_user;
}

// Every UAV draws a uniform action; M draws from the one stream, UAV order.
inline env::JointAction random_policy(const Scenario& scenario, Rng& rng) {
  env::JointAction joint(scenario.fleet.num_uavs);
  const auto size = static_cast<std::uint64_t>(scenario.action_space_size());
  for (auto& a : joint)
    a = radio::action_from_index(static_cast<int>(rng.uniform_index(size)),
                                 scenario.radio.num_subchannels,
                                 scenario.radio.num_power_levels);
  return joint;
}

namespace detail {

inline metrics::EpisodeLog make_log(const Scenario& scenario, std::uint64_t seed,
                                    const std::string& algorithm) {
  metrics::EpisodeLog log;
  log.num_uavs = scenario.fleet.num_uavs;
  log.scenario_hash = scenario_hash(scenario);
  log.algorithm = algorithm;
  log.seed = seed;
  log.per_slot.reserve(scenario.world.num_slots);
  return log;
}

inline void record_slot(metrics::EpisodeLog& log, int t, const env::JointAction& joint,
                        const std::vector<env::AgentObservation>& obs) {
  metrics::SlotRecord rec;
  rec.slot = t;
  rec.actions = joint;
  rec.states.resize(obs.size());
  rec.rewards.resize(obs.size());
  for (std::size_t m = 0; m < obs.size(); ++m) {
    rec.states[m] = obs[m].state;
    rec.rewards[m] = obs[m].reward;
  }
  log.per_slot.push_back(std::move(rec));
}

}  // namespace detail

// Matching baseline: rebuild preferences from the current slot's gains, run
// deferred acceptance, transmit to the matched user. Same environment loop and
// seed streams as the learner, so reward curves are directly comparable.
inline metrics::EpisodeLog run_match_episode(const Scenario& scenario, std::uint64_t seed) {
  if (scenario.radio.num_subchannels != 1 || scenario.radio.num_power_levels != 1)
    throw UnsupportedConfiguration(
        "run_match_episode: matching baseline requires num_subchannels = 1 and "
        "num_power_levels = 1");
  env::Environment environment(scenario, seed);
  auto log = detail::make_log(scenario, seed, "match");
  for (int t = 0; t < scenario.world.num_slots; ++t) {
    const auto prefs = build_preferences(environment.state().gains, environment.power_levels(),
                                         environment.reward_params());
    const auto matched = gale_shapley(prefs);
    env::JointAction joint(matched.size());
    for (std::size_t m = 0; m < matched.size(); ++m) joint[m] = radio::Action{matched[m], 0, 0};
    const auto obs = environment.step(joint);
    detail::record_slot(log, t, joint, obs);
  }
  return log;
}

// Uniform-random baseline in the same loop.
inline metrics::EpisodeLog run_random_episode(const Scenario& scenario, std::uint64_t seed) {
  env::Environment environment(scenario, seed);
  Rng action_rng(substream_seed(seed, stream::explore_base));
  auto log = detail::make_log(scenario, seed, "random");
  for (int t = 0; t < scenario.world.num_slots; ++t) {
    const auto joint = random_policy(scenario, action_rng);
    const auto obs = environment.step(joint);
    detail::record_slot(log, t, joint, obs);
  }
  return log;
}

}  // namespace uavsim::baselines
