#pragma once

#include <stdexcept>
#include <vector>

#include "uavsim/channel.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/rng.hpp"
#include "uavsim/scenario.hpp"
#include "uavsim/world.hpp"

namespace uavsim::env {

// What a single independent learner sees after a step: its own QoS state and
// reward only. Deliberately contains nothing about other agents.
struct AgentObservation {
  int state = 0;     // 1 if own SINR met the threshold this slot
  double reward = 0.0;
  int slot = 0;
};

using JointAction = std::vector<radio::Action>;

struct GameState {
  int slot = 0;
  std::vector<world::Position> uav_positions;
  channel::GainMatrix gains;
  std::vector<int> agent_states;  // s_m per UAV, each 0 or 1
};

// Stochastic-game environment: deterministic geometry plus the gain model.
// Copyable; a copy replays identically (RNG position is part of the value),
// which is how the Markov property is exercised in tests.
class Environment {
 public:
  Environment(const Scenario& scenario, std::uint64_t seed)
      : scenario_(scenario), seed_(seed) {
    scenario_.validate();
    trajectories_ = scenario_.trajectories();
    levels_ = scenario_.power_levels();
    reward_params_ = scenario_.reward_params();
    reward_params_.validate();
    channel_rng_ = Rng(substream_seed(seed_, stream::channel));
    Rng user_rng(substream_seed(seed_, stream::users));
    users_ = world::sample_users(scenario_.num_users, scenario_.world.radius_m, user_rng);
    reset_state();
  }

  // Rewinds to slot 0 with the same users and a fresh channel stream; the
  // resulting trajectory of states matches a newly constructed instance.
  void reset() {
    channel_rng_ = Rng(substream_seed(seed_, stream::channel));
    reset_state();
  }

  const Scenario& scenario() const { return scenario_; }
  const GameState& state() const { return state_; }
  const world::UserField& users() const { return users_; }
  const radio::PowerLevels& power_levels() const { return levels_; }
  const radio::RewardParams& reward_params() const { return reward_params_; }

  int num_agents() const { return scenario_.fleet.num_uavs; }
  int action_space_size() const { return scenario_.action_space_size(); }

  // Applies the joint action against the current slot's gains, then advances
  // geometry and gains to the next slot. Observations are per-agent only.
  std::vector<AgentObservation> step(const JointAction& joint) {
    if (static_cast<int>(joint.size()) != num_agents())
      throw std::invalid_argument("env::step: joint action length != number of UAVs");
    for (const auto& a : joint) {
      if (a.user < 0 || a.user >= scenario_.num_users ||
          a.subchannel < 0 || a.subchannel >= scenario_.radio.num_subchannels ||
          a.power_level < 0 || a.power_level >= scenario_.radio.num_power_levels)
        throw std::invalid_argument("env::step: action index out of range");
    }
    std::vector<AgentObservation> obs(joint.size());
    for (int m = 0; m < num_agents(); ++m) {
      const auto res = radio::reward(m, joint, state_.gains, reward_params_, levels_);
      state_.agent_states[m] = res.qos_state;
      obs[m] = AgentObservation{res.qos_state, res.value, state_.slot};
    }
    advance();
    return obs;
  }

 private:
  void reset_state() {
    state_.slot = 0;
    state_.agent_states.assign(num_agents(), 0);
    state_.uav_positions.resize(num_agents());
    rebuild_geometry();
  }

  void advance() {
    ++state_.slot;
    rebuild_geometry();
  }

  void rebuild_geometry() {
    for (int m = 0; m < num_agents(); ++m)
      state_.uav_positions[m] =
          world::uav_position(trajectories_[m], state_.slot, scenario_.world.slot_duration_s);
    state_.gains = channel::build_gain_matrix(
        scenario_.channel, state_.uav_positions, users_, scenario_.world.uav_altitude_m,
        scenario_.radio.num_subchannels, state_.slot, channel_rng_);
  }

  Scenario scenario_;
  std::uint64_t seed_ = 0;
  std::vector<world::Trajectory> trajectories_;
  radio::PowerLevels levels_;
  radio::RewardParams reward_params_;
  world::UserField users_;
  Rng channel_rng_{0};
  GameState state_;
};

}  // namespace uavsim::env
