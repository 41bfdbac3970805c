#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavsim/env.hpp"
#include "uavsim/metrics.hpp"
#include "uavsim/rng.hpp"
#include "uavsim/scenario.hpp"

namespace uavsim::learn {

// Tabular action-value function. The UAV game has two states (QoS met or
// not); the state count is a parameter so small test MDPs fit the same table.
struct QTable {
  int num_states = 0;
  int num_actions = 0;
  std::vector<double> values;  // row-major [state][action], zero-initialized

  QTable() = default;
  QTable(int states, int actions)
      : num_states(states), num_actions(actions),
        values(static_cast<std::size_t>(states) * actions, 0.0) {
    if (states < 1 || actions < 1)
      throw std::invalid_argument("QTable: dimensions must be >= 1");
  }

  double& at(int s, int a) { return values[static_cast<std::size_t>(s) * num_actions + a]; }
  double at(int s, int a) const { return values[static_cast<std::size_t>(s) * num_actions + a]; }

  double row_max(int s) const {
    double best = at(s, 0);
    for (int a = 1; a < num_actions; ++a) best = std::max(best, at(s, a));
    return best;
  }
};

struct LearningConfig {
  double discount = 1.0;
  double epsilon = 0.5;
  double c_alpha = 0.5;
  double phi_alpha = 0.8;
  bool clamp_alpha = true;

  void validate() const {
    if (discount < 0.0 || discount > 1.0)
      throw std::invalid_argument("LearningConfig: discount must be in [0,1]");
    if (epsilon < 0.0 || epsilon > 1.0)
      throw std::invalid_argument("LearningConfig: epsilon must be in [0,1]");
    if (!(c_alpha > 0.0)) throw std::invalid_argument("LearningConfig: c_alpha must be > 0");
    if (!(phi_alpha > 0.5 && phi_alpha <= 1.0))
      throw std::invalid_argument("LearningConfig: phi_alpha must be in (0.5, 1]");
  }

  static LearningConfig from(const LearningParams& p) {
    LearningConfig c;
    c.discount = p.discount;
    c.epsilon = p.epsilon;
    c.c_alpha = p.c_alpha;
    c.phi_alpha = p.phi_alpha;
    c.clamp_alpha = p.clamp_alpha;
    c.validate();
    return c;
  }
};

// Per-state distribution over actions.
struct Policy {
  int num_states = 0;
  int num_actions = 0;
  std::vector<double> probabilities;  // row-major [state][action]

  double at(int s, int a) const {
    return probabilities[static_cast<std::size_t>(s) * num_actions + a];
  }

  void validate() const {
    for (int s = 0; s < num_states; ++s) {
      double sum = 0.0;
      for (int a = 0; a < num_actions; ++a) {
        const double p = at(s, a);
        if (p < 0.0) throw std::invalid_argument("Policy: negative probability");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("Policy: row does not sum to 1");
    }
  }
};

// Decaying step size alpha_t = 1/(t + c_alpha)^phi_alpha. The first few values
// exceed 1 for c_alpha < 1, so clamping to 1 keeps the update a convex
// combination.
inline double learning_rate(int t, double c_alpha, double phi_alpha, bool clamp) {
  if (t < 0) throw std::invalid_argument("learning_rate: t must be >= 0");
  if (!(c_alpha > 0.0)) throw std::invalid_argument("learning_rate: c_alpha must be > 0");
  if (!(phi_alpha > 0.5 && phi_alpha <= 1.0))
    throw std::invalid_argument("learning_rate: phi_alpha must be in (0.5, 1]");
  const double alpha = std::pow(t + c_alpha, -phi_alpha);
  return clamp ? std::min(alpha, 1.0) : alpha;
}

// Epsilon-greedy draw. Exploration decisions (the epsilon coin and the random
// action) come from explore_rng; argmax ties are broken uniformly from
// tiebreak_rng. Separate streams keep exploration sequences comparable when
// only the Q-table changes.
inline int select_action(const QTable& q, int state, double epsilon, Rng& explore_rng,
                         Rng& tiebreak_rng) {
  if (state < 0 || state >= q.num_states)
    throw std::invalid_argument("select_action: state out of range");
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("select_action: epsilon must be in [0,1]");
  if (explore_rng.bernoulli(epsilon))
    return static_cast<int>(explore_rng.uniform_index(static_cast<std::uint64_t>(q.num_actions)));
  const double best = q.row_max(state);
  int tied = 0;
  for (int a = 0; a < q.num_actions; ++a)
    if (q.at(state, a) == best) ++tied;
  if (tied == 1) {
    for (int a = 0; a < q.num_actions; ++a)
      if (q.at(state, a) == best) return a;
  }
  auto pick = static_cast<int>(tiebreak_rng.uniform_index(static_cast<std::uint64_t>(tied)));
  for (int a = 0; a < q.num_actions; ++a) {
    if (q.at(state, a) == best) {
      if (pick == 0) return a;
      --pick;
    }
  }
  throw std::logic_error("select_action: unreachable");
}

// One temporal-difference backup: Q(s,a) += alpha*(r + discount*max Q(s',.) - Q(s,a)).
inline void q_update(QTable& q, int state, int action, double reward, int next_state,
                     double alpha, double discount) {
  if (state < 0 || state >= q.num_states || next_state < 0 || next_state >= q.num_states)
    throw std::invalid_argument("q_update: state out of range");
  if (action < 0 || action >= q.num_actions)
    throw std::invalid_argument("q_update: action out of range");
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("q_update: alpha must be in [0,1]");
  const double target = reward + discount * q.row_max(next_state);
  q.at(state, action) += alpha * (target - q.at(state, action));
}

// The distribution select_action draws from: tied best actions split 1-epsilon
// evenly, and every action gets epsilon/|A| on top. An all-zero table yields
// the uniform initial strategy.
inline Policy epsilon_greedy_policy(const QTable& q, double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("epsilon_greedy_policy: epsilon must be in [0,1]");
  Policy pi;
  pi.num_states = q.num_states;
  pi.num_actions = q.num_actions;
  pi.probabilities.assign(q.values.size(), 0.0);
  for (int s = 0; s < q.num_states; ++s) {
    const double best = q.row_max(s);
    int tied = 0;
    for (int a = 0; a < q.num_actions; ++a)
      if (q.at(s, a) == best) ++tied;
    const double explore_share = epsilon / q.num_actions;
    const double greedy_share = (1.0 - epsilon) / tied;
    for (int a = 0; a < q.num_actions; ++a) {
      double p = explore_share;
      if (q.at(s, a) == best) p += greedy_share;
      pi.probabilities[static_cast<std::size_t>(s) * q.num_actions + a] = p;
    }
  }
  return pi;
}

struct EpisodeResult {
  metrics::EpisodeLog log;
  std::vector<QTable> q_tables;
  std::vector<Policy> policies;
};

// Full independent-learner episode: each UAV keeps its own zero-initialized
// Q-table and uniform initial strategy, selects epsilon-greedily, and updates
// from its own observation only. Agents share nothing but the environment.
inline EpisodeResult run_episode(const Scenario& scenario,
                                 const std::vector<LearningConfig>& configs,
                                 std::uint64_t seed) {
  const int num_agents = scenario.fleet.num_uavs;
  if (static_cast<int>(configs.size()) != num_agents)
    throw std::invalid_argument("run_episode: need one config per UAV");
  for (const auto& c : configs) c.validate();

  env::Environment environment(scenario, seed);
  const int num_actions = scenario.action_space_size();
  const int K = scenario.radio.num_subchannels;
  const int J = scenario.radio.num_power_levels;

  std::vector<QTable> q;
  std::vector<Policy> pi;
  std::vector<Rng> explore, tiebreak;
  std::vector<int> state(num_agents, 0);
  q.reserve(num_agents);
  for (int m = 0; m < num_agents; ++m) {
    q.emplace_back(2, num_actions);
    pi.push_back(epsilon_greedy_policy(q[m], configs[m].epsilon));
    explore.emplace_back(substream_seed(seed, stream::explore_base + m));
    tiebreak.emplace_back(substream_seed(seed, stream::tiebreak_base + m));
  }

  EpisodeResult out;
  out.log.num_uavs = num_agents;
  out.log.scenario_hash = scenario_hash(scenario);
  out.log.algorithm = "marl";
  out.log.seed = seed;
  out.log.per_slot.reserve(scenario.world.num_slots);

  for (int t = 0; t < scenario.world.num_slots; ++t) {
    env::JointAction joint(num_agents);
    std::vector<int> chosen(num_agents, 0);
    for (int m = 0; m < num_agents; ++m) {
      chosen[m] = select_action(q[m], state[m], configs[m].epsilon, explore[m], tiebreak[m]);
      joint[m] = radio::action_from_index(chosen[m], K, J);
    }
    const auto obs = environment.step(joint);

    metrics::SlotRecord rec;
    rec.slot = t;
    rec.states.resize(num_agents);
    rec.actions = joint;
    rec.rewards.resize(num_agents);
    for (int m = 0; m < num_agents; ++m) {
      const double alpha =
          learning_rate(t, configs[m].c_alpha, configs[m].phi_alpha, configs[m].clamp_alpha);
      q_update(q[m], state[m], chosen[m], obs[m].reward, obs[m].state, alpha,
               configs[m].discount);
      pi[m] = epsilon_greedy_policy(q[m], configs[m].epsilon);
      state[m] = obs[m].state;
      rec.states[m] = obs[m].state;
      rec.rewards[m] = obs[m].reward;
    }
    out.log.per_slot.push_back(std::move(rec));
  }

  out.q_tables = std::move(q);
  out.policies = std::move(pi);
  return out;
}

// Same-config convenience wrapper.
inline EpisodeResult run_episode(const Scenario& scenario, std::uint64_t seed) {
  std::vector<LearningConfig> configs(scenario.fleet.num_uavs,
                                      LearningConfig::from(scenario.learning));
  return run_episode(scenario, configs, seed);
}

}  // namespace uavsim::learn
