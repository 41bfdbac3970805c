#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uavsim/rng.hpp"

namespace uavsim::oracle {

// Fully materialized finite MDP: transition and reward tensors indexed
// [state][action][next_state]. Ground truth for convergence tests; kept
// independent of the learning module on purpose.
struct ExplicitMdp {
  int num_states = 0;
  int num_actions = 0;
  std::vector<double> transition;  // F(s,a,s'), rows sum to 1
  std::vector<double> reward;      // R(s,a,s')
  double discount = 0.0;           // strictly < 1 here

  double f(int s, int a, int s2) const {
    return transition[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
  }
  double r(int s, int a, int s2) const {
    return reward[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
  }
  double& f(int s, int a, int s2) {
    return transition[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
  }
  double& r(int s, int a, int s2) {
    return reward[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
  }

  void validate() const {
    if (num_states < 1 || num_actions < 1)
      throw std::invalid_argument("ExplicitMdp: dimensions must be >= 1");
    const auto expected = static_cast<std::size_t>(num_states) * num_actions * num_states;
    if (transition.size() != expected || reward.size() != expected)
      throw std::invalid_argument("ExplicitMdp: tensor sizes do not match dimensions");
    if (!(discount >= 0.0 && discount < 1.0))
      throw std::invalid_argument("ExplicitMdp: discount must be in [0,1)");
    for (int s = 0; s < num_states; ++s) {
      for (int a = 0; a < num_actions; ++a) {
        double sum = 0.0;
        for (int s2 = 0; s2 < num_states; ++s2) {
          if (f(s, a, s2) < 0.0)
            throw std::invalid_argument("ExplicitMdp: negative transition probability");
          sum += f(s, a, s2);
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw std::invalid_argument("ExplicitMdp: transition row does not sum to 1");
      }
    }
  }
};

struct QFunction {
  int num_states = 0;
  int num_actions = 0;
  std::vector<double> values;  // row-major [state][action]

  QFunction() = default;
  QFunction(int states, int actions)
      : num_states(states), num_actions(actions),
        values(static_cast<std::size_t>(states) * actions, 0.0) {}

  double& at(int s, int a) { return values[static_cast<std::size_t>(s) * num_actions + a]; }
  double at(int s, int a) const { return values[static_cast<std::size_t>(s) * num_actions + a]; }

  double row_max(int s) const {
    double best = at(s, 0);
    for (int a = 1; a < num_actions; ++a) best = std::max(best, at(s, a));
    return best;
  }
};

inline double sup_distance(const QFunction& a, const QFunction& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("sup_distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

// Max-backup operator (Hq)(s,a) = sum_s' F(s,a,s') * (R(s,a,s') + d*max_a' q(s',a')).
// A sup-norm contraction with modulus equal to the discount.
inline QFunction bellman_operator(const ExplicitMdp& mdp, const QFunction& q) {
  if (q.num_states != mdp.num_states || q.num_actions != mdp.num_actions)
    throw std::invalid_argument("bellman_operator: Q dimensions do not match MDP");
  QFunction out(mdp.num_states, mdp.num_actions);
  std::vector<double> next_best(mdp.num_states);
  for (int s2 = 0; s2 < mdp.num_states; ++s2) next_best[s2] = q.row_max(s2);
  for (int s = 0; s < mdp.num_states; ++s) {
    for (int a = 0; a < mdp.num_actions; ++a) {
      double v = 0.0;
      for (int s2 = 0; s2 < mdp.num_states; ++s2)
        v += mdp.f(s, a, s2) * (mdp.r(s, a, s2) + mdp.discount * next_best[s2]);
      out.at(s, a) = v;
    }
  }
  return out;
}

// Iterates H from zero until successive iterates are closer than tol in
// sup-norm. The result is within tol*d/(1-d) of the true fixed point.
inline QFunction value_iteration(const ExplicitMdp& mdp, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("value_iteration: tol must be > 0");
  QFunction q(mdp.num_states, mdp.num_actions);
  for (;;) {
    QFunction next = bellman_operator(mdp, q);
    const double delta = sup_distance(next, q);
    q = std::move(next);
    if (delta < tol) return q;
  }
}

// V(s) = sum_a policy[s][a] * Q(s,a).
inline std::vector<double> state_value_from_q(const QFunction& q,
                                              const std::vector<std::vector<double>>& policy) {
  if (static_cast<int>(policy.size()) != q.num_states)
    throw std::invalid_argument("state_value_from_q: policy row count != states");
  std::vector<double> v(q.num_states, 0.0);
  for (int s = 0; s < q.num_states; ++s) {
    if (static_cast<int>(policy[s].size()) != q.num_actions)
      throw std::invalid_argument("state_value_from_q: policy column count != actions");
    for (int a = 0; a < q.num_actions; ++a) v[s] += policy[s][a] * q.at(s, a);
  }
  return v;
}

// Fixed-policy value via iteration of the expectation backup
// V(s) = sum_a pi(s,a) sum_s' F(s,a,s') (R + d*V(s')).
inline std::vector<double> policy_evaluation(const ExplicitMdp& mdp,
                                             const std::vector<std::vector<double>>& policy,
                                             double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("policy_evaluation: tol must be > 0");
  if (static_cast<int>(policy.size()) != mdp.num_states)
    throw std::invalid_argument("policy_evaluation: policy row count != states");
  std::vector<double> v(mdp.num_states, 0.0);
  for (;;) {
    std::vector<double> next(mdp.num_states, 0.0);
    double delta = 0.0;
    for (int s = 0; s < mdp.num_states; ++s) {
      double vs = 0.0;
      for (int a = 0; a < mdp.num_actions; ++a) {
        double backup = 0.0;
        for (int s2 = 0; s2 < mdp.num_states; ++s2)
          backup += mdp.f(s, a, s2) * (mdp.r(s, a, s2) + mdp.discount * v[s2]);
        vs += policy[s][a] * backup;
      }
      next[s] = vs;
      delta = std::max(delta, std::abs(vs - v[s]));
    }
    v = std::move(next);
    if (delta < tol) return v;
  }
}

// Random MDP: transition rows from a flat Dirichlet (normalized exponentials),
// rewards uniform on [-1, 1].
inline ExplicitMdp random_mdp(int num_states, int num_actions, double discount, Rng& rng) {
  ExplicitMdp mdp;
  mdp.num_states = num_states;
  mdp.num_actions = num_actions;
  mdp.discount = discount;
  const auto size = static_cast<std::size_t>(num_states) * num_actions * num_states;
  mdp.transition.assign(size, 0.0);
  mdp.reward.assign(size, 0.0);
  for (int s = 0; s < num_states; ++s) {
    for (int a = 0; a < num_actions; ++a) {
      double sum = 0.0;
      for (int s2 = 0; s2 < num_states; ++s2) {
        const double e = -std::log(1.0 - rng.next_double());
        mdp.f(s, a, s2) = e;
        sum += e;
      }
      for (int s2 = 0; s2 < num_states; ++s2) {
        mdp.f(s, a, s2) = sum > 0.0 ? mdp.f(s, a, s2) / sum : 1.0 / num_states;
        mdp.r(s, a, s2) = rng.uniform(-1.0, 1.0);
      }
    }
  }
  mdp.validate();
  return mdp;
}

// Draws s' ~ F(s,a,.) and returns (s', R(s,a,s')); lets a learner run against
// the explicit model.
inline std::pair<int, double> sample_transition(const ExplicitMdp& mdp, int s, int a, Rng& rng) {
  if (s < 0 || s >= mdp.num_states || a < 0 || a >= mdp.num_actions)
    throw std::invalid_argument("sample_transition: index out of range");
  const double u = rng.next_double();
  double acc = 0.0;
  int s2 = mdp.num_states - 1;  // guard against rounding past the last bucket
  for (int i = 0; i < mdp.num_states; ++i) {
    acc += mdp.f(s, a, i);
    if (u < acc) {
      s2 = i;
      break;
    }
  }
  return {s2, mdp.r(s, a, s2)};
}

}  // namespace uavsim::oracle
