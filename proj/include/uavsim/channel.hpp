#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavsim/rng.hpp"
#include "uavsim/world.hpp"

namespace uavsim::channel {

constexpr double kSpeedOfLight = 3.0e8;  // m/s

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Probabilistic LoS/NLoS air-to-ground model: environment constants (a, b),
// carrier frequency, and the mean excess losses of the two link classes.
struct ProbChannelParams {
  double a_env = 9.61;
  double b_env = 0.16;
  double carrier_hz = 2.0e9;
  double eta_los_db = 1.0;
  double eta_nlos_db = 20.0;

  void validate() const {
    if (!(a_env > 0.0)) throw std::invalid_argument("ProbChannelParams: a_env must be > 0");
    if (!(b_env > 0.0)) throw std::invalid_argument("ProbChannelParams: b_env must be > 0");
    if (!(carrier_hz > 0.0))
      throw std::invalid_argument("ProbChannelParams: carrier_hz must be > 0");
  }
};

// Pure line-of-sight model: gain beta0 at the 1 m reference distance, decay
// with path-loss exponent alpha.
struct LosChannelParams {
  double beta0_db = -60.0;
  double alpha = 2.0;

  void validate() const {
    if (!(alpha >= 2.0)) throw std::invalid_argument("LosChannelParams: alpha must be >= 2");
  }
};

enum class ChannelModel { probabilistic, line_of_sight };

struct ChannelConfig {
  ChannelModel model = ChannelModel::probabilistic;
  ProbChannelParams prob;
  LosChannelParams los;
  // Variant: draw the LoS/NLoS state per (uav, user, slot) instead of using
  // the deterministic mean pathloss.
  bool sample_los = false;
};

// Linear power gains for every (uav, user, subchannel) triple at one slot.
struct GainMatrix {
  int num_uavs = 0;
  int num_users = 0;
  int num_subchannels = 0;
  int slot = 0;
  std::vector<double> gains;  // [m][l][k], row-major

  double at(int m, int l, int k) const {
    return gains[static_cast<std::size_t>((m * num_users + l) * num_subchannels + k)];
  }
  double& at(int m, int l, int k) {
    return gains[static_cast<std::size_t>((m * num_users + l) * num_subchannels + k)];
  }
};

// LoS probability as a logistic in the elevation angle, with the angle in
// degrees: 1 / (1 + a*exp(-b*(theta_deg - a))).
inline double los_probability(const ProbChannelParams& params, double distance_m,
                              double altitude_m) {
  if (!(altitude_m > 0.0))
    throw std::invalid_argument("los_probability: altitude_m must be > 0");
  if (distance_m < altitude_m)
    throw std::invalid_argument("los_probability: distance_m must be >= altitude_m");
  const double theta_deg = std::asin(altitude_m / distance_m) * 180.0 / M_PI;
  return 1.0 / (1.0 + params.a_env * std::exp(-params.b_env * (theta_deg - params.a_env)));
}

inline double free_space_pathloss_db(double distance_m, double carrier_hz) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("free_space_pathloss_db: distance_m must be > 0");
  if (!(carrier_hz > 0.0))
    throw std::invalid_argument("free_space_pathloss_db: carrier_hz must be > 0");
  return 20.0 * std::log10(distance_m) + 20.0 * std::log10(carrier_hz) +
         20.0 * std::log10(4.0 * M_PI / kSpeedOfLight);
}

// LoS/NLoS mixture of free-space pathloss plus excess loss.
inline double mean_pathloss_db(const ProbChannelParams& params, double distance_m,
                               double altitude_m) {
  const double p_los = los_probability(params, distance_m, altitude_m);
  const double fs = free_space_pathloss_db(distance_m, params.carrier_hz);
  return p_los * (fs + params.eta_los_db) + (1.0 - p_los) * (fs + params.eta_nlos_db);
}

inline double los_gain(const LosChannelParams& params, double distance_m) {
  if (distance_m < 1.0)
    throw std::invalid_argument("los_gain: distance_m below the 1 m reference distance");
  return db_to_linear(params.beta0_db) * std::pow(distance_m, -params.alpha);
}

// Gains for every (uav, user, subchannel) at one slot. Gains are
// frequency-flat across subchannels; with sample_los the LoS state is drawn
// per (uav, user) in fixed index order so the stream stays reproducible.
inline GainMatrix build_gain_matrix(const ChannelConfig& cfg,
                                    const std::vector<world::Position>& uav_positions,
                                    const world::UserField& users, double altitude_m,
                                    int num_subchannels, int slot, Rng& rng) {
  GainMatrix gm;
  gm.num_uavs = static_cast<int>(uav_positions.size());
  gm.num_users = static_cast<int>(users.size());
  gm.num_subchannels = num_subchannels;
  gm.slot = slot;
  gm.gains.resize(static_cast<std::size_t>(gm.num_uavs) * gm.num_users * num_subchannels);
  for (int m = 0; m < gm.num_uavs; ++m) {
    for (int l = 0; l < gm.num_users; ++l) {
      const double d = world::distance_3d(uav_positions[m], users.positions[l], altitude_m);
      double gain = 0.0;
      switch (cfg.model) {
        case ChannelModel::probabilistic: {
          double pl_db;
          if (cfg.sample_los) {
            const double p_los = los_probability(cfg.prob, d, altitude_m);
            const double fs = free_space_pathloss_db(d, cfg.prob.carrier_hz);
            pl_db = fs + (rng.bernoulli(p_los) ? cfg.prob.eta_los_db : cfg.prob.eta_nlos_db);
          } else {
            pl_db = mean_pathloss_db(cfg.prob, d, altitude_m);
          }
          gain = db_to_linear(-pl_db);
          break;
        }
        case ChannelModel::line_of_sight:
          gain = los_gain(cfg.los, d);
          break;
      }
      for (int k = 0; k < num_subchannels; ++k) gm.at(m, l, k) = gain;
    }
  }
  return gm;
}

}  // namespace uavsim::channel
