#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavsim/channel.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/world.hpp"

namespace uavsim {

// Configuration error carrying the offending key in the message.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct FleetConfig {
  int num_uavs = 2;
  double uav_speed_mps = 40.0;
  std::vector<double> start_angles_rad;  // one per UAV, no default
};

struct LearningParams {
  double discount = 1.0;
  double epsilon = 0.5;
  double c_alpha = 0.5;
  double phi_alpha = 0.8;
  bool clamp_alpha = true;
};

struct RadioConfig {
  int num_subchannels = 1;
  double subchannel_bandwidth_hz = 75.0e3;
  int num_power_levels = 3;
  double max_power_dbm = 23.0;
  double power_cost = 100.0;
  double sinr_threshold_db = 3.0;
  double noise_dbm = -80.0;
};

// Full experiment description. Scalar defaults follow the reference setup:
// 500 m disk, 100 m altitude, 2 GHz probabilistic channel, 75 kHz
// subchannels, 23 dBm max power, 3 dB QoS threshold, -80 dBm noise.
struct Scenario {
  world::DiskWorld world;
  int num_users = 100;
  channel::ChannelConfig channel;
  RadioConfig radio;
  FleetConfig fleet;
  LearningParams learning;
  std::uint64_t seed = 1;

  radio::PowerLevels power_levels() const {
    return radio::power_levels_from_max(radio.max_power_dbm, radio.num_power_levels);
  }

  radio::RewardParams reward_params() const {
    radio::RewardParams p;
    p.bandwidth_per_subchannel_hz = radio.subchannel_bandwidth_hz;
    p.power_cost = radio.power_cost;
    p.sinr_threshold_linear = channel::db_to_linear(radio.sinr_threshold_db);
    p.noise_mw = channel::db_to_linear(radio.noise_dbm);
    return p;
  }

  std::vector<world::Trajectory> trajectories() const {
    std::vector<world::Trajectory> out;
    out.reserve(fleet.start_angles_rad.size());
    for (double angle : fleet.start_angles_rad)
      out.push_back(world::Trajectory::through_center(world.radius_m, angle, fleet.uav_speed_mps));
    return out;
  }

  int action_space_size() const {
    return num_users * radio.num_subchannels * radio.num_power_levels;
  }

  void validate() const;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(v)) throw std::invalid_argument("not finite");
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("key '" + key + "': expected a number, got '" + value + "'");
  }
}

inline long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("key '" + key + "': expected an integer, got '" + value + "'");
  }
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ScenarioError("key '" + key + "': expected true/false, got '" + value + "'");
}

inline std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ScenarioError("key '" + key + "': expected a comma-separated list");
  return out;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline void Scenario::validate() const {
  world.validate();
  if (num_users < 1) throw ScenarioError("key 'num_users': must be >= 1");
  channel.prob.validate();
  channel.los.validate();
  if (radio.num_subchannels < 1) throw ScenarioError("key 'num_subchannels': must be >= 1");
  if (!(radio.subchannel_bandwidth_hz > 0.0))
    throw ScenarioError("key 'subchannel_bandwidth_hz': must be > 0");
  if (radio.num_power_levels < 1) throw ScenarioError("key 'num_power_levels': must be >= 1");
  if (!(radio.power_cost > 0.0)) throw ScenarioError("key 'power_cost': must be > 0");
  if (fleet.num_uavs < 1) throw ScenarioError("key 'num_uavs': must be >= 1");
  if (fleet.uav_speed_mps < 0.0) throw ScenarioError("key 'uav_speed_mps': must be >= 0");
  if (static_cast<int>(fleet.start_angles_rad.size()) != fleet.num_uavs)
    throw ScenarioError("key 'uav_start_angles_rad': need exactly one angle per UAV (" +
                        std::to_string(fleet.num_uavs) + ")");
  if (learning.discount < 0.0 || learning.discount > 1.0)
    throw ScenarioError("key 'discount': must be in [0,1]");
  if (learning.epsilon < 0.0 || learning.epsilon > 1.0)
    throw ScenarioError("key 'epsilon': must be in [0,1]");
  if (!(learning.c_alpha > 0.0)) throw ScenarioError("key 'c_alpha': must be > 0");
  if (!(learning.phi_alpha > 0.5 && learning.phi_alpha <= 1.0))
    throw ScenarioError("key 'phi_alpha': must be in (0.5, 1]");
}

// Parses the flat key = value scenario document. Lines starting with '#' are
// comments. Unknown and duplicate keys are rejected; defaults fill only the
// keys the schema declares defaults for (uav_start_angles_rad has none).
inline Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  std::map<std::string, std::string> seen;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioError("line " + std::to_string(line_no) + ": empty key");
    if (!seen.emplace(key, value).second) throw ScenarioError("key '" + key + "': duplicated");

    if (key == "radius_m") sc.world.radius_m = detail::parse_double(key, value);
    else if (key == "uav_altitude_m") sc.world.uav_altitude_m = detail::parse_double(key, value);
    else if (key == "slot_duration_s") sc.world.slot_duration_s = detail::parse_double(key, value);
    else if (key == "num_slots") sc.world.num_slots = static_cast<int>(detail::parse_int(key, value));
    else if (key == "num_users") sc.num_users = static_cast<int>(detail::parse_int(key, value));
    else if (key == "channel_model") {
      if (value == "probabilistic") sc.channel.model = channel::ChannelModel::probabilistic;
      else if (value == "los") sc.channel.model = channel::ChannelModel::line_of_sight;
      else throw ScenarioError("key 'channel_model': expected 'probabilistic' or 'los'");
    }
    else if (key == "a_env") sc.channel.prob.a_env = detail::parse_double(key, value);
    else if (key == "b_env") sc.channel.prob.b_env = detail::parse_double(key, value);
    else if (key == "carrier_hz") sc.channel.prob.carrier_hz = detail::parse_double(key, value);
    else if (key == "eta_los_db") sc.channel.prob.eta_los_db = detail::parse_double(key, value);
    else if (key == "eta_nlos_db") sc.channel.prob.eta_nlos_db = detail::parse_double(key, value);
    else if (key == "beta0_db") sc.channel.los.beta0_db = detail::parse_double(key, value);
    else if (key == "pathloss_exponent") sc.channel.los.alpha = detail::parse_double(key, value);
    else if (key == "sample_los") sc.channel.sample_los = detail::parse_bool(key, value);
    else if (key == "num_subchannels") sc.radio.num_subchannels = static_cast<int>(detail::parse_int(key, value));
    else if (key == "subchannel_bandwidth_hz") sc.radio.subchannel_bandwidth_hz = detail::parse_double(key, value);
    else if (key == "num_power_levels") sc.radio.num_power_levels = static_cast<int>(detail::parse_int(key, value));
    else if (key == "max_power_dbm") sc.radio.max_power_dbm = detail::parse_double(key, value);
    else if (key == "power_cost") sc.radio.power_cost = detail::parse_double(key, value);
    else if (key == "sinr_threshold_db") sc.radio.sinr_threshold_db = detail::parse_double(key, value);
    else if (key == "noise_dbm") sc.radio.noise_dbm = detail::parse_double(key, value);
    else if (key == "num_uavs") sc.fleet.num_uavs = static_cast<int>(detail::parse_int(key, value));
    else if (key == "uav_speed_mps") sc.fleet.uav_speed_mps = detail::parse_double(key, value);
    else if (key == "uav_start_angles_rad") sc.fleet.start_angles_rad = detail::parse_double_list(key, value);
    else if (key == "discount") sc.learning.discount = detail::parse_double(key, value);
    else if (key == "epsilon") sc.learning.epsilon = detail::parse_double(key, value);
    else if (key == "c_alpha") sc.learning.c_alpha = detail::parse_double(key, value);
    else if (key == "phi_alpha") sc.learning.phi_alpha = detail::parse_double(key, value);
    else if (key == "clamp_alpha") sc.learning.clamp_alpha = detail::parse_bool(key, value);
    else if (key == "seed") sc.seed = static_cast<std::uint64_t>(detail::parse_int(key, value));
    else throw ScenarioError("unknown key '" + key + "'");
  }
  if (seen.find("uav_start_angles_rad") == seen.end())
    throw ScenarioError("key 'uav_start_angles_rad': required (one edge angle per UAV)");
  sc.validate();
  return sc;
}

// Canonical serialization: fixed key order, %.17g numbers. parse/serialize
// round-trips exactly after one normalization pass.
inline std::string serialize_scenario(const Scenario& sc) {
  using detail::format_double;
  std::ostringstream out;
  out << "radius_m = " << format_double(sc.world.radius_m) << "\n";
  out << "uav_altitude_m = " << format_double(sc.world.uav_altitude_m) << "\n";
  out << "slot_duration_s = " << format_double(sc.world.slot_duration_s) << "\n";
  out << "num_slots = " << sc.world.num_slots << "\n";
  out << "num_users = " << sc.num_users << "\n";
  out << "channel_model = "
      << (sc.channel.model == channel::ChannelModel::probabilistic ? "probabilistic" : "los")
      << "\n";
  out << "a_env = " << format_double(sc.channel.prob.a_env) << "\n";
  out << "b_env = " << format_double(sc.channel.prob.b_env) << "\n";
  out << "carrier_hz = " << format_double(sc.channel.prob.carrier_hz) << "\n";
  out << "eta_los_db = " << format_double(sc.channel.prob.eta_los_db) << "\n";
  out << "eta_nlos_db = " << format_double(sc.channel.prob.eta_nlos_db) << "\n";
  out << "beta0_db = " << format_double(sc.channel.los.beta0_db) << "\n";
  out << "pathloss_exponent = " << format_double(sc.channel.los.alpha) << "\n";
  out << "sample_los = " << (sc.channel.sample_los ? "true" : "false") << "\n";
  out << "num_subchannels = " << sc.radio.num_subchannels << "\n";
  out << "subchannel_bandwidth_hz = " << format_double(sc.radio.subchannel_bandwidth_hz) << "\n";
  out << "num_power_levels = " << sc.radio.num_power_levels << "\n";
  out << "max_power_dbm = " << format_double(sc.radio.max_power_dbm) << "\n";
  out << "power_cost = " << format_double(sc.radio.power_cost) << "\n";
  out << "sinr_threshold_db = " << format_double(sc.radio.sinr_threshold_db) << "\n";
  out << "noise_dbm = " << format_double(sc.radio.noise_dbm) << "\n";
  out << "num_uavs = " << sc.fleet.num_uavs << "\n";
  out << "uav_speed_mps = " << format_double(sc.fleet.uav_speed_mps) << "\n";
  out << "uav_start_angles_rad = ";
  for (std::size_t i = 0; i < sc.fleet.start_angles_rad.size(); ++i) {
    if (i > 0) out << ",";
    out << format_double(sc.fleet.start_angles_rad[i]);
  }
  out << "\n";
  out << "discount = " << format_double(sc.learning.discount) << "\n";
  out << "epsilon = " << format_double(sc.learning.epsilon) << "\n";
  out << "c_alpha = " << format_double(sc.learning.c_alpha) << "\n";
  out << "phi_alpha = " << format_double(sc.learning.phi_alpha) << "\n";
  out << "clamp_alpha = " << (sc.learning.clamp_alpha ? "true" : "false") << "\n";
  out << "seed = " << sc.seed << "\n";
  return out.str();
}

// FNV-1a over the canonical serialization; identifies a scenario in logs.
inline std::string scenario_hash(const Scenario& sc) {
  const std::string text = serialize_scenario(sc);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace uavsim
