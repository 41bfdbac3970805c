#include <catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "uavsim/scenario.hpp"

using namespace uavsim;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const char* kMinimal = "uav_start_angles_rad = 0.25,1.5\n";
}

TEST_CASE("defaults mirror the reference setup") {
  const Scenario sc = parse_scenario(kMinimal);
  CHECK(sc.world.radius_m == 500.0);
  CHECK(sc.world.uav_altitude_m == 100.0);
  CHECK(sc.world.slot_duration_s == 0.1);
  CHECK(sc.world.num_slots == 400);
  CHECK(sc.num_users == 100);
  CHECK(sc.channel.model == channel::ChannelModel::probabilistic);
  CHECK(sc.channel.prob.a_env == 9.61);
  CHECK(sc.channel.prob.b_env == 0.16);
  CHECK(sc.channel.prob.carrier_hz == 2.0e9);
  CHECK(sc.channel.prob.eta_los_db == 1.0);
  CHECK(sc.channel.prob.eta_nlos_db == 20.0);
  CHECK_FALSE(sc.channel.sample_los);
  CHECK(sc.radio.num_subchannels == 1);
  CHECK(sc.radio.subchannel_bandwidth_hz == 75.0e3);
  CHECK(sc.radio.num_power_levels == 3);
  CHECK(sc.radio.max_power_dbm == 23.0);
  CHECK(sc.radio.power_cost == 100.0);
  CHECK(sc.radio.sinr_threshold_db == 3.0);
  CHECK(sc.radio.noise_dbm == -80.0);
  CHECK(sc.fleet.num_uavs == 2);
  CHECK(sc.fleet.uav_speed_mps == 40.0);
  CHECK(sc.learning.discount == 1.0);
  CHECK(sc.learning.epsilon == 0.5);
  CHECK(sc.learning.c_alpha == 0.5);
  CHECK(sc.learning.phi_alpha == 0.8);
  CHECK(sc.learning.clamp_alpha);
  CHECK(sc.seed == 1);
}

TEST_CASE("derived quantities convert correctly") {
  const Scenario sc = parse_scenario(kMinimal);
  const auto levels = sc.power_levels();
  REQUIRE(levels.levels_mw.size() == 3);
  CHECK_THAT(levels.levels_mw[2], WithinRel(199.52623149688785, 1e-12));
  const auto rp = sc.reward_params();
  CHECK_THAT(rp.sinr_threshold_linear, WithinRel(1.9952623149688795, 1e-12));
  CHECK_THAT(rp.noise_mw, WithinRel(1.0e-8, 1e-12));
  CHECK(rp.bandwidth_per_subchannel_hz == 75.0e3);
  CHECK(sc.action_space_size() == 100 * 1 * 3);
  const auto trajs = sc.trajectories();
  REQUIRE(trajs.size() == 2);
  CHECK_THAT(trajs[0].start.x_m, WithinRel(500.0 * std::cos(0.25), 1e-12));
  CHECK(trajs[0].speed_mps == 40.0);
}

TEST_CASE("the start-angle list is required and must match the fleet size") {
  CHECK_THROWS_MATCHES(parse_scenario(""), ScenarioError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("uav_start_angles_rad")));
  CHECK_THROWS_MATCHES(parse_scenario("uav_start_angles_rad = 0.25\n"), ScenarioError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("uav_start_angles_rad")));
  CHECK_NOTHROW(parse_scenario("num_uavs = 1\nuav_start_angles_rad = 0.25\n"));
}

TEST_CASE("unknown, duplicate and malformed keys are rejected by name") {
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "frobnicate = 3\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("frobnicate")));
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "seed = 1\nseed = 2\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("seed")));
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "radius_m = banana\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("radius_m")));
  CHECK_THROWS_MATCHES(parse_scenario(std::string(kMinimal) + "just a line\n"),
                       ScenarioError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("key = value")));
}

TEST_CASE("invariant violations name the offending key") {
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "num_power_levels = 0\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("num_power_levels")));
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "epsilon = 1.5\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("epsilon")));
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "phi_alpha = 0.5\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("phi_alpha")));
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "num_users = 0\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("num_users")));
}

TEST_CASE("comments, blank lines and spacing variants parse") {
  const Scenario sc = parse_scenario(
      "# reward curve setup\n"
      "\n"
      "num_uavs=1   # tight spacing\n"
      "  uav_start_angles_rad =  0.5  \n"
      "epsilon = 0.9\n");
  CHECK(sc.fleet.num_uavs == 1);
  CHECK(sc.learning.epsilon == 0.9);
}

TEST_CASE("booleans and channel model names are validated") {
  Scenario sc = parse_scenario(std::string(kMinimal) + "sample_los = true\n");
  CHECK(sc.channel.sample_los);
  sc = parse_scenario(std::string(kMinimal) + "channel_model = los\n");
  CHECK(sc.channel.model == channel::ChannelModel::line_of_sight);
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "sample_los = maybe\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("sample_los")));
  CHECK_THROWS_MATCHES(
      parse_scenario(std::string(kMinimal) + "channel_model = rician\n"), ScenarioError,
      Catch::Matchers::MessageMatches(ContainsSubstring("channel_model")));
}

TEST_CASE("serialization round-trips exactly after one normalization pass") {
  const std::string text = std::string(kMinimal) +
                           "radius_m = 350.25\nepsilon = 0.05\nseed = 99\n"
                           "uav_speed_mps = 37.5\n";
  const Scenario sc = parse_scenario(text);
  const std::string canonical = serialize_scenario(sc);
  const Scenario sc2 = parse_scenario(canonical);
  CHECK(serialize_scenario(sc2) == canonical);
  CHECK(sc2.world.radius_m == sc.world.radius_m);
  CHECK(sc2.learning.epsilon == sc.learning.epsilon);
  CHECK(sc2.seed == 99);
}

TEST_CASE("scenario hash identifies the configuration") {
  const Scenario a = parse_scenario(kMinimal);
  const Scenario b = parse_scenario(kMinimal);
  CHECK(scenario_hash(a) == scenario_hash(b));
  CHECK(scenario_hash(a).size() == 16);
  Scenario c = a;
  c.seed = 2;
  CHECK(scenario_hash(a) != scenario_hash(c));
  Scenario d = a;
  d.learning.epsilon = 0.25;
  CHECK(scenario_hash(a) != scenario_hash(d));
}
