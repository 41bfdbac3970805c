#include <catch_amalgamated.hpp>

#include <cmath>

#include "uavsim/rng.hpp"
#include "uavsim/world.hpp"

using namespace uavsim;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("DiskWorld validates its invariants") {
  world::DiskWorld w;
  CHECK_NOTHROW(w.validate());

  world::DiskWorld bad = w;
  bad.radius_m = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = w;
  bad.uav_altitude_m = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = w;
  bad.slot_duration_s = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = w;
  bad.num_slots = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.num_slots = 0;  // degenerate empty episode is allowed
  CHECK_NOTHROW(bad.validate());
}

TEST_CASE("through_center starts on the edge and heads through the origin") {
  const auto traj = world::Trajectory::through_center(500.0, 0.0, 40.0);
  CHECK_NOTHROW(traj.validate());
  CHECK_THAT(traj.start.x_m, WithinAbs(500.0, 1e-12));
  CHECK_THAT(traj.start.y_m, WithinAbs(0.0, 1e-12));
  CHECK_THAT(traj.heading_x, WithinAbs(-1.0, 1e-12));
  CHECK_THAT(traj.heading_y, WithinAbs(0.0, 1e-12));

  const auto traj2 = world::Trajectory::through_center(500.0, M_PI / 2.0, 40.0);
  CHECK_THAT(traj2.start.x_m, WithinAbs(0.0, 1e-9));
  CHECK_THAT(traj2.start.y_m, WithinAbs(500.0, 1e-9));
  CHECK_THAT(traj2.heading_y, WithinAbs(-1.0, 1e-12));

  // Halfway along the crossing the UAV passes the center.
  const auto mid = world::uav_position(traj, 125, 0.1);
  CHECK_THAT(mid.x_m, WithinAbs(0.0, 1e-9));
  CHECK_THAT(mid.y_m, WithinAbs(0.0, 1e-9));
}

TEST_CASE("trajectory validation rejects bad headings and speeds") {
  world::Trajectory t;
  t.heading_x = 0.5;
  t.heading_y = 0.5;  // not unit length
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  t = world::Trajectory::through_center(100.0, 0.3, 10.0);
  t.speed_mps = -1.0;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("uav_position advances linearly without stopping at the far edge") {
  const auto traj = world::Trajectory::through_center(500.0, 0.0, 40.0);
  const auto p1 = world::uav_position(traj, 1, 0.1);
  CHECK_THAT(p1.x_m, WithinAbs(496.0, 1e-12));
  const auto p250 = world::uav_position(traj, 250, 0.1);
  CHECK_THAT(p250.x_m, WithinAbs(-500.0, 1e-9));
  CHECK(world::in_disk(p250, 500.0));  // far edge still counts as inside
  const auto p251 = world::uav_position(traj, 251, 0.1);
  CHECK_THAT(p251.x_m, WithinAbs(-504.0, 1e-9));
  CHECK_FALSE(world::in_disk(p251, 500.0));
}

TEST_CASE("first slot outside the disk is floor(2R/(v*Ts)) + 1") {
  struct Case {
    double radius, speed, slot_s;
  };
  for (const Case& c : {Case{500.0, 40.0, 0.1}, Case{500.0, 37.0, 0.1},
                        Case{300.0, 25.0, 0.13}, Case{120.0, 7.0, 0.3}}) {
    const auto traj = world::Trajectory::through_center(c.radius, 0.9, c.speed);
    const double crossing = 2.0 * c.radius / (c.speed * c.slot_s);
    const int expected_exit = static_cast<int>(std::floor(crossing)) + 1;
    int first_outside = -1;
    for (int t = 0; t < 10000; ++t) {
      if (!world::in_disk(world::uav_position(traj, t, c.slot_s), c.radius)) {
        first_outside = t;
        break;
      }
    }
    CAPTURE(c.radius, c.speed, c.slot_s);
    CHECK(first_outside == expected_exit);
  }
}

TEST_CASE("sample_users is frozen for a fixed substream") {
  Rng rng(substream_seed(2024, stream::users));
  const auto field = world::sample_users(3, 500.0, rng);
  REQUIRE(field.size() == 3);
  CHECK_THAT(field.positions[0].x_m, WithinAbs(-411.2935604215831, 1e-9));
  CHECK_THAT(field.positions[0].y_m, WithinAbs(-51.4424032268387, 1e-9));
  CHECK_THAT(field.positions[1].x_m, WithinAbs(-368.5779229405891, 1e-9));
  CHECK_THAT(field.positions[1].y_m, WithinAbs(131.01812842631946, 1e-9));
  CHECK_THAT(field.positions[2].x_m, WithinAbs(188.67382981303768, 1e-9));
  CHECK_THAT(field.positions[2].y_m, WithinAbs(373.1323121413989, 1e-9));
}

TEST_CASE("sample_users rejects bad arguments and stays inside the disk") {
  Rng rng(1);
  CHECK_THROWS_AS(world::sample_users(0, 500.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(world::sample_users(5, 0.0, rng), std::invalid_argument);
  const auto field = world::sample_users(1000, 500.0, rng);
  for (const auto& p : field.positions) CHECK(world::in_disk(p, 500.0));
}

TEST_CASE("sample_users covers the disk uniformly in area") {
  Rng rng(12345);
  const int n = 20000;
  const auto field = world::sample_users(n, 500.0, rng);
  double mean_r = 0.0;
  int quad[4] = {0, 0, 0, 0};
  for (const auto& p : field.positions) {
    mean_r += std::hypot(p.x_m, p.y_m);
    const int q = (p.x_m >= 0.0 ? 0 : 1) + (p.y_m >= 0.0 ? 0 : 2);
    ++quad[q];
  }
  mean_r /= n;
  // Uniform-in-area mean radius is 2R/3; the sample mean's standard error is
  // about 0.8 m here.
  CHECK_THAT(mean_r, WithinAbs(1000.0 / 3.0, 5.0));
  for (int q = 0; q < 4; ++q) {
    CHECK(quad[q] > 4500);
    CHECK(quad[q] < 5500);
  }
}

TEST_CASE("distance_3d includes altitude") {
  CHECK_THAT(world::distance_3d({0.0, 0.0}, {30.0, 40.0}, 100.0),
             WithinRel(111.80339887498948, 1e-12));
  CHECK_THAT(world::distance_3d({10.0, -5.0}, {10.0, -5.0}, 100.0),
             WithinRel(100.0, 1e-12));  // directly overhead
  CHECK_THROWS_AS(world::distance_3d({0, 0}, {1, 1}, 0.0), std::invalid_argument);
}

TEST_CASE("in_disk is boundary-inclusive") {
  CHECK(world::in_disk({500.0, 0.0}, 500.0));
  CHECK(world::in_disk({0.0, 0.0}, 500.0));
  CHECK_FALSE(world::in_disk({500.0000001, 0.0}, 500.0));
  CHECK_THROWS_AS(world::in_disk({0, 0}, 0.0), std::invalid_argument);
}
