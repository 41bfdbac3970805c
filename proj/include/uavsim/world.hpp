#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavsim/rng.hpp"

namespace uavsim::world {

struct Position {
  double x_m = 0.0;
  double y_m = 0.0;
};

// Disk-shaped service region on a discrete time axis.
struct DiskWorld {
  double radius_m = 500.0;
  double uav_altitude_m = 100.0;
  double slot_duration_s = 0.1;
  int num_slots = 400;

  void validate() const {
    if (!(radius_m > 0.0)) throw std::invalid_argument("DiskWorld: radius_m must be > 0");
    if (!(uav_altitude_m > 0.0))
      throw std::invalid_argument("DiskWorld: uav_altitude_m must be > 0");
    if (!(slot_duration_s > 0.0))
      throw std::invalid_argument("DiskWorld: slot_duration_s must be > 0");
    // num_slots == 0 is permitted as a degenerate empty episode.
    if (num_slots < 0) throw std::invalid_argument("DiskWorld: num_slots must be >= 0");
  }
};

// Static ground users, placed once per episode.
struct UserField {
  std::vector<Position> positions;

  std::size_t size() const { return positions.size(); }
};

// Straight-line flight at constant speed; the start point sits on the disk
// edge. The line continues past the far edge (no wraparound, no stop).
struct Trajectory {
  Position start;
  double heading_x = 1.0;
  double heading_y = 0.0;
  double speed_mps = 0.0;

  void validate() const {
    const double norm = std::hypot(heading_x, heading_y);
    if (std::abs(norm - 1.0) > 1e-9)
      throw std::invalid_argument("Trajectory: heading must be a unit vector");
    if (speed_mps < 0.0) throw std::invalid_argument("Trajectory: speed_mps must be >= 0");
  }

  // Edge start at `angle_rad`, heading straight through the disk center.
  static Trajectory through_center(double radius_m, double angle_rad, double speed_mps) {
    Trajectory t;
    t.start = {radius_m * std::cos(angle_rad), radius_m * std::sin(angle_rad)};
    t.heading_x = -std::cos(angle_rad);
    t.heading_y = -std::sin(angle_rad);
    t.speed_mps = speed_mps;
    return t;
  }
};

// `count` points i.i.d. uniform over the disk area. radius = r*sqrt(u) keeps
// the density uniform in area rather than in radius.
inline UserField sample_users(int count, double radius_m, Rng& rng) {
  if (count < 1) throw std::invalid_argument("sample_users: count must be >= 1");
  if (!(radius_m > 0.0)) throw std::invalid_argument("sample_users: radius_m must be > 0");
  UserField field;
  field.positions.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double r = radius_m * std::sqrt(rng.next_double());
    const double phi = 2.0 * M_PI * rng.next_double();
    field.positions.push_back({r * std::cos(phi), r * std::sin(phi)});
  }
  return field;
}

inline Position uav_position(const Trajectory& traj, int t, double slot_duration_s) {
  const double travelled = traj.speed_mps * slot_duration_s * static_cast<double>(t);
  return {traj.start.x_m + traj.heading_x * travelled,
          traj.start.y_m + traj.heading_y * travelled};
}

inline double distance_3d(const Position& uav, const Position& user, double altitude_m) {
  if (!(altitude_m > 0.0)) throw std::invalid_argument("distance_3d: altitude_m must be > 0");
  const double dx = user.x_m - uav.x_m;
  const double dy = user.y_m - uav.y_m;
  return std::sqrt(dx * dx + dy * dy + altitude_m * altitude_m);
}

// Boundary-inclusive membership, so the slot that lands exactly on the far
// edge still counts as inside.
inline bool in_disk(const Position& p, double radius_m) {
  if (!(radius_m > 0.0)) throw std::invalid_argument("in_disk: radius_m must be > 0");
  return p.x_m * p.x_m + p.y_m * p.y_m <= radius_m * radius_m;
}

}  // namespace uavsim::world
