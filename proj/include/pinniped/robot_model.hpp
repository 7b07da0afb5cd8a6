#pragma once

// Whole-robot kinematics: four limbs on a tetrahedral hub, a floating base,
// and mass-weighted centre of gravity.
//
// Robot frame {O_R} is at the hub centre. The head limb H points along +Z_R;
// B, FR, FL are tilted below the horizontal by the mount elevation delta and
// spread 120 degrees apart in azimuth (B toward -X_R, FR toward -Y_R, FL
// toward +Y_R), so that all four limb axes are pairwise arccos(-1/3) apart.

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "pinniped/errors.hpp"
#include "pinniped/limb_kinematics.hpp"
#include "pinniped/numerics.hpp"

namespace pinniped {

enum class LimbId : int { H = 1, B = 2, FR = 3, FL = 4 };

inline constexpr std::array<LimbId, 4> kAllLimbs{LimbId::H, LimbId::B, LimbId::FR, LimbId::FL};

constexpr std::size_t limb_index(LimbId id) { return static_cast<std::size_t>(id) - 1; }

constexpr std::string_view limb_name(LimbId id) {
  switch (id) {
    case LimbId::H: return "H";
    case LimbId::B: return "B";
    case LimbId::FR: return "FR";
    case LimbId::FL: return "FL";
  }
  return "?";
}

inline std::optional<LimbId> limb_from_name(std::string_view name) {
  for (LimbId id : kAllLimbs) {
    if (limb_name(id) == name) return id;
  }
  return std::nullopt;
}

/// Elevation angle of the lower limbs below the hub's horizontal plane:
/// asin(1/3), about 19.47 degrees.
inline const double kTetrahedralElevation = std::asin(1.0 / 3.0);

/// Floating-base pose of {O_R} in the world frame, Z-Y-X Euler angles.
struct FloatingBasePose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;    // alpha, about Z
  double pitch = 0.0;  // beta, about Y
  double roll = 0.0;   // gamma, about X

  FloatingBasePose normalized() const {
    return {position, normalize_angle(yaw), normalize_angle(pitch), normalize_angle(roll)};
  }

  Pose transform() const {
    return {rot_z(yaw) * rot_y(pitch) * rot_x(roll), position};
  }
};

struct RobotConfig {
  std::array<LimbGeometry, 4> limbs{};
  double mount_elevation = kTetrahedralElevation;
  double hub_mass = 0.0;
  double phi_max = kPi;

  const LimbGeometry& limb(LimbId id) const { return limbs[limb_index(id)]; }
  LimbGeometry& limb(LimbId id) { return limbs[limb_index(id)]; }

  double total_mass() const {
    double m = hub_mass;
    for (const auto& g : limbs) m += g.mass;
    return m;
  }

  void validate() const {
    for (const auto& g : limbs) g.validate();
    if (!(mount_elevation > 0.0 && mount_elevation < 0.5 * kPi)) {
      throw ValidationError("mount elevation must lie in (0, pi/2)");
    }
    if (!(hub_mass >= 0.0)) throw ValidationError("hub mass must be >= 0");
    if (!(phi_max > 0.0 && phi_max <= kPi)) throw ValidationError("phi_max must lie in (0, pi]");
  }
};

/// Azimuth of each lower limb about +Z_R. H has none.
inline double mount_azimuth(LimbId id) {
  switch (id) {
    case LimbId::B: return kPi;
    case LimbId::FR: return 5.0 * kPi / 3.0;
    case LimbId::FL: return 7.0 * kPi / 3.0;  // same direction as pi/3
    case LimbId::H: break;
  }
  return 0.0;
}

/// Fixed rotation from {O_R} to the base frame of limb `id`.
/// H is the identity; the others are R_Z(azimuth) R_Y(pi/2 + delta).
inline Pose mount_transform(LimbId id, double delta = kTetrahedralElevation) {
  if (id == LimbId::H) return Pose::identity();
  return Pose::from_rotation(rot_z(mount_azimuth(id)) * rot_y(0.5 * kPi + delta));
}

/// Direction of the limb backbone at rest, in {O_R}.
inline Eigen::Vector3d mount_axis(LimbId id, double delta = kTetrahedralElevation) {
  return mount_transform(id, delta).rotation.col(2);
}

/// Bending-plane angle theta that bends limb `id` toward the robot-frame
/// direction `dir` (projected onto the limb's XY plane).
inline double bend_angle_toward(LimbId id, const Eigen::Vector3d& dir,
                                double delta = kTetrahedralElevation) {
  const Eigen::Vector3d local = mount_transform(id, delta).rotation.transpose() * dir;
  if (std::hypot(local.x(), local.y()) < 1e-12) {
    throw ValidationError("direction is parallel to the limb axis");
  }
  return normalize_angle(std::atan2(local.y(), local.x()));
}

/// T_b * T_mount * T_limb(q, xi).
inline Pose limb_pose_in_world(const FloatingBasePose& base, LimbId id, const CurveParams& cp,
                               ArcParam xi, const RobotConfig& cfg) {
  return base.transform() * mount_transform(id, cfg.mount_elevation) *
         limb_htm(cp, xi, cfg.limb(id));
}

/// Centroid of the limb's neutral axis in its own frame, the integral of
/// the arc position over xi in [0, 1]:
///   L / phi^2 [cos(theta)(phi - sin phi), sin(theta)(phi - sin phi), 1 - cos phi].
inline Eigen::Vector3d limb_cog(const CurveParams& cp, const LimbGeometry& geom) {
  // phi - sin(phi) cancels badly for small phi; the series is exact to
  // double precision below 1e-3.
  constexpr double kSeriesBelow = 1e-3;
  const double p = cp.phi;
  const double L = geom.length;
  double lateral;
  double axial;
  if (p < kSeriesBelow) {
    const double p2 = p * p;
    lateral = L * p * (1.0 / 6.0 - p2 / 120.0 + p2 * p2 / 5040.0);
    axial = L * (0.5 - p2 / 24.0 + p2 * p2 / 720.0);
  } else {
    lateral = L * (p - std::sin(p)) / (p * p);
    axial = L * detail::versine(p) / (p * p);
  }
  return {std::cos(cp.theta) * lateral, std::sin(cp.theta) * lateral, axial};
}

/// Limb CoG expressed in {O_R}.
inline Eigen::Vector3d limb_cog_in_robot(LimbId id, const CurveParams& cp, const RobotConfig& cfg) {
  return mount_transform(id, cfg.mount_elevation).apply(limb_cog(cp, cfg.limb(id)));
}

/// Mass-weighted robot CoG in {O_R}. A positive hub_mass adds a point mass
/// at the origin of {O_R}.
inline Eigen::Vector3d robot_cog(const std::array<CurveParams, 4>& per_limb, const RobotConfig& cfg) {
  const double total = cfg.total_mass();
  if (!(total > 0.0)) throw AllMassesZeroError();
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (LimbId id : kAllLimbs) {
    const double m = cfg.limb(id).mass;
    if (m == 0.0) continue;
    acc += m * limb_cog_in_robot(id, per_limb[limb_index(id)], cfg);
  }
  return acc / total;
}

}  // namespace pinniped
