#pragma once

// Single-limb kinematics for a three-actuator constant-curvature soft limb.
//
// Three spaces are involved:
//   jointspace     (l1, l2, l3)  actuator length changes, summing to zero
//   configuration  (theta, phi)  bending-plane angle and subtended arc angle
//   taskspace      (x, y, z)     point on the neutral axis in the limb frame
//
// The limb frame {O_j} sits at the base cross-section centre, +Z along the
// unbent backbone, actuator 1 anchored on +X and actuators 2, 3 following
// counterclockwise at 120 degree spacing.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "pinniped/errors.hpp"
#include "pinniped/numerics.hpp"

namespace pinniped {

/// Below this arc angle the straight-limb series replaces the 1/phi forms.
inline constexpr double kStraightThreshold = 1e-6;
/// Absolute tolerance on l1 + l2 + l3 (metres).
inline constexpr double kZeroSumTolerance = 1e-12;
/// Lower end of the inverse-kinematics bracket (radians).
inline constexpr double kIkBracketLow = 1e-9;
/// Absolute tolerance of the inverse-kinematics bisection on phi.
inline constexpr double kIkTolerance = 1e-12;

struct LimbGeometry {
  double length = 0.24;          // neutral length L [m]
  double anchor_radius = 0.0125; // actuator anchor circle radius r [m]
  double mass = 0.15;            // [kg]

  void validate() const {
    if (!(length > 0.0)) throw ValidationError("limb length must be > 0");
    if (!(anchor_radius > 0.0)) throw ValidationError("anchor radius must be > 0");
    if (!(anchor_radius < length)) {
      throw ValidationError("anchor radius must be smaller than limb length");
    }
    if (!(mass >= 0.0)) throw ValidationError("limb mass must be >= 0");
  }

  friend bool operator==(const LimbGeometry&, const LimbGeometry&) = default;
};

struct JointVector {
  std::array<double, 3> l{};

  double operator[](std::size_t i) const { return l[i]; }
  double& operator[](std::size_t i) { return l[i]; }

  double sum() const { return l[0] + l[1] + l[2]; }

  /// Backbone inextensibility: the three length changes cancel.
  bool satisfies_length_constraint(double tol = kZeroSumTolerance) const {
    return std::abs(sum()) <= tol;
  }

  friend bool operator==(const JointVector&, const JointVector&) = default;
};

struct CurveParams {
  double theta = 0.0;  // bending-plane angle, (-pi, pi]
  double phi = 0.0;    // arc angle, [0, phi_max]

  void validate(double phi_max = kPi) const {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
      throw ValidationError("curve parameters must be finite");
    }
    if (phi < 0.0) throw ValidationError("arc angle phi must be >= 0");
    if (phi > phi_max) throw ValidationError("arc angle phi exceeds phi_max");
  }

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Fraction xi in [0, 1] along the neutral axis, base to tip.
class ArcParam {
 public:
  constexpr ArcParam() = default;
  explicit ArcParam(double xi) : xi_(xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) throw ValidationError("arc parameter xi must lie in [0, 1]");
  }
  static ArcParam tip() { return ArcParam(1.0); }
  static ArcParam base() { return ArcParam(0.0); }
  constexpr double value() const { return xi_; }

 private:
  double xi_ = 1.0;
};

/// Rigid transform, rotation then translation.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d position = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }
  static Pose from_rotation(const Eigen::Matrix3d& r) { return {r, Eigen::Vector3d::Zero()}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + position; }

  Pose operator*(const Pose& rhs) const {
    return {rotation * rhs.rotation, rotation * rhs.position + position};
  }

  Pose inverse() const {
    Eigen::Matrix3d rt = rotation.transpose();
    return {rt, -(rt * position)};
  }

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.topLeftCorner<3, 3>() = rotation;
    m.topRightCorner<3, 1>() = position;
    return m;
  }

  /// Orthonormal with determinant +1, entrywise to tol.
  bool is_valid(double tol = 1e-9) const {
    const Eigen::Matrix3d err = rotation * rotation.transpose() - Eigen::Matrix3d::Identity();
    return err.cwiseAbs().maxCoeff() <= tol && std::abs(rotation.determinant() - 1.0) <= tol;
  }
};

inline Eigen::Matrix3d rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return m;
}

inline Eigen::Matrix3d rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return m;
}

inline Eigen::Matrix3d rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return m;
}

namespace detail {

// (1 - cos a) without cancellation.
inline double versine(double a) {
  const double h = std::sin(0.5 * a);
  return 2.0 * h * h;
}

// In-plane offset and height of the point at fraction xi of an arc of
// length L and angle phi. Uses the Taylor series near the straight limb;
// the truncation error there is O(L (xi phi)^5).
struct ArcPoint {
  double offset;
  double height;
};

inline ArcPoint arc_point(double phi, double xi, double L) {
  if (phi < kStraightThreshold) {
    const double a = xi * phi;
    return {L * xi * a * (0.5 - a * a / 24.0), L * xi * (1.0 - a * a / 6.0)};
  }
  const double radius = L / phi;
  return {radius * versine(xi * phi), radius * std::sin(xi * phi)};
}

}  // namespace detail

/// (1 - cos phi) / phi: planar tip distance over L for a bend of phi.
inline double chord_ratio(double phi) {
  if (phi < kStraightThreshold) return phi * (0.5 - phi * phi / 24.0);
  return detail::versine(phi) / phi;
}

/// Arc angle at which chord_ratio peaks; the root of tan(phi/2) = phi on (0, pi).
inline double peak_bend_angle() {
  static const double value =
      bisect([](double p) { return std::tan(0.5 * p) - p; }, 2.0, 3.0, 1e-15);
  return value;
}

/// Largest reachable s/L for the planar tip projection (about 0.7246).
inline double reach_ratio_limit() {
  static const double value = chord_ratio(peak_bend_angle());
  return value;
}

/// Actuator length changes for the given bend:
/// l_i = -r phi cos(2 pi (i - 1) / 3 - theta).
inline JointVector curve_to_joint(const CurveParams& cp, const LimbGeometry& geom) {
  JointVector jv;
  const double scale = -geom.anchor_radius * cp.phi;
  for (std::size_t i = 0; i < 3; ++i) {
    jv.l[i] = scale * std::cos(kTwoPi / 3.0 * static_cast<double>(i) - cp.theta);
  }
  return jv;
}

/// Inverse of curve_to_joint. Rejects vectors that break the zero-sum constraint.
inline CurveParams joint_to_curve(const JointVector& jv, const LimbGeometry& geom) {
  if (!jv.satisfies_length_constraint()) {
    throw ValidationError("joint vector violates zero-sum constraint: sum = " +
                          std::to_string(jv.sum()));
  }
  const auto& l = jv.l;
  double acc = 0.0;
  for (std::size_t i = 0; i < 3; ++i) acc += l[i] * l[i] - l[i] * l[(i + 1) % 3];
  CurveParams cp;
  cp.phi = 2.0 / (3.0 * geom.anchor_radius) * std::sqrt(std::max(acc, 0.0));
  if (cp.phi == 0.0) return cp;
  cp.theta = normalize_angle(std::atan2(std::sqrt(3.0) * (l[2] - l[1]), l[1] + l[2] - 2.0 * l[0]));
  return cp;
}

/// Pose of the neutral-axis point at fraction xi:
/// R_Z(theta) P_X(L/phi) R_Y(xi phi) P_X(-L/phi) R_Z(-theta).
inline Pose limb_htm(const CurveParams& cp, ArcParam xi, const LimbGeometry& geom) {
  const double a = xi.value() * cp.phi;
  const auto pt = detail::arc_point(cp.phi, xi.value(), geom.length);
  const Eigen::Matrix3d rz = rot_z(cp.theta);
  Pose pose;
  pose.rotation = rz * rot_y(a) * rz.transpose();
  pose.position = rz * Eigen::Vector3d(pt.offset, 0.0, pt.height);
  return pose;
}

/// Tip position (xi = 1) in the limb frame.
inline Eigen::Vector3d tip_position(const CurveParams& cp, const LimbGeometry& geom) {
  const auto pt = detail::arc_point(cp.phi, 1.0, geom.length);
  return {std::cos(cp.theta) * pt.offset, std::sin(cp.theta) * pt.offset, pt.height};
}

/// Tip height L sin(phi) / phi fixed by the bend; z is not independently settable.
inline double realized_height(double phi, const LimbGeometry& geom) {
  return detail::arc_point(phi, 1.0, geom.length).height;
}

/// Curve parameters placing the tip over the planar target (x, y).
///
/// Solves (1 - cos phi) / phi = s / L on the monotone branch phi in
/// [0, peak_bend_angle()]. Targets closer to the axis than the bracket can
/// resolve return the straight limb; targets beyond reach_ratio_limit()
/// throw UnreachableError.
inline CurveParams inverse_kinematics(const Eigen::Vector2d& target, const LimbGeometry& geom) {
  const double s = std::hypot(target.x(), target.y());
  const double ratio = s / geom.length;
  const double limit = reach_ratio_limit();
  if (!(ratio <= limit)) throw UnreachableError(ratio, limit);
  if (ratio <= chord_ratio(kIkBracketLow)) return {};

  CurveParams cp;
  cp.phi = bisect([ratio](double p) { return chord_ratio(p) - ratio; }, kIkBracketLow,
                  peak_bend_angle(), kIkTolerance);
  cp.theta = normalize_angle(std::atan2(target.y(), target.x()));
  return cp;
}

}  // namespace pinniped
