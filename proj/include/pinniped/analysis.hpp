#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pinniped/errors.hpp"
#include "pinniped/gait_synthesis.hpp"
#include "pinniped/limb_kinematics.hpp"
#include "pinniped/robot_model.hpp"

namespace pinniped {

/// CoG with H and B frozen straight (inactive) against the synthesized CoG
/// (active), alongside the crawling-limb tip X series. All in {O_R}.
struct CogComparison {
  std::vector<Eigen::Vector3d> cog_inactive;  // CoG_0
  std::vector<Eigen::Vector3d> cog_active;    // CoG_F
  std::vector<double> tip_x_fr;
  std::vector<double> tip_x_fl;
  std::vector<bool> ground_contact;

  std::size_t size() const { return cog_active.size(); }

  double tip_mean_x(std::size_t i) const { return 0.5 * (tip_x_fr[i] + tip_x_fl[i]); }

  static double max_x(const std::vector<Eigen::Vector3d>& series) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& c : series) m = std::max(m, c.x());
    return m;
  }
};

inline CogComparison cog_compare(const GaitTrajectory& gait, const RobotConfig& cfg) {
  if (gait.kind() != GaitKind::forward_crawl) {
    throw WrongGaitKindError("cog_compare expects a forward_crawl trajectory, got " +
                             std::string(gait_kind_name(gait.kind())));
  }
  CogComparison out;
  const std::size_t n = gait.size();
  out.cog_inactive.reserve(n);
  out.cog_active.reserve(n);
  out.tip_x_fr.reserve(n);
  out.tip_x_fl.reserve(n);
  out.ground_contact = gait.ground_contact;
  for (std::size_t i = 0; i < n; ++i) {
    auto cps = gait.curves_at(i);
    out.cog_active.push_back(robot_cog(cps, cfg));
    cps[limb_index(LimbId::H)] = CurveParams{};
    cps[limb_index(LimbId::B)] = CurveParams{};
    out.cog_inactive.push_back(robot_cog(cps, cfg));
    out.tip_x_fr.push_back(gait.limb(LimbId::FR)[i].tip_robot.x());
    out.tip_x_fl.push_back(gait.limb(LimbId::FL)[i].tip_robot.x());
  }
  return out;
}

struct LimbStats {
  double theta_min = std::numeric_limits<double>::infinity();
  double theta_max = -std::numeric_limits<double>::infinity();
  double phi_min = std::numeric_limits<double>::infinity();
  double phi_max = -std::numeric_limits<double>::infinity();
  double z_min = std::numeric_limits<double>::infinity();
  double z_max = -std::numeric_limits<double>::infinity();

  void add(const LimbSample& s) {
    theta_min = std::min(theta_min, s.curve.theta);
    theta_max = std::max(theta_max, s.curve.theta);
    phi_min = std::min(phi_min, s.curve.phi);
    phi_max = std::max(phi_max, s.curve.phi);
    z_min = std::min(z_min, s.tip.z());
    z_max = std::max(z_max, s.tip.z());
  }

  friend bool operator==(const LimbStats&, const LimbStats&) = default;
};

struct WorkspaceViolation {
  LimbId limb;
  std::size_t sample;
  std::string what;
};

struct WorkspaceReport {
  std::array<LimbStats, 4> limbs{};
  std::vector<WorkspaceViolation> violations;

  bool ok() const { return violations.empty(); }
  const LimbStats& stats(LimbId id) const { return limbs[limb_index(id)]; }
};

/// Checks phi <= phi_max and planar reachability at every sample, and
/// collects per-limb ranges of theta, phi and realized tip height.
inline WorkspaceReport workspace_check(const GaitTrajectory& gait, const RobotConfig& cfg) {
  // Slack for IK round-off at the reach boundary.
  constexpr double kReachSlack = 1e-12;
  WorkspaceReport report;
  const double limit = reach_ratio_limit();
  for (LimbId id : kAllLimbs) {
    const auto& samples = gait.limb(id);
    const double L = cfg.limb(id).length;
    auto& stats = report.limbs[limb_index(id)];
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      stats.add(s);
      if (s.curve.phi > cfg.phi_max) {
        report.violations.push_back({id, i, "phi exceeds phi_max"});
      }
      if (std::hypot(s.target.x(), s.target.y()) / L > limit + kReachSlack) {
        report.violations.push_back({id, i, "target beyond reach bound"});
      }
      if (!s.joints.satisfies_length_constraint()) {
        report.violations.push_back({id, i, "joint vector violates zero-sum constraint"});
      }
    }
  }
  return report;
}

/// Per-cycle limb statistics; identical across cycles for a cyclic gait.
inline std::vector<std::array<LimbStats, 4>> per_cycle_stats(const GaitTrajectory& gait) {
  const std::size_t n = gait.spec.samples_per_cycle;
  const std::size_t cycles = n == 0 ? 0 : gait.size() / n;
  std::vector<std::array<LimbStats, 4>> out(cycles);
  for (std::size_t c = 0; c < cycles; ++c) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[c][j].add(gait.limbs[j][c * n + k]);
    }
  }
  return out;
}

}  // namespace pinniped
