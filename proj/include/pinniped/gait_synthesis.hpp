#pragma once

// Discretized gait trajectories for the four-limb pinniped robot.
//
// Every crawling limb runs the fundamental circular tip motion in its own
// limb frame; targets go through planar IK and then into jointspace. Limbs
// that do not crawl follow configuration-space programs (held bends or
// ramps). All sampling is index based, so cycle k + 1 repeats cycle k
// bit for bit.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pinniped/errors.hpp"
#include "pinniped/limb_kinematics.hpp"
#include "pinniped/numerics.hpp"
#include "pinniped/robot_model.hpp"

namespace pinniped {

/// Traversal sense of the tip circle in the limb frame. `clockwise` is the
/// circle x = rho sin(-2 pi t / tau), y = rho cos(-2 pi t / tau) as written;
/// `anticlockwise` negates the angular argument.
enum class Direction { clockwise, anticlockwise };

inline constexpr Direction reversed(Direction d) {
  return d == Direction::clockwise ? Direction::anticlockwise : Direction::clockwise;
}

inline constexpr std::string_view direction_name(Direction d) {
  return d == Direction::clockwise ? "clockwise" : "anticlockwise";
}

enum class GaitKind {
  forward_crawl,
  backward_crawl,
  crawl_turn_left,
  crawl_turn_right,
  inplace_cw,
  inplace_ccw,
};

inline constexpr std::array<GaitKind, 6> kAllGaitKinds{
    GaitKind::forward_crawl,   GaitKind::backward_crawl, GaitKind::crawl_turn_left,
    GaitKind::crawl_turn_right, GaitKind::inplace_cw,    GaitKind::inplace_ccw};

inline constexpr std::string_view gait_kind_name(GaitKind k) {
  switch (k) {
    case GaitKind::forward_crawl: return "forward_crawl";
    case GaitKind::backward_crawl: return "backward_crawl";
    case GaitKind::crawl_turn_left: return "crawl_turn_left";
    case GaitKind::crawl_turn_right: return "crawl_turn_right";
    case GaitKind::inplace_cw: return "inplace_cw";
    case GaitKind::inplace_ccw: return "inplace_ccw";
  }
  return "?";
}

inline std::optional<GaitKind> gait_kind_from_name(std::string_view name) {
  for (GaitKind k : kAllGaitKinds) {
    if (gait_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

/// +1 forward, -1 backward along X_R, 0 for in-place turning.
inline constexpr int travel_direction(GaitKind k) {
  switch (k) {
    case GaitKind::forward_crawl: return 1;
    case GaitKind::backward_crawl:
    case GaitKind::crawl_turn_left:
    case GaitKind::crawl_turn_right: return -1;
    case GaitKind::inplace_cw:
    case GaitKind::inplace_ccw: return 0;
  }
  return 0;
}

struct StrideSpec {
  double radius = 0.10;        // rho [m]
  double period = 1.0;         // tau [s]
  double plane_offset = 0.18;  // requested d [m]; recorded, not enforced
  Direction direction = Direction::clockwise;
  double phase_offset = 0.0;   // added to the angular argument [rad]

  void validate(bool allow_zero_radius = false) const {
    if (allow_zero_radius ? !(radius >= 0.0) : !(radius > 0.0)) {
      throw ValidationError("stride radius must be > 0");
    }
    if (!(period > 0.0)) throw ValidationError("stride period must be > 0");
    if (!std::isfinite(plane_offset) || !std::isfinite(phase_offset)) {
      throw ValidationError("stride offsets must be finite");
    }
  }
};

/// Head bend: forward crawl ramps phi 0 -> phi_end -> 0 once per cycle
/// toward +X_R; backward crawl holds phi_end toward -X_R.
struct HeadBendProfile {
  double phi_end = 0.5 * kPi;
};

/// Back-limb bend: forward crawl ramps phi linearly up to phi_max each
/// cycle at bending-plane angle theta (0 = local +X_B, toward the floor);
/// backward crawl holds phi_max bent toward +Z_R.
struct BackLimbProfile {
  double phi_max = 0.25 * kPi;
  double theta = 0.0;
};

struct GaitSpec {
  GaitKind kind = GaitKind::forward_crawl;
  std::array<std::optional<StrideSpec>, 4> strides{};
  HeadBendProfile head{};
  BackLimbProfile back{};
  std::size_t samples_per_cycle = 100;
  std::size_t n_cycles = 1;

  const std::optional<StrideSpec>& stride(LimbId id) const { return strides[limb_index(id)]; }
  std::optional<StrideSpec>& stride(LimbId id) { return strides[limb_index(id)]; }

  std::size_t total_samples() const { return samples_per_cycle * n_cycles; }

  /// Common period of the driven limbs.
  double period() const {
    for (const auto& s : strides) {
      if (s) return s->period;
    }
    return 1.0;
  }

  void validate() const;
};

/// Limb-to-direction assignment required by each gait.
struct StrideAssignment {
  LimbId limb;
  Direction direction;
};

inline std::vector<StrideAssignment> required_strides(GaitKind kind) {
  using enum LimbId;
  using D = Direction;
  switch (kind) {
    case GaitKind::forward_crawl: return {{FR, D::anticlockwise}, {FL, D::clockwise}};
    case GaitKind::backward_crawl: return {{FR, D::clockwise}, {FL, D::anticlockwise}};
    case GaitKind::crawl_turn_left:
      return {{FR, D::clockwise}, {FL, D::anticlockwise}, {B, D::clockwise}};
    case GaitKind::crawl_turn_right:
      return {{FR, D::clockwise}, {FL, D::anticlockwise}, {B, D::anticlockwise}};
    // The head frame coincides with {O_R}; its circle label is opposite to
    // the ground limbs' so that all four circles turn the same way about +Z_R.
    case GaitKind::inplace_cw:
      return {{FR, D::clockwise}, {FL, D::clockwise}, {B, D::clockwise}, {H, D::anticlockwise}};
    case GaitKind::inplace_ccw:
      return {{FR, D::anticlockwise}, {FL, D::anticlockwise}, {B, D::anticlockwise},
              {H, D::clockwise}};
  }
  return {};
}

inline void GaitSpec::validate() const {
  if (samples_per_cycle < 8) throw ValidationError("samples_per_cycle must be >= 8");
  if (n_cycles < 1) throw ValidationError("n_cycles must be >= 1");
  if (!std::isfinite(head.phi_end) || head.phi_end < 0.0) {
    throw ValidationError("head bend must be finite and >= 0");
  }
  if (!std::isfinite(back.phi_max) || back.phi_max < 0.0 || !std::isfinite(back.theta)) {
    throw ValidationError("back-limb bend must be finite and >= 0");
  }
  const auto required = required_strides(kind);
  std::array<bool, 4> driven{};
  std::optional<double> period;
  for (const auto& [limb, dir] : required) {
    const auto& s = stride(limb);
    const std::string name(limb_name(limb));
    if (!s) {
      throw ValidationError(std::string(gait_kind_name(kind)) + " requires a stride for limb " + name);
    }
    const bool zero_ok = limb == LimbId::B && (kind == GaitKind::crawl_turn_left ||
                                               kind == GaitKind::crawl_turn_right);
    s->validate(zero_ok);
    if (s->direction != dir) {
      throw ValidationError(std::string(gait_kind_name(kind)) + " drives limb " + name + " " +
                            std::string(direction_name(dir)));
    }
    if (period && *period != s->period) {
      throw ValidationError("all driven limbs must share one stride period");
    }
    period = s->period;
    driven[limb_index(limb)] = true;
  }
  for (LimbId id : kAllLimbs) {
    if (stride(id) && !driven[limb_index(id)]) {
      throw ValidationError(std::string(gait_kind_name(kind)) + " does not drive limb " +
                            std::string(limb_name(id)));
    }
  }
}

/// Scalar knobs for building a GaitSpec with the canonical limb assignment.
struct GaitParameters {
  double crawl_radius = 0.10;  // FR, FL (and B, H when turning in place)
  double turn_radius = 0.04;   // B during crawl-and-turn
  double frequency = 1.0;      // [Hz], period = 1 / f
  double plane_offset = 0.18;
  double phase_offset = 0.5 * kPi;  // circle starts at local +X, the lowest point
  HeadBendProfile head{};
  BackLimbProfile back{};
  std::size_t samples_per_cycle = 100;
  std::size_t n_cycles = 1;
};

inline GaitSpec make_gait_spec(GaitKind kind, const GaitParameters& p) {
  if (!(p.frequency > 0.0)) throw ValidationError("frequency must be > 0");
  GaitSpec spec;
  spec.kind = kind;
  spec.head = p.head;
  spec.back = p.back;
  spec.samples_per_cycle = p.samples_per_cycle;
  spec.n_cycles = p.n_cycles;
  const bool turning = kind == GaitKind::crawl_turn_left || kind == GaitKind::crawl_turn_right;
  for (const auto& [limb, dir] : required_strides(kind)) {
    StrideSpec s;
    s.radius = (turning && limb == LimbId::B) ? p.turn_radius : p.crawl_radius;
    s.period = 1.0 / p.frequency;
    s.plane_offset = p.plane_offset;
    s.direction = dir;
    s.phase_offset = p.phase_offset;
    spec.stride(limb) = s;
  }
  return spec;
}

/// Circle sample angle for integer index k. Clockwise maps k to (N - k) mod N
/// so that reversing direction is an exact reindexing.
inline double circle_argument(const StrideSpec& ss, std::size_t k, std::size_t samples) {
  const std::size_t km = k % samples;
  const std::size_t m = ss.direction == Direction::clockwise ? (samples - km) % samples : km;
  return kTwoPi * static_cast<double>(m) / static_cast<double>(samples) + ss.phase_offset;
}

/// Tip targets for one period, t_k = k tau / samples, k = 0 .. samples - 1.
inline std::vector<Eigen::Vector3d> fundamental_limb_motion(const StrideSpec& ss, std::size_t samples,
                                                            const LimbGeometry& geom) {
  if (samples < 8) throw ValidationError("fundamental limb motion needs >= 8 samples");
  ss.validate(true);
  const double ratio = ss.radius / geom.length;
  // Every point of the circle has the same s/L, so the first sample already fails.
  if (!(ratio <= reach_ratio_limit())) throw UnreachableError(ratio, reach_ratio_limit(), std::size_t{0});
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double a = circle_argument(ss, k, samples);
    pts.emplace_back(ss.radius * std::sin(a), ss.radius * std::cos(a), ss.plane_offset);
  }
  return pts;
}

struct JointspaceTrajectory {
  std::vector<CurveParams> curves;
  std::vector<JointVector> joints;
  std::vector<double> realized_z;  // L sin(phi) / phi at each sample
};

/// Planar IK per target (z is ignored; the limb has two DoF), then actuator
/// lengths. Unreachable targets report their sample index.
inline JointspaceTrajectory trajectory_to_jointspace(const std::vector<Eigen::Vector3d>& points,
                                                     const LimbGeometry& geom) {
  JointspaceTrajectory out;
  out.curves.reserve(points.size());
  out.joints.reserve(points.size());
  out.realized_z.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    CurveParams cp;
    try {
      cp = inverse_kinematics(points[i].head<2>(), geom);
    } catch (const UnreachableError& e) {
      throw e.at_sample(i);
    }
    out.curves.push_back(cp);
    out.joints.push_back(curve_to_joint(cp, geom));
    out.realized_z.push_back(realized_height(cp.phi, geom));
  }
  return out;
}

struct LimbSample {
  CurveParams curve;
  JointVector joints;
  Eigen::Vector3d target = Eigen::Vector3d::Zero();     // generating point, limb frame
  Eigen::Vector3d tip = Eigen::Vector3d::Zero();        // realized tip, limb frame
  Eigen::Vector3d tip_robot = Eigen::Vector3d::Zero();  // realized tip, {O_R}
};

struct GaitTrajectory {
  GaitSpec spec;
  std::vector<double> time;
  std::array<std::vector<LimbSample>, 4> limbs;
  std::vector<Eigen::Vector3d> cog;  // {O_R}
  std::vector<bool> ground_contact;  // crawling-limb thrust interval

  GaitKind kind() const { return spec.kind; }
  std::size_t size() const { return time.size(); }
  const std::vector<LimbSample>& limb(LimbId id) const { return limbs[limb_index(id)]; }

  std::array<CurveParams, 4> curves_at(std::size_t i) const {
    std::array<CurveParams, 4> out;
    for (std::size_t j = 0; j < 4; ++j) out[j] = limbs[j][i].curve;
    return out;
  }

  /// Mean robot-frame X of the FR and FL tips at each sample.
  std::vector<double> crawl_tip_mean_x() const {
    std::vector<double> out(size());
    const auto& fr = limb(LimbId::FR);
    const auto& fl = limb(LimbId::FL);
    for (std::size_t i = 0; i < size(); ++i) out[i] = 0.5 * (fr[i].tip_robot.x() + fl[i].tip_robot.x());
    return out;
  }
};

/// Samples of one cycle where the crawling tips move against the travel
/// direction (central difference, cyclic). All false for in-place turning.
inline std::vector<bool> ground_contact_mask(const std::vector<double>& tip_x, int travel_dir) {
  const std::size_t n = tip_x.size();
  std::vector<bool> mask(n, false);
  if (travel_dir == 0 || n < 3) return mask;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = tip_x[(k + 1) % n] - tip_x[(k + n - 1) % n];
    mask[k] = v * static_cast<double>(travel_dir) < 0.0;
  }
  return mask;
}

namespace detail {

// First sample of the (cyclic) contact run, 0 if there is none.
inline std::size_t contact_start(const std::vector<bool>& mask) {
  const std::size_t n = mask.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (mask[k] && !mask[(k + n - 1) % n]) return k;
  }
  return 0;
}

// Phase in (0, 1] measured from the contact start; the sample before the
// start lands on exactly 1.
inline double phase_from(std::size_t k, std::size_t start, std::size_t n) {
  const std::size_t u = (k + n + 1 - start) % n;
  return static_cast<double>(u == 0 ? n : u) / static_cast<double>(n);
}

inline std::vector<CurveParams> held(const CurveParams& cp, std::size_t n) {
  return std::vector<CurveParams>(n, cp);
}

struct LimbPlan {
  std::vector<CurveParams> curves;
  std::vector<Eigen::Vector3d> targets;  // empty: configuration-space program
};

inline LimbPlan circle_plan(const StrideSpec& ss, std::size_t n, const LimbGeometry& geom,
                            LimbId id) {
  LimbPlan plan;
  try {
    plan.targets = fundamental_limb_motion(ss, n, geom);
    plan.curves = trajectory_to_jointspace(plan.targets, geom).curves;
  } catch (const UnreachableError& e) {
    throw e.for_limb(std::string(limb_name(id)));
  }
  return plan;
}

}  // namespace detail

/// Assembles a trajectory from per-limb curve parameters for one cycle,
/// repeating it spec.n_cycles times. `targets[j]` may be empty, in which
/// case the realized tip is recorded as the generating point.
inline GaitTrajectory assemble_trajectory(const GaitSpec& spec, const RobotConfig& cfg,
                                          const std::array<std::vector<CurveParams>, 4>& curves,
                                          const std::array<std::vector<Eigen::Vector3d>, 4>& targets,
                                          const std::vector<bool>& contact) {
  const std::size_t n = spec.samples_per_cycle;
  const std::size_t total = spec.total_samples();
  const double period = spec.period();
  for (std::size_t j = 0; j < 4; ++j) {
    if (curves[j].size() != n) throw ValidationError("limb program length must equal samples_per_cycle");
    if (!targets[j].empty() && targets[j].size() != n) {
      throw ValidationError("limb target length must equal samples_per_cycle");
    }
  }

  // One cycle worth of samples, then replicate.
  std::array<std::vector<LimbSample>, 4> cycle;
  std::vector<Eigen::Vector3d> cog_cycle(n);
  for (LimbId id : kAllLimbs) {
    const std::size_t j = limb_index(id);
    const auto& geom = cfg.limb(id);
    const Pose mount = mount_transform(id, cfg.mount_elevation);
    cycle[j].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      LimbSample& s = cycle[j][k];
      s.curve = curves[j][k];
      s.joints = curve_to_joint(s.curve, geom);
      s.tip = tip_position(s.curve, geom);
      s.tip_robot = mount.apply(s.tip);
      s.target = targets[j].empty() ? s.tip : targets[j][k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::array<CurveParams, 4> cps;
    for (std::size_t j = 0; j < 4; ++j) cps[j] = cycle[j][k].curve;
    cog_cycle[k] = robot_cog(cps, cfg);
  }

  GaitTrajectory traj;
  traj.spec = spec;
  traj.time.resize(total);
  traj.cog.resize(total);
  traj.ground_contact.resize(total);
  for (auto& l : traj.limbs) l.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = i % n;
    traj.time[i] = static_cast<double>(i) * period / static_cast<double>(n);
    for (std::size_t j = 0; j < 4; ++j) traj.limbs[j][i] = cycle[j][k];
    traj.cog[i] = cog_cycle[k];
    traj.ground_contact[i] = contact.empty() ? false : contact[k];
  }
  return traj;
}

namespace detail {

// Contact mask over one cycle from the FR/FL programs.
inline std::vector<bool> crawl_contact(const GaitSpec& spec, const RobotConfig& cfg,
                                       const LimbPlan& fr, const LimbPlan& fl) {
  const std::size_t n = spec.samples_per_cycle;
  const Pose m_fr = mount_transform(LimbId::FR, cfg.mount_elevation);
  const Pose m_fl = mount_transform(LimbId::FL, cfg.mount_elevation);
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = 0.5 * (m_fr.apply(tip_position(fr.curves[k], cfg.limb(LimbId::FR))).x() +
                  m_fl.apply(tip_position(fl.curves[k], cfg.limb(LimbId::FL))).x());
  }
  return ground_contact_mask(x, travel_direction(spec.kind));
}

inline GaitTrajectory finish(const GaitSpec& spec, const RobotConfig& cfg,
                             std::array<LimbPlan, 4>& plans, const std::vector<bool>& contact) {
  std::array<std::vector<CurveParams>, 4> curves;
  std::array<std::vector<Eigen::Vector3d>, 4> targets;
  for (std::size_t j = 0; j < 4; ++j) {
    curves[j] = std::move(plans[j].curves);
    targets[j] = std::move(plans[j].targets);
  }
  return assemble_trajectory(spec, cfg, curves, targets, contact);
}

inline void require_kind(const GaitSpec& spec, std::initializer_list<GaitKind> kinds) {
  for (GaitKind k : kinds) {
    if (spec.kind == k) return;
  }
  throw WrongGaitKindError("synthesizer does not handle gait kind " +
                           std::string(gait_kind_name(spec.kind)));
}

// FR/FL circles plus backward-crawl head and back programs.
inline std::array<LimbPlan, 4> backward_plans(const GaitSpec& spec, const RobotConfig& cfg) {
  const std::size_t n = spec.samples_per_cycle;
  std::array<LimbPlan, 4> plans;
  for (LimbId id : {LimbId::FR, LimbId::FL}) {
    plans[limb_index(id)] = circle_plan(*spec.stride(id), n, cfg.limb(id), id);
  }
  const double d = cfg.mount_elevation;
  const CurveParams head{bend_angle_toward(LimbId::H, -Eigen::Vector3d::UnitX(), d), spec.head.phi_end};
  const CurveParams back{bend_angle_toward(LimbId::B, Eigen::Vector3d::UnitZ(), d), spec.back.phi_max};
  plans[limb_index(LimbId::H)].curves = held(spec.head.phi_end > 0.0 ? head : CurveParams{}, n);
  plans[limb_index(LimbId::B)].curves = held(spec.back.phi_max > 0.0 ? back : CurveParams{}, n);
  return plans;
}

}  // namespace detail

/// FR anticlockwise and FL clockwise in phase. H bends toward +X_R on a
/// triangular ramp (up over the contact half-cycle, down over the swing);
/// B ramps linearly from the contact start to phi_max over each cycle.
inline GaitTrajectory synthesize_forward_crawl(const GaitSpec& spec, const RobotConfig& cfg) {
  detail::require_kind(spec, {GaitKind::forward_crawl});
  spec.validate();
  cfg.validate();
  const std::size_t n = spec.samples_per_cycle;
  std::array<detail::LimbPlan, 4> plans;
  for (LimbId id : {LimbId::FR, LimbId::FL}) {
    plans[limb_index(id)] = detail::circle_plan(*spec.stride(id), n, cfg.limb(id), id);
  }
  const auto contact = detail::crawl_contact(spec, cfg, plans[limb_index(LimbId::FR)],
                                             plans[limb_index(LimbId::FL)]);
  const std::size_t start = detail::contact_start(contact);

  const double head_theta = bend_angle_toward(LimbId::H, Eigen::Vector3d::UnitX(), cfg.mount_elevation);
  auto& head = plans[limb_index(LimbId::H)].curves;
  auto& back = plans[limb_index(LimbId::B)].curves;
  head.resize(n);
  back.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = detail::phase_from(k, start, n);
    const double tri = 1.0 - std::abs(2.0 * u - 1.0);
    const double head_phi = spec.head.phi_end * tri;
    head[k] = head_phi > 0.0 ? CurveParams{head_theta, head_phi} : CurveParams{};
    const double back_phi = spec.back.phi_max * u;
    back[k] = back_phi > 0.0 ? CurveParams{normalize_angle(spec.back.theta), back_phi} : CurveParams{};
  }
  return detail::finish(spec, cfg, plans, contact);
}

/// FR clockwise and FL anticlockwise. H held bent toward -X_R, B held bent
/// toward +Z_R.
inline GaitTrajectory synthesize_backward_crawl(const GaitSpec& spec, const RobotConfig& cfg) {
  detail::require_kind(spec, {GaitKind::backward_crawl});
  spec.validate();
  cfg.validate();
  auto plans = detail::backward_plans(spec, cfg);
  const auto contact = detail::crawl_contact(spec, cfg, plans[limb_index(LimbId::FR)],
                                             plans[limb_index(LimbId::FL)]);
  return detail::finish(spec, cfg, plans, contact);
}

/// Backward crawl with B also circling: clockwise turns left, anticlockwise
/// turns right. A zero B radius leaves B straight and stationary.
inline GaitTrajectory synthesize_crawl_turn(const GaitSpec& spec, const RobotConfig& cfg) {
  detail::require_kind(spec, {GaitKind::crawl_turn_left, GaitKind::crawl_turn_right});
  spec.validate();
  cfg.validate();
  auto plans = detail::backward_plans(spec, cfg);
  const std::size_t n = spec.samples_per_cycle;
  plans[limb_index(LimbId::B)] =
      detail::circle_plan(*spec.stride(LimbId::B), n, cfg.limb(LimbId::B), LimbId::B);
  const auto contact = detail::crawl_contact(spec, cfg, plans[limb_index(LimbId::FR)],
                                             plans[limb_index(LimbId::FL)]);
  return detail::finish(spec, cfg, plans, contact);
}

/// All four limbs circle with one angular velocity and one rotational
/// sense about +Z_R.
inline GaitTrajectory synthesize_inplace_turn(const GaitSpec& spec, const RobotConfig& cfg) {
  detail::require_kind(spec, {GaitKind::inplace_cw, GaitKind::inplace_ccw});
  spec.validate();
  cfg.validate();
  const std::size_t n = spec.samples_per_cycle;
  std::array<detail::LimbPlan, 4> plans;
  for (LimbId id : kAllLimbs) {
    plans[limb_index(id)] = detail::circle_plan(*spec.stride(id), n, cfg.limb(id), id);
  }
  return detail::finish(spec, cfg, plans, {});
}

inline GaitTrajectory synthesize(const GaitSpec& spec, const RobotConfig& cfg) {
  switch (spec.kind) {
    case GaitKind::forward_crawl: return synthesize_forward_crawl(spec, cfg);
    case GaitKind::backward_crawl: return synthesize_backward_crawl(spec, cfg);
    case GaitKind::crawl_turn_left:
    case GaitKind::crawl_turn_right: return synthesize_crawl_turn(spec, cfg);
    case GaitKind::inplace_cw:
    case GaitKind::inplace_ccw: return synthesize_inplace_turn(spec, cfg);
  }
  throw WrongGaitKindError("unknown gait kind");
}

}  // namespace pinniped
