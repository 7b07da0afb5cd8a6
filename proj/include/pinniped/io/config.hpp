#pragma once

// Gait configuration files and named presets.
//
// A config is a JSON object. Angles are radians unless the key carries a
// `_deg` suffix; giving both spellings of one key is an error, as is any
// key not listed below.
//
//   preset             name from all_presets(); other keys override it
//   gait               forward_crawl | backward_crawl | crawl_turn_left |
//                      crawl_turn_right | inplace_cw | inplace_ccw
//   frequency_hz | period_s
//   samples_per_cycle, cycles
//   crawl_radius       FR/FL stride radius (all limbs when turning in place)
//   turn_radius        B stride radius for crawl-and-turn
//   plane_offset, phase_offset[_deg]
//   head_bend[_deg], back_bend[_deg], back_bend_theta[_deg]
//   robot: { limb_length, anchor_radius, limb_mass, hub_mass,
//            mount_elevation[_deg], phi_max[_deg],
//            limbs: { H|B|FR|FL: { length, anchor_radius, mass } } }

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pinniped/errors.hpp"
#include "pinniped/gait_synthesis.hpp"
#include "pinniped/robot_model.hpp"

namespace pinniped::io {

using json = nlohmann::json;

struct ResolvedConfig {
  GaitKind kind = GaitKind::forward_crawl;
  GaitParameters params{};
  RobotConfig robot{};
  std::optional<std::string> preset;

  GaitSpec spec() const { return make_gait_spec(kind, params); }
};

struct Preset {
  std::string name;
  GaitKind kind;
  GaitParameters params;
};

namespace detail {

inline std::string two_digits(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

inline std::string three_digits(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%03d", v);
  return buf;
}

}  // namespace detail

/// Every stride-radius x frequency combination exercised on hardware:
/// straight crawling, crawl-and-turn, and in-place turning.
inline const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = [] {
    std::vector<Preset> out;
    const int crawl_cm[] = {6, 8, 10};
    const int turn_cm[] = {4, 6, 8};
    const int freq_centi[] = {75, 100, 125};
    auto add = [&](const std::string& stem, GaitKind kind, double crawl, double turn, int f) {
      GaitParameters p;
      p.crawl_radius = crawl;
      p.turn_radius = turn;
      p.frequency = f / 100.0;
      out.push_back({stem + "-f" + detail::three_digits(f), kind, p});
    };
    for (auto [prefix, kind] : {std::pair{"fwd", GaitKind::forward_crawl},
                                std::pair{"bwd", GaitKind::backward_crawl}}) {
      for (int r : crawl_cm) {
        for (int f : freq_centi) add(std::string(prefix) + "-r" + detail::two_digits(r), kind, r / 100.0, 0.04, f);
      }
    }
    for (auto [prefix, kind] : {std::pair{"turn-left", GaitKind::crawl_turn_left},
                                std::pair{"turn-right", GaitKind::crawl_turn_right}}) {
      for (int b : turn_cm) {
        for (int f : freq_centi) add(std::string(prefix) + "-b" + detail::two_digits(b), kind, 0.10, b / 100.0, f);
      }
    }
    for (auto [prefix, kind] : {std::pair{"spin-cw", GaitKind::inplace_cw},
                                std::pair{"spin-ccw", GaitKind::inplace_ccw}}) {
      for (int r : crawl_cm) {
        for (int f : freq_centi) add(std::string(prefix) + "-r" + detail::two_digits(r), kind, r / 100.0, 0.04, f);
      }
    }
    return out;
  }();
  return presets;
}

/// Looks up a preset; a name without the frequency suffix means 1.00 Hz.
inline std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : all_presets()) {
    if (p.name == name) return p;
  }
  const std::string with_default = std::string(name) + "-f100";
  for (const auto& p : all_presets()) {
    if (p.name == with_default) return p;
  }
  return std::nullopt;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Reads keys off a JSON object and remembers which were consumed.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ValidationError(where() + " must be an object");
  }

  std::optional<double> number(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) throw ValidationError(where(key) + " must be a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) throw ValidationError(where(key) + " must be finite");
    return d;
  }

  /// `key` in radians or `key_deg` in degrees.
  std::optional<double> angle(const std::string& key) {
    const bool rad = obj_.contains(key);
    const bool deg = obj_.contains(key + "_deg");
    if (rad && deg) throw ValidationError(where(key) + " given both in radians and degrees");
    if (deg) return *number(key + "_deg") * kPi / 180.0;
    return number(key);
  }

  std::optional<std::size_t> count(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer() || v->get<long long>() < 0) {
      throw ValidationError(where(key) + " must be a non-negative integer");
    }
    return static_cast<std::size_t>(v->get<long long>());
  }

  std::optional<std::string> string(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ValidationError(where(key) + " must be a string");
    return v->get<std::string>();
  }

  const json* object(const std::string& key) {
    const json* v = take(key);
    if (v && !v->is_object()) throw ValidationError(where(key) + " must be an object");
    return v;
  }

  void reject_unknown() const {
    for (const auto& [k, _] : obj_.items()) {
      if (!seen_.count(k)) throw ValidationError("unknown key " + where(k));
    }
  }

  std::string where(const std::string& key = {}) const {
    std::string p = path_;
    if (!key.empty()) p += (p.empty() ? "" : ".") + key;
    return "'" + (p.empty() ? std::string("<root>") : p) + "'";
  }

 private:
  const json* take(const std::string& key) {
    if (!obj_.contains(key)) return nullptr;
    seen_.insert(key);
    return &obj_.at(key);
  }

  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

inline void apply_robot(const json& node, RobotConfig& robot) {
  ObjectReader r(node, "robot");
  LimbGeometry base = robot.limbs[0];
  bool base_changed = false;
  if (auto v = r.number("limb_length")) base.length = *v, base_changed = true;
  if (auto v = r.number("anchor_radius")) base.anchor_radius = *v, base_changed = true;
  if (auto v = r.number("limb_mass")) base.mass = *v, base_changed = true;
  if (base_changed) robot.limbs.fill(base);
  if (auto v = r.number("hub_mass")) robot.hub_mass = *v;
  if (auto v = r.angle("mount_elevation")) robot.mount_elevation = *v;
  if (auto v = r.angle("phi_max")) robot.phi_max = *v;
  if (const json* limbs = r.object("limbs")) {
    ObjectReader lr(*limbs, "robot.limbs");
    for (LimbId id : kAllLimbs) {
      const std::string name(limb_name(id));
      if (const json* one = lr.object(name)) {
        ObjectReader g(*one, "robot.limbs." + name);
        auto& geom = robot.limb(id);
        if (auto v = g.number("length")) geom.length = *v;
        if (auto v = g.number("anchor_radius")) geom.anchor_radius = *v;
        if (auto v = g.number("mass")) geom.mass = *v;
        g.reject_unknown();
      }
    }
    lr.reject_unknown();
  }
  r.reject_unknown();
}

inline ResolvedConfig resolve(const json& root) {
  ObjectReader r(root, "");
  ResolvedConfig cfg;
  if (auto name = r.string("preset")) {
    auto p = find_preset(*name);
    if (!p) throw ValidationError("unknown preset '" + *name + "'");
    cfg.kind = p->kind;
    cfg.params = p->params;
    cfg.preset = p->name;
  }
  if (auto g = r.string("gait")) {
    auto k = gait_kind_from_name(*g);
    if (!k) throw ValidationError("unknown gait '" + *g + "'");
    cfg.kind = *k;
  } else if (!cfg.preset) {
    throw ValidationError("config needs 'gait' or 'preset'");
  }
  auto& p = cfg.params;
  const bool has_f = root.contains("frequency_hz");
  const bool has_t = root.contains("period_s");
  if (has_f && has_t) throw ValidationError("give only one of 'frequency_hz' and 'period_s'");
  if (auto v = r.number("frequency_hz")) p.frequency = *v;
  if (auto v = r.number("period_s")) {
    if (!(*v > 0.0)) throw ValidationError("'period_s' must be > 0");
    p.frequency = 1.0 / *v;
  }
  if (auto v = r.count("samples_per_cycle")) p.samples_per_cycle = *v;
  if (auto v = r.count("cycles")) p.n_cycles = *v;
  if (auto v = r.number("crawl_radius")) p.crawl_radius = *v;
  if (auto v = r.number("turn_radius")) p.turn_radius = *v;
  if (auto v = r.number("plane_offset")) p.plane_offset = *v;
  if (auto v = r.angle("phase_offset")) p.phase_offset = *v;
  if (auto v = r.angle("head_bend")) p.head.phi_end = *v;
  if (auto v = r.angle("back_bend")) p.back.phi_max = *v;
  if (auto v = r.angle("back_bend_theta")) p.back.theta = *v;
  if (const json* robot = r.object("robot")) apply_robot(*robot, cfg.robot);
  r.reject_unknown();

  if (!(p.frequency > 0.0)) throw ValidationError("'frequency_hz' must be > 0");
  cfg.robot.validate();
  cfg.spec().validate();
  return cfg;
}

}  // namespace detail

/// Parses and validates a config. Throws ParseError for malformed text and
/// ValidationError for well-formed text that breaks an invariant.
inline ResolvedConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    throw ParseError(e.what(), line, col);
  }
  return detail::resolve(root);
}

inline ResolvedConfig config_from_json(const json& root) { return detail::resolve(root); }

/// Fully explicit config (radians, every key present) that parses back to
/// the same values.
inline json to_json(const ResolvedConfig& cfg) {
  const auto& p = cfg.params;
  json limbs = json::object();
  for (LimbId id : kAllLimbs) {
    const auto& g = cfg.robot.limb(id);
    limbs[std::string(limb_name(id))] = {{"length", g.length}, {"anchor_radius", g.anchor_radius}, {"mass", g.mass}};
  }
  return {
      {"gait", std::string(gait_kind_name(cfg.kind))},
      {"frequency_hz", p.frequency},
      {"samples_per_cycle", p.samples_per_cycle},
      {"cycles", p.n_cycles},
      {"crawl_radius", p.crawl_radius},
      {"turn_radius", p.turn_radius},
      {"plane_offset", p.plane_offset},
      {"phase_offset", p.phase_offset},
      {"head_bend", p.head.phi_end},
      {"back_bend", p.back.phi_max},
      {"back_bend_theta", p.back.theta},
      {"robot",
       {{"hub_mass", cfg.robot.hub_mass},
        {"mount_elevation", cfg.robot.mount_elevation},
        {"phi_max", cfg.robot.phi_max},
        {"limbs", limbs}}},
  };
}

}  // namespace pinniped::io
