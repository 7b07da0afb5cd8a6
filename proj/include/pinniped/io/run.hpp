#pragma once

// One synthesis run: config in, trajectory files plus manifest out.
//
// Output directory layout:
//   jointspace.csv  taskspace.csv  cog.csv  report.json  manifest.json
//
// The manifest embeds the fully resolved config, so passing manifest.json
// back as a config reproduces the same bytes.

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pinniped/analysis.hpp"
#include "pinniped/errors.hpp"
#include "pinniped/gait_synthesis.hpp"
#include "pinniped/io/config.hpp"
#include "pinniped/io/export.hpp"

namespace pinniped::io {

inline constexpr const char* kToolkitVersion = "0.1.0";

inline constexpr const char* kJointspaceFile = "jointspace.csv";
inline constexpr const char* kTaskspaceFile = "taskspace.csv";
inline constexpr const char* kCogFile = "cog.csv";
inline constexpr const char* kReportFile = "report.json";
inline constexpr const char* kManifestFile = "manifest.json";

struct RunManifest {
  std::string config_path;
  GaitKind kind = GaitKind::forward_crawl;
  std::optional<std::string> preset;
  json resolved_config;
  std::string toolkit_version = kToolkitVersion;
  std::map<std::string, std::string> file_hashes;  // sha256 per output file
  std::string content_hash;                         // sha256 over all outputs

  json to_json() const {
    json j = {
        {"config_path", config_path},
        {"gait_kind", std::string(gait_kind_name(kind))},
        {"resolved_config", resolved_config},
        {"toolkit_version", toolkit_version},
        {"files", file_hashes},
        {"content_hash", content_hash},
    };
    j["preset"] = preset ? json(*preset) : json(nullptr);
    return j;
  }
};

/// Called after synthesis with the finished trajectory, e.g. to feed an
/// external jointspace-to-pressure mapper.
using PressureExportHook = std::function<void(const GaitTrajectory&, const RobotConfig&)>;

/// True when `j` looks like a manifest written by run().
inline bool is_manifest(const json& j) {
  return j.is_object() && j.contains("resolved_config") && j.contains("toolkit_version");
}

/// Accepts a config file body or a manifest body.
inline ResolvedConfig load_config_text(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error&) {
    return parse_config(text);  // rethrows with line and column
  }
  if (is_manifest(root)) return config_from_json(root.at("resolved_config"));
  return config_from_json(root);
}

inline json stats_json(const LimbStats& s) {
  return {{"theta_min", s.theta_min}, {"theta_max", s.theta_max}, {"phi_min", s.phi_min},
          {"phi_max", s.phi_max},     {"z_min", s.z_min},         {"z_max", s.z_max}};
}

/// Workspace statistics, violations and (forward crawl) CoG comparison.
inline json analysis_report(const GaitTrajectory& traj, const RobotConfig& cfg) {
  const auto ws = workspace_check(traj, cfg);
  json limbs = json::object();
  for (LimbId id : kAllLimbs) limbs[std::string(limb_name(id))] = stats_json(ws.stats(id));
  json violations = json::array();
  for (const auto& v : ws.violations) {
    violations.push_back({{"limb", std::string(limb_name(v.limb))}, {"sample", v.sample}, {"what", v.what}});
  }
  json report = {
      {"gait_kind", std::string(gait_kind_name(traj.kind()))},
      {"samples", traj.size()},
      {"samples_per_cycle", traj.spec.samples_per_cycle},
      {"cycles", traj.spec.n_cycles},
      {"workspace", {{"limbs", limbs}, {"violations", violations}, {"ok", ws.ok()}}},
  };
  if (traj.kind() == GaitKind::forward_crawl) {
    const auto cmp = cog_compare(traj, cfg);
    std::size_t contact = 0, closer = 0;
    for (std::size_t i = 0; i < cmp.size(); ++i) {
      if (!cmp.ground_contact[i]) continue;
      ++contact;
      const double m = cmp.tip_mean_x(i);
      if (std::abs(cmp.cog_active[i].x() - m) < std::abs(cmp.cog_inactive[i].x() - m)) ++closer;
    }
    report["cog_comparison"] = {
        {"max_x_active", CogComparison::max_x(cmp.cog_active)},
        {"max_x_inactive", CogComparison::max_x(cmp.cog_inactive)},
        {"contact_samples", contact},
        {"contact_samples_closer_to_tips", closer},
    };
  }
  return report;
}

struct RunOutputs {
  std::string jointspace;
  std::string taskspace;
  std::string cog;
  std::string report;
};

inline RunOutputs render_outputs(const GaitTrajectory& traj, const RobotConfig& cfg) {
  return {jointspace_csv(traj), taskspace_csv(traj), cog_csv(traj),
          analysis_report(traj, cfg).dump(2) + "\n"};
}

/// Synthesizes, writes every output into `out_dir` (created if needed) and
/// returns the manifest. Synthesis errors propagate before anything is written.
inline RunManifest run(const ResolvedConfig& cfg, const std::filesystem::path& out_dir,
                       std::string config_path = {}, const PressureExportHook& hook = {}) {
  const GaitTrajectory traj = synthesize(cfg.spec(), cfg.robot);
  const RunOutputs outputs = render_outputs(traj, cfg.robot);

  RunManifest m;
  m.config_path = std::move(config_path);
  m.kind = cfg.kind;
  m.preset = cfg.preset;
  m.resolved_config = to_json(cfg);
  const std::pair<const char*, const std::string*> files[] = {
      {kJointspaceFile, &outputs.jointspace},
      {kTaskspaceFile, &outputs.taskspace},
      {kCogFile, &outputs.cog},
      {kReportFile, &outputs.report},
  };
  std::string all;
  for (const auto& [name, body] : files) {
    m.file_hashes[name] = sha256_hex(*body);
    all += name;
    all += '\n';
    all += *body;
  }
  m.content_hash = sha256_hex(all);

  std::filesystem::create_directories(out_dir);
  for (const auto& [name, body] : files) write_file(out_dir / name, *body);
  write_file(out_dir / kManifestFile, m.to_json().dump(2) + "\n");
  if (hook) hook(traj, cfg.robot);
  return m;
}

/// Machine-readable error record for CLI failures.
inline json error_record(const std::exception& e) {
  json j = {{"message", e.what()}};
  if (const auto* u = dynamic_cast<const UnreachableError*>(&e)) {
    j["error"] = "Unreachable";
    j["reach_ratio"] = u->reach_ratio();
    j["limit"] = u->limit();
    j["sample"] = u->sample() ? json(*u->sample()) : json(nullptr);
    j["limb"] = u->limb() ? json(*u->limb()) : json(nullptr);
  } else if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    j["error"] = "ParseError";
    j["line"] = p->line();
    j["column"] = p->column();
  } else if (dynamic_cast<const ValidationError*>(&e)) {
    j["error"] = "ValidationError";
  } else if (dynamic_cast<const AllMassesZeroError*>(&e)) {
    j["error"] = "AllMassesZero";
  } else if (dynamic_cast<const WrongGaitKindError*>(&e)) {
    j["error"] = "WrongGaitKind";
  } else {
    j["error"] = "Error";
  }
  return j;
}

namespace detail {

inline std::vector<std::vector<double>> read_numeric_csv(const std::string& body,
                                                         std::vector<std::string>& header) {
  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty CSV");
  header.clear();
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = std::min(line.find(',', pos), line.size());
      double v = 0.0;
      const auto res = std::from_chars(line.data() + pos, line.data() + comma, v);
      if (res.ec != std::errc() || res.ptr != line.data() + comma) {
        throw ValidationError("malformed CSV number in row " + std::to_string(rows.size() + 1));
      }
      row.push_back(v);
      pos = comma + 1;
    }
    if (row.size() != header.size()) {
      throw ValidationError("CSV row " + std::to_string(rows.size() + 1) + " has wrong column count");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Rebuilds a trajectory from the jointspace CSV in `dir` (geometry from
/// its manifest) and re-runs the analysis. Also reports how far the
/// recomputed CoG drifts from cog.csv.
inline json analyze_directory(const std::filesystem::path& dir) {
  const json manifest = json::parse(read_file(dir / kManifestFile));
  if (!is_manifest(manifest)) throw ValidationError("not a run manifest: " + (dir / kManifestFile).string());
  const ResolvedConfig cfg = config_from_json(manifest.at("resolved_config"));
  const GaitSpec spec = cfg.spec();

  std::vector<std::string> header;
  const auto rows = detail::read_numeric_csv(read_file(dir / kJointspaceFile), header);
  if (header.size() != 13) throw ValidationError("jointspace CSV must have 13 columns");
  if (rows.size() != spec.total_samples()) {
    throw ValidationError("jointspace CSV row count does not match the manifest");
  }

  GaitTrajectory traj;
  traj.spec = spec;
  traj.time.resize(rows.size());
  traj.cog.resize(rows.size());
  for (auto& l : traj.limbs) l.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    traj.time[i] = rows[i][0];
    std::array<CurveParams, 4> cps;
    for (LimbId id : kAllLimbs) {
      const std::size_t j = limb_index(id);
      LimbSample& s = traj.limbs[j][i];
      s.joints = {{rows[i][1 + 3 * j], rows[i][2 + 3 * j], rows[i][3 + 3 * j]}};
      s.curve = joint_to_curve(s.joints, cfg.robot.limb(id));
      s.tip = tip_position(s.curve, cfg.robot.limb(id));
      s.tip_robot = mount_transform(id, cfg.robot.mount_elevation).apply(s.tip);
      s.target = s.tip;
      cps[j] = s.curve;
    }
    traj.cog[i] = robot_cog(cps, cfg.robot);
  }
  const std::size_t n = spec.samples_per_cycle;
  std::vector<double> first_cycle_x(traj.crawl_tip_mean_x());
  first_cycle_x.resize(n);
  const auto mask = ground_contact_mask(first_cycle_x, travel_direction(spec.kind));
  traj.ground_contact.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) traj.ground_contact[i] = mask[i % n];

  json report = analysis_report(traj, cfg.robot);
  if (std::filesystem::exists(dir / kCogFile)) {
    std::vector<std::string> cog_header;
    const auto cog_rows = detail::read_numeric_csv(read_file(dir / kCogFile), cog_header);
    double drift = 0.0;
    for (std::size_t i = 0; i < std::min(cog_rows.size(), traj.size()); ++i) {
      for (int a = 0; a < 3; ++a) drift = std::max(drift, std::abs(cog_rows[i][1 + a] - traj.cog[i][a]));
    }
    report["cog_csv_max_deviation"] = drift;
  }
  report["source_content_hash"] = manifest.value("content_hash", "");
  return report;
}

}  // namespace pinniped::io
