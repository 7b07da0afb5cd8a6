// pinniped: gait synthesis front end.
//
//   pinniped synth <config|manifest|preset> [-o DIR] [--pressure-seam FILE [--limb-order H,B,FR,FL]]
//   pinniped presets list
//   pinniped check <config|preset>
//   pinniped analyze <trajectory-dir>
//
// Exit codes: 0 success, 2 config error, 3 synthesis error, 1 other failures.
// The default output directory comes from PINNIPED_OUTPUT_DIR, else ./pinniped_out.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pinniped/io/run.hpp"

namespace {

namespace fs = std::filesystem;
using namespace pinniped;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSynthesis = 3;

// A path that exists is read as a config (or manifest); otherwise the
// argument is tried as a preset name.
io::ResolvedConfig load(const std::string& arg) {
  if (fs::exists(arg)) return io::load_config_text(io::read_file(arg));
  if (auto p = io::find_preset(arg)) {
    io::json j = {{"preset", p->name}};
    return io::config_from_json(j);
  }
  throw ValidationError("no such config file or preset: '" + arg + "'");
}

int report_error(const std::exception& e, int code) {
  std::cerr << io::error_record(e).dump() << "\n";
  return code;
}

fs::path default_output_dir() {
  if (const char* env = std::getenv("PINNIPED_OUTPUT_DIR"); env && *env) return env;
  return "pinniped_out";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinematics and gait synthesis for a four-limbed soft pinniped robot"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = default_output_dir().string();
  std::string seam_path;
  std::string limb_order = "H,B,FR,FL";
  auto* synth = app.add_subcommand("synth", "synthesize a gait and write trajectory files");
  synth->add_option("config", config, "config file, run manifest, or preset name")->required();
  synth->add_option("-o,--output", out_dir, "output directory");
  synth->add_option("--pressure-seam", seam_path, "also write jointspace columns for a pressure mapper");
  synth->add_option("--limb-order", limb_order, "limb column order for --pressure-seam");

  auto* presets = app.add_subcommand("presets", "preset catalogue");
  auto* presets_list = presets->add_subcommand("list", "print preset names");
  presets->require_subcommand(1);

  std::string check_config;
  auto* check = app.add_subcommand("check", "validate a config without synthesizing");
  check->add_option("config", check_config, "config file or preset name")->required();

  std::string analyze_dir;
  auto* analyze = app.add_subcommand("analyze", "re-analyze a trajectory directory");
  analyze->add_option("dir", analyze_dir, "directory written by synth")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (presets_list->parsed()) {
    for (const auto& p : io::all_presets()) std::cout << p.name << "\n";
    return kExitOk;
  }

  if (check->parsed()) {
    try {
      const auto cfg = load(check_config);
      std::cout << io::to_json(cfg).dump(2) << "\n";
      return kExitOk;
    } catch (const Error& e) {
      return report_error(e, kExitConfig);
    } catch (const std::exception& e) {
      return report_error(e, kExitFailure);
    }
  }

  if (analyze->parsed()) {
    try {
      std::cout << io::analyze_directory(analyze_dir).dump(2) << "\n";
      return kExitOk;
    } catch (const std::exception& e) {
      return report_error(e, kExitFailure);
    }
  }

  if (synth->parsed()) {
    io::ResolvedConfig cfg;
    std::vector<LimbId> order;
    try {
      cfg = load(config);
      order = io::parse_limb_order(limb_order);
    } catch (const Error& e) {
      return report_error(e, kExitConfig);
    } catch (const std::exception& e) {
      return report_error(e, kExitFailure);
    }
    io::PressureExportHook hook;
    if (!seam_path.empty()) {
      hook = [&](const GaitTrajectory& traj, const RobotConfig&) {
        io::write_file(seam_path, io::pressure_seam_csv(traj, order));
      };
    }
    try {
      const auto manifest = io::run(cfg, out_dir, config, hook);
      std::cout << manifest.content_hash << "  " << out_dir << "\n";
      return kExitOk;
    } catch (const UnreachableError& e) {
      return report_error(e, kExitSynthesis);
    } catch (const AllMassesZeroError& e) {
      return report_error(e, kExitSynthesis);
    } catch (const ValidationError& e) {
      return report_error(e, kExitConfig);
    } catch (const std::exception& e) {
      return report_error(e, kExitFailure);
    }
  }
  return kExitFailure;
}
