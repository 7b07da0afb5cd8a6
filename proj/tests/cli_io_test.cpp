#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>

#include "pinniped/io/run.hpp"
#include "support/oracles.hpp"

using namespace pinniped;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pinniped_cli_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const fs::path& stderr_file = {}) {
  std::string cmd = std::string("\"") + PINNIPED_CLI + "\" " + args + " > /dev/null";
  cmd += stderr_file.empty() ? " 2>/dev/null" : " 2>\"" + stderr_file.string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Format, SeventeenSignificantDigitsRoundTrip) {
  auto g = oracle::rng(21);
  for (int i = 0; i < 1000; ++i) {
    const double v = oracle::uniform(g, -1.0, 1.0) * std::pow(10.0, oracle::uniform(g, -12, 3));
    EXPECT_EQ(std::stod(io::format_number(v)), v);
  }
  EXPECT_EQ(io::format_number(0.0), "0");
  EXPECT_EQ(io::format_number(0.5), "0.5");
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Presets, CatalogueIsUniqueAndValid) {
  const auto& presets = io::all_presets();
  EXPECT_EQ(presets.size(), 54u);
  std::set<std::string> names;
  for (const auto& p : presets) {
    EXPECT_TRUE(names.insert(p.name).second) << p.name;
    EXPECT_NO_THROW(make_gait_spec(p.kind, p.params).validate()) << p.name;
  }
  EXPECT_TRUE(io::find_preset("fwd-r10-f100"));
  EXPECT_EQ(io::find_preset("fwd-r10")->name, "fwd-r10-f100");
  EXPECT_EQ(io::find_preset("turn-left-b06-f075")->params.turn_radius, 0.06);
  EXPECT_FALSE(io::find_preset("fwd-r12"));
}

TEST(Config, MinimalGait) {
  const auto cfg = io::parse_config(R"({"gait": "backward_crawl"})");
  EXPECT_EQ(cfg.kind, GaitKind::backward_crawl);
  EXPECT_EQ(cfg.params.crawl_radius, 0.10);
  EXPECT_FALSE(cfg.preset);
}

TEST(Config, PresetWithOverrides) {
  const auto cfg = io::parse_config(R"({"preset": "fwd-r08-f125", "cycles": 3, "head_bend_deg": 45})");
  EXPECT_EQ(cfg.kind, GaitKind::forward_crawl);
  EXPECT_EQ(cfg.params.crawl_radius, 0.08);
  EXPECT_EQ(cfg.params.frequency, 1.25);
  EXPECT_EQ(cfg.params.n_cycles, 3u);
  EXPECT_NEAR(cfg.params.head.phi_end, kPi / 4, 1e-15);
  EXPECT_EQ(*cfg.preset, "fwd-r08-f125");
}

TEST(Config, PeriodAndRobotOverrides) {
  const auto cfg = io::parse_config(R"({
    "gait": "inplace_cw", "period_s": 2.0,
    "robot": {"limb_length": 0.3, "hub_mass": 0.2, "limbs": {"B": {"mass": 0.5}}}
  })");
  EXPECT_EQ(cfg.params.frequency, 0.5);
  EXPECT_EQ(cfg.robot.limb(LimbId::H).length, 0.3);
  EXPECT_EQ(cfg.robot.limb(LimbId::B).length, 0.3);
  EXPECT_EQ(cfg.robot.limb(LimbId::B).mass, 0.5);
  EXPECT_EQ(cfg.robot.limb(LimbId::FL).mass, 0.15);
  EXPECT_EQ(cfg.robot.hub_mass, 0.2);
}

TEST(Config, Errors) {
  EXPECT_THROW(io::parse_config(R"({})"), ValidationError);
  EXPECT_THROW(io::parse_config(R"({"gait": "hop"})"), ValidationError);
  EXPECT_THROW(io::parse_config(R"({"preset": "nope"})"), ValidationError);
  EXPECT_THROW(io::parse_config(R"({"gait": "forward_crawl", "colour": 1})"), ValidationError);
  EXPECT_THROW(io::parse_config(R"({"gait": "forward_crawl", "frequency_hz": 1, "period_s": 1})"),
               ValidationError);
  EXPECT_THROW(io::parse_config(R"({"gait": "forward_crawl", "head_bend": 1, "head_bend_deg": 1})"),
               ValidationError);
  EXPECT_THROW(io::parse_config(R"({"gait": "forward_crawl", "samples_per_cycle": 3})"), ValidationError);
  EXPECT_THROW(io::parse_config(R"({"gait": "forward_crawl", "crawl_radius": "big"})"), ValidationError);
}

TEST(Config, ParseErrorCarriesLocation) {
  try {
    io::parse_config("{\n  \"gait\": \"forward_crawl\",\n  oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GE(e.column(), 3u);
  }
}

TEST(Config, CanonicalJsonRoundTrips) {
  for (const auto& p : io::all_presets()) {
    const auto cfg = io::config_from_json({{"preset", p.name}});
    const auto again = io::config_from_json(io::to_json(cfg));
    EXPECT_EQ(io::to_json(again), io::to_json(cfg)) << p.name;
  }
}

TEST(Export, CsvShapes) {
  const io::ResolvedConfig cfg = io::parse_config(R"({"gait": "forward_crawl", "cycles": 2})");
  const auto traj = synthesize(cfg.spec(), cfg.robot);
  const auto js = io::jointspace_csv(traj);
  EXPECT_EQ(js.substr(0, js.find('\n')), "t,l_H1,l_H2,l_H3,l_B1,l_B2,l_B3,l_FR1,l_FR2,l_FR3,l_FL1,l_FL2,l_FL3");
  EXPECT_EQ(std::count(js.begin(), js.end(), '\n'), 201);
  const auto ts = io::taskspace_csv(traj);
  EXPECT_EQ(std::count(ts.begin(), ts.end(), '\n'), 801);
  const auto cog = io::cog_csv(traj);
  EXPECT_EQ(cog.substr(0, cog.find('\n')), "t,x,y,z,ground_contact");
  const auto seam = io::pressure_seam_csv(traj, io::parse_limb_order("FL,FR"));
  EXPECT_EQ(seam.substr(0, seam.find('\n')), "t,FL_1,FL_2,FL_3,FR_1,FR_2,FR_3");
  EXPECT_THROW(io::parse_limb_order("FL,XX"), ValidationError);
}

TEST(Run, WritesFilesAndManifest) {
  const auto dir = scratch_dir("run");
  const auto cfg = io::config_from_json({{"preset", "bwd-r06-f075"}});
  bool hook_called = false;
  const auto m = io::run(cfg, dir, "in.json", [&](const GaitTrajectory& t, const RobotConfig&) {
    hook_called = true;
    EXPECT_EQ(t.size(), 100u);
  });
  EXPECT_TRUE(hook_called);
  for (const char* f : {io::kJointspaceFile, io::kTaskspaceFile, io::kCogFile, io::kReportFile,
                        io::kManifestFile}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const auto manifest = io::json::parse(io::read_file(dir / io::kManifestFile));
  EXPECT_EQ(manifest["content_hash"], m.content_hash);
  EXPECT_EQ(manifest["preset"], "bwd-r06-f075");
  EXPECT_EQ(manifest["gait_kind"], "backward_crawl");
  EXPECT_EQ(manifest["files"][io::kCogFile], io::sha256_hex(io::read_file(dir / io::kCogFile)));
}

TEST(Run, ManifestReproducesBytes) {
  const auto a = scratch_dir("manifest_a");
  const auto b = scratch_dir("manifest_b");
  const auto cfg = io::parse_config(R"({"gait": "crawl_turn_right", "turn_radius": 0.06, "cycles": 2})");
  const auto first = io::run(cfg, a);
  const auto replay = io::load_config_text(io::read_file(a / io::kManifestFile));
  const auto second = io::run(replay, b);
  EXPECT_EQ(first.content_hash, second.content_hash);
  EXPECT_EQ(io::read_file(a / io::kJointspaceFile), io::read_file(b / io::kJointspaceFile));
}

TEST(Run, UnreachableWritesNothing) {
  const auto dir = scratch_dir("unreachable") / "out";
  const auto cfg = io::parse_config(R"({"gait": "forward_crawl", "crawl_radius": 0.2})");
  EXPECT_THROW(io::run(cfg, dir), UnreachableError);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(Run, ErrorRecords) {
  EXPECT_EQ(io::error_record(UnreachableError(0.8, 0.72, 4, "FR"))["error"], "Unreachable");
  EXPECT_EQ(io::error_record(UnreachableError(0.8, 0.72, 4, "FR"))["sample"], 4);
  EXPECT_EQ(io::error_record(ParseError("x", 2, 5))["line"], 2);
  EXPECT_EQ(io::error_record(ValidationError("x"))["error"], "ValidationError");
  EXPECT_EQ(io::error_record(AllMassesZeroError())["error"], "AllMassesZero");
  EXPECT_EQ(io::error_record(WrongGaitKindError("x"))["error"], "WrongGaitKind");
  EXPECT_EQ(io::error_record(std::runtime_error("x"))["error"], "Error");
}

TEST(Analyze, RebuildsFromJointspace) {
  const auto dir = scratch_dir("analyze");
  const auto cfg = io::config_from_json({{"preset", "fwd-r10-f100"}});
  io::run(cfg, dir);
  const auto report = io::analyze_directory(dir);
  EXPECT_LT(report["cog_csv_max_deviation"].get<double>(), 1e-12);
  const auto original = io::json::parse(io::read_file(dir / io::kReportFile));
  EXPECT_EQ(report["workspace"]["ok"], true);
  EXPECT_EQ(report["cog_comparison"]["contact_samples"], original["cog_comparison"]["contact_samples"]);
  EXPECT_EQ(report["cog_comparison"]["contact_samples_closer_to_tips"],
            original["cog_comparison"]["contact_samples_closer_to_tips"]);
}

TEST(Cli, SynthAndDeterminism) {
  const auto dir = scratch_dir("cli");
  ASSERT_EQ(run_cli("synth spin-ccw-r08 -o \"" + (dir / "a").string() + "\""), 0);
  ASSERT_EQ(run_cli("synth spin-ccw-r08 -o \"" + (dir / "b").string() + "\""), 0);
  EXPECT_EQ(io::read_file(dir / "a" / io::kManifestFile), io::read_file(dir / "b" / io::kManifestFile));
}

TEST(Cli, PressureSeam) {
  const auto dir = scratch_dir("cli_seam");
  const auto seam = dir / "seam.csv";
  ASSERT_EQ(run_cli("synth fwd-r06 -o \"" + (dir / "o").string() + "\" --pressure-seam \"" +
                    seam.string() + "\" --limb-order FR,FL"),
            0);
  const auto body = io::read_file(seam);
  EXPECT_EQ(body.substr(0, body.find('\n')), "t,FR_1,FR_2,FR_3,FL_1,FL_2,FL_3");
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch_dir("cli_codes");
  const auto bad = dir / "bad.json";
  io::write_file(bad, "{ \"gait\": ");
  const auto err = dir / "err.txt";
  EXPECT_EQ(run_cli("synth \"" + bad.string() + "\" -o \"" + (dir / "x").string() + "\"", err), 2);
  const auto rec = io::json::parse(io::read_file(err));
  EXPECT_EQ(rec["error"], "ParseError");
  EXPECT_EQ(rec["line"], 1);

  const auto far = dir / "far.json";
  io::write_file(far, R"({"gait": "inplace_cw", "crawl_radius": 0.19})");
  EXPECT_EQ(run_cli("synth \"" + far.string() + "\" -o \"" + (dir / "y").string() + "\"", err), 3);
  EXPECT_EQ(io::json::parse(io::read_file(err))["error"], "Unreachable");

  const auto zero = dir / "zero.json";
  io::write_file(zero, R"({"gait": "forward_crawl", "robot": {"limb_mass": 0}})");
  EXPECT_EQ(run_cli("synth \"" + zero.string() + "\" -o \"" + (dir / "z").string() + "\"", err), 3);
  EXPECT_EQ(io::json::parse(io::read_file(err))["error"], "AllMassesZero");

  EXPECT_EQ(run_cli("check no-such-preset", err), 2);
  EXPECT_EQ(run_cli("analyze \"" + (dir / "missing").string() + "\"", err), 1);
}
