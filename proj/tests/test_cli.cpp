#include "commands.hpp"
#include "run_config.hpp"
#include "verify.hpp"

#include "majorana/spherical.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace majorana;
using namespace majorana::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("majorana_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

RunConfig config_for(const std::string& name, const std::string& text) {
  RunConfig c = parse_config(text);
  c.output.directory = scratch(name).string();
  return c;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const fs::path& path) { return json::parse(slurp(path)); }

std::vector<std::vector<double>> read_frames(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(MAJORANA_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("default verify passes with at least 30 checks") {
  const RunConfig c = config_for("verify", R"({"command": "verify"})");
  const CommandResult r = run_command(c);
  CHECK(r.status == 0);
  const json report = read_json(fs::path(c.output.directory) / "verify_report.json");
  CHECK(report["pass"].get<bool>());
  CHECK(report["checks"].size() >= 30);
  bool all = true;
  for (const auto& e : report["checks"]) {
    CHECK(e["pass"].get<bool>() == (e["measured"].get<double>() <= e["tolerance"].get<double>()));
    all = all && e["pass"].get<bool>();
  }
  CHECK(all == report["pass"].get<bool>());
  CHECK(report["skipped"].empty());
}

TEST_CASE("verify with a 1e-30 tolerance override fails that check") {
  const RunConfig c = config_for("verify_override", R"({"tolerances": {"fourier.round_trip": 1e-30}})");
  const VerifyReport report = run_verify(c);
  CHECK_FALSE(report.pass);
  for (const auto& e : report.checks) CHECK(e.pass == (e.id != "fourier.round_trip"));
  CHECK(run_command(config_for("verify_override", R"({"command": "verify", "tolerances": {"fourier.round_trip": 1e-30}})"))
            .status == 1);
}

TEST_CASE("verify rejects overrides for unknown checks") {
  CHECK_THROWS_AS(run_verify(config_for("verify_unknown", R"({"tolerances": {"no.such.check": 1}})")), ConfigError);
}

TEST_CASE("massless verify flags the degenerate momenta") {
  const VerifyReport report = run_verify(config_for("verify_massless", R"({"mass": 0})"));
  CHECK(report.pass);
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped[0].find("8 massless modes") != std::string::npos);
}

TEST_CASE("malformed configs raise ConfigError") {
  const char* bad[] = {
      "{",
      "[1, 2]",
      R"({"command": "plot"})",
      R"({"mass": -1})",
      R"({"grid": {"n": 15}})",
      R"({"grid": {"L": 0}})",
      R"({"spherical": {"nr": 0}})",
      R"({"transform": "laplace"})",
      R"({"initial": {"type": "gaussian", "width": 0}})",
      R"({"initial": {"type": "blob"}})",
      R"({"initial": {"chi": [1, 0, 0]}})",
      R"({"initial": {"p": [1, 2]}})",
      R"({"time": {"steps": -1}})",
      R"({"output": {"formats": ["png"]}})",
      R"({"tolerances": {"fourier.round_trip": "small"}})",
      R"({"grid": {"n": "sixteen"}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_config(text), ConfigError);
  }
  CHECK_THROWS_AS(run_command(config_for("bad_mode", R"({"command": "transform", "initial": {"type": "single-mode", "p": [8, 0, 0]}})")),
                  ConfigError);
  CHECK_THROWS_AS(run_command(config_for("bad_evolve", R"({"command": "evolve", "transform": "hankel"})")), ConfigError);
}

TEST_CASE("exit status contract of the executable") {
  const fs::path dir = scratch("exit");
  fs::create_directories(dir);
  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << "{ not json";
  const fs::path strict = dir / "strict.json";
  std::ofstream(strict) << R"({"tolerances": {"clifford.trace": -1}})";
  const fs::path zero = dir / "zero.json";
  std::ofstream(zero) << R"({"initial": {"type": "zero"}, "time": {"steps": 3}})";

  CHECK(run_binary("verify --config " + bad.string()) == 2);
  CHECK(run_binary("verify --config " + (dir / "missing.json").string()) == 2);
  CHECK(run_binary("render --config " + zero.string()) == 2);
  CHECK(run_binary("evolve") == 2);
  CHECK(run_binary("evolve --config " + zero.string() + " --quiet --out " + (dir / "run").string()) == 0);
  CHECK(fs::exists(dir / "run" / "frames.csv"));
  CHECK(run_binary("verify --config " + strict.string() + " --quiet --out " + (dir / "strict").string()) == 1);
}

TEST_CASE("evolving a Gaussian at rest conserves the norm") {
  const RunConfig c = config_for("evolve_rest", R"({"command": "evolve", "initial": {"width": 1.5}})");
  CHECK(run_command(c).status == 0);
  const json summary = read_json(fs::path(c.output.directory) / "evolve_summary.json");
  CHECK(summary["max_relative_norm_drift"].get<double>() < 1e-12);
  CHECK(summary["max_relative_energy_drift"].get<double>() < 1e-12);
  const auto frames = read_frames(fs::path(c.output.directory) / "frames.csv");
  REQUIRE(frames.size() == 101);
  CHECK(frames.back()[1] == doctest::Approx(5.0));
}

TEST_CASE("a boosted packet moves with the group velocity ⟨p⟩/⟨E⟩") {
  const RunConfig c = config_for(
      "evolve_boost",
      R"({"command": "evolve", "grid": {"n": 32, "L": 40}, "initial": {"width": 4, "momentum": [1, 0.5, 0]}})");
  CHECK(run_command(c).status == 0);
  const json summary = read_json(fs::path(c.output.directory) / "evolve_summary.json");
  CHECK(summary["velocity_error"].get<double>() < 0.02);
  CHECK(summary["max_relative_norm_drift"].get<double>() < 1e-12);
  const double vx = summary["group_velocity"][0].get<double>();
  CHECK(vx == doctest::Approx(0.655).epsilon(0.01));
}

TEST_CASE("a zero field stays zero in every frame") {
  const RunConfig c = config_for(
      "evolve_zero", R"({"command": "evolve", "initial": {"type": "zero"}, "time": {"steps": 10},
                         "output": {"dump_fields": true, "formats": ["csv", "bin"]}})");
  CHECK(run_command(c).status == 0);
  const fs::path dir(c.output.directory);
  for (const auto& row : read_frames(dir / "frames.csv")) CHECK(row[2] == 0.0);
  const auto dump = read_frames(dir / "field_00010.csv");
  REQUIRE(dump.size() == 16 * 16 * 16);
  for (const auto& row : dump)
    for (int k = 3; k < 7; ++k) CHECK(row[k] == 0.0);
  CHECK(fs::exists(dir / "field_00010.bin"));
}

TEST_CASE("identical configs give byte-identical CSV output") {
  const char* text = R"({"command": "evolve", "initial": {"width": 1.2, "momentum": [0.6, 0, 0.3]}, "time": {"steps": 20},
                         "output": {"dump_fields": true}})";
  const RunConfig a = config_for("det_a", text);
  const RunConfig b = config_for("det_b", text);
  run_command(a);
  run_command(b);
  for (const char* name : {"frames.csv", "field_00000.csv", "field_00020.csv"}) {
    CAPTURE(name);
    CHECK(slurp(fs::path(a.output.directory) / name) == slurp(fs::path(b.output.directory) / name));
  }
  const RunConfig ta = config_for("det_ta", R"({"command": "transform"})");
  const RunConfig tb = config_for("det_tb", R"({"command": "transform"})");
  run_command(ta);
  run_command(tb);
  for (const char* name : {"input.csv", "spectrum.csv", "reconstruction.csv"})
    CHECK(slurp(fs::path(ta.output.directory) / name) == slurp(fs::path(tb.output.directory) / name));
}

TEST_CASE("Fourier transform command round trip") {
  const RunConfig c = config_for(
      "transform_fourier", R"({"command": "transform", "initial": {"width": 1, "center": [0.5, -1, 0.25], "chi": [1, 2, -1, 0.5]},
                               "output": {"formats": ["csv", "bin"]}})");
  CHECK(run_command(c).status == 0);
  const fs::path dir(c.output.directory);
  const json summary = read_json(dir / "transform_summary.json");
  CHECK(summary["round_trip"]["max_abs_error"].get<double>() < 1e-9);
  CHECK(summary["parseval_relative_error"].get<double>() < 1e-8);
  for (const char* name : {"input.csv", "input.bin", "spectrum.csv", "reconstruction.csv", "reconstruction.bin"})
    CHECK(fs::exists(dir / name));
}

TEST_CASE("Hankel transform command round trip") {
  const RunConfig c = config_for(
      "transform_hankel",
      R"({"command": "transform", "transform": "hankel", "initial": {"width": 6, "omega": [1, 0], "chi": [1, 0.3, -0.5, 0.8]}})");
  CHECK(run_command(c).status == 0);
  const json summary = read_json(fs::path(c.output.directory) / "transform_summary.json");
  CHECK(summary["round_trip"]["relative_l2_error"].get<double>() < 1e-4);
  CHECK(summary["tail_fraction"].get<double>() < 1e-8);
  CHECK_FALSE(summary.contains("warning"));
}

TEST_CASE("single-mode input gives one dominant spectral entry") {
  const RunConfig f = config_for(
      "sparsity_fourier", R"({"command": "transform", "initial": {"type": "single-mode", "p": [2, -1, 3], "chi": [0.5, 1, 0, -1]}})");
  run_command(f);
  const json fs_summary = read_json(fs::path(f.output.directory) / "transform_summary.json");
  CHECK(fs_summary["sparsity"]["entries_above_1e-8_of_max"].get<int>() == 1);
  CHECK(fs_summary["sparsity"]["dominant_index"].get<std::size_t>() == (10u * 16 + 7) * 16 + 11);

  // The discrete Hankel kernel is not exactly orthogonal; neighbouring
  // momentum nodes keep a few percent of the peak.
  const RunConfig h = config_for(
      "sparsity_hankel",
      R"({"command": "spectrum", "transform": "hankel", "initial": {"type": "single-mode", "p": 30, "l": 2, "mu": -1}})");
  run_command(h);
  const json hs = read_json(fs::path(h.output.directory) / "spectrum_summary.json");
  const std::size_t modes = 5 * 6;
  CHECK(hs["sparsity"]["dominant_index"].get<std::size_t>() == 30 * modes + mode_index(AngularMode{2, -1}));
  CHECK(hs["sparsity"]["runner_up_ratio"].get<double>() < 0.1);
}

TEST_CASE("spectrum command warns about truncated fields") {
  const RunConfig c = config_for(
      "spectrum_tail", R"({"command": "spectrum", "transform": "hankel", "initial": {"width": 30, "omega": [1, 0]}})");
  run_command(c);
  const json summary = read_json(fs::path(c.output.directory) / "spectrum_summary.json");
  CHECK(summary["tail_fraction"].get<double>() > 1e-8);
  CHECK(summary.contains("warning"));
}
