#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "skewlines/cli.hpp"
#include "skewlines/io.hpp"

using namespace skewlines;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out); }
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "skewlines_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kTwoSkew = R"({"pair_distance": 1.0, "lines": [
  {"point": [0, 0, 0], "direction": [1, 0, 0]},
  {"point": [0, 0, 1], "direction": [0, 1, 0]}]})";

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run_cli({"verify", write_file("ok.json", kTwoSkew)}).code == cli::kHolds);

  const Outcome far = run_cli({"verify", write_file("far.json", R"({"pair_distance": 1.0, "lines": [
    {"point": [0, 0, 0], "direction": [1, 0, 0]},
    {"point": [0, 0, 2], "direction": [0, 1, 0]}]})")});
  CHECK(far.code == cli::kViolation);
  CHECK(far.json()["max_abs_deviation"].get<double>() == doctest::Approx(1.0));

  const Outcome crossing = run_cli({"verify", write_file("cross.json", R"({"pair_distance": 1.0, "lines": [
    {"point": [0, 0, 0], "direction": [1, 0, 0]},
    {"point": [0, 0, 0], "direction": [0, 1, 0]}]})")});
  CHECK(crossing.code == cli::kViolation);
  CHECK(crossing.json()["pair_classes"][0] == "intersecting");

  CHECK(run_cli({"verify", write_file("bad.json", "{\"lines\": [")}).code == cli::kInvalidInput);
  CHECK(run_cli({"verify", scratch("missing.json").string()}).code == cli::kInvalidInput);
  CHECK(run_cli({"verify"}).code == cli::kInvalidInput);
  CHECK(run_cli({}).code == cli::kInvalidInput);
  CHECK(run_cli({"frobnicate"}).code == cli::kInvalidInput);
}

TEST_CASE("solve output re-verifies") {
  const std::string out_path = scratch("solve3.json").string();
  const Outcome r = run_cli({"solve", "--n", "3", "--seed", "1", "--out", out_path});
  REQUIRE(r.code == cli::kHolds);
  const Json j = r.json();
  CHECK(j["status"] == "converged");
  CHECK(j["report"]["passed"] == true);
  CHECK(j["configuration"]["lines"].size() == 3);
  CHECK(run_cli({"verify", out_path}).code == cli::kHolds);

  const Outcome again = run_cli({"solve", "--n", "3", "--seed", "1"});
  CHECK(again.out == r.out);
}

TEST_CASE("five-line solve has no monochromatic K5") {
  const Outcome r = run_cli({"solve", "--n", "5", "--seed", "1", "--multistarts", "100"});
  REQUIRE(r.code == cli::kHolds);
  const Json report = r.json()["report"];
  CHECK(report["mono_clique_5"].is_null());
  CHECK(report["mono_k5_any_orientation"] == false);
}

TEST_CASE("solve rejects bad options and reports non-convergence") {
  CHECK(run_cli({"solve", "--n", "1"}).code == cli::kInvalidInput);
  CHECK(run_cli({"solve", "--multistarts", "0"}).code == cli::kInvalidInput);
  CHECK(run_cli({"solve", "--residual", "cubic"}).code == cli::kInvalidInput);
  const Outcome r = run_cli({"solve", "--n", "8", "--multistarts", "2", "--max-iter", "2"});
  CHECK(r.code == cli::kNoConvergence);
  CHECK(r.json()["status"] == "no_convergence");

  const std::string opts = write_file("opts.json", R"({"n": 3, "seed": 4, "multistarts": 50})");
  CHECK(run_cli({"solve", "--options", opts}).code == cli::kHolds);
}

TEST_CASE("graph subcommand") {
  CHECK(run_cli({"graph", "--builtin", "blr_graph_a", "--iso", "blr_canonical"}).code == cli::kHolds);
  CHECK(run_cli({"graph", "--builtin", "blr_graph_b", "--iso", "blr_canonical"}).code == cli::kHolds);
  CHECK(run_cli({"graph", "--builtin", "blr_canonical", "--find-mono", "5"}).code == cli::kHolds);

  const Outcome k4 = run_cli({"graph", "--builtin", "blr_canonical", "--find-mono", "4"});
  CHECK(k4.code == cli::kViolation);
  CHECK(k4.json()["witness"]["vertices"].size() == 4);

  CHECK(run_cli({"graph", "--builtin", "p250", "--mono-possible", "5"}).code == cli::kHolds);
  CHECK(run_cli({"graph", "--builtin", "blr_canonical", "--contains", "p250"}).code ==
        cli::kViolation);
  CHECK(run_cli({"graph", "--builtin", "example1", "--balance"}).code == cli::kViolation);

  const std::string file = write_file("g.json", to_json(builtin("blr_graph_a")).dump());
  CHECK(run_cli({"graph", file, "--iso", "blr_graph_b"}).code == cli::kHolds);
  CHECK(run_cli({"graph", file, "--builtin", "p250"}).code == cli::kInvalidInput);
  CHECK(run_cli({"graph", "--builtin", "nope"}).code == cli::kInvalidInput);
  CHECK(run_cli({"graph", "--builtin", "p250", "--balance", "--find-mono", "3"}).code ==
        cli::kInvalidInput);
}

TEST_CASE("lemma subcommand") {
  const Outcome r = run_cli({"lemma", "--n", "6", "--trials", "1000", "--seed", "7"});
  CHECK(r.code == cli::kHolds);
  CHECK(r.json()["failed"] == 0);
  CHECK(r.json()["last_signature"] == Json::array({1, 5, 0}));
  // a threshold above every eigenvalue reports all of them as zero
  const Outcome forced = run_cli({"lemma", "--n", "4", "--trials", "20", "--zero-tol", "1e30"});
  CHECK(forced.code == cli::kViolation);
  CHECK(forced.json()["failures"].size() == 10);
  CHECK(run_cli({"lemma", "--n", "1"}).code == cli::kInvalidInput);
}

TEST_CASE("paley subcommand and corrupted controls") {
  const Outcome r = run_cli({"paley"});
  CHECK(r.code == cli::kHolds);
  CHECK(r.json()["subsets_checked"] == 2380);
  CHECK(r.json()["monochromatic_k4"] == 0);
  CHECK(r.json()["residues"] == Json::array({1, 2, 4, 8, 9, 13, 15, 16}));
  CHECK(r.err.find("2380 subsets checked, no monochromatic K4") != std::string::npos);

  // the Paley graph is edge-transitive, so every single flip behaves alike
  int detected = 0;
  for (int i = 1; i <= 17; ++i) {
    for (int j = i + 1; j <= 17; ++j) {
      const Outcome c = run_cli({"paley", "--corrupt", std::to_string(i), std::to_string(j)});
      if (c.code == cli::kViolation) {
        ++detected;
        CHECK(c.json()["witness"]["vertices"].size() == 4);
      } else {
        CHECK(c.code == cli::kHolds);
      }
    }
  }
  CHECK(detected >= 1);
  CHECK((detected == 0 || detected == 136));
  CHECK(run_cli({"paley", "--corrupt", "1", "18"}).code == cli::kInvalidInput);
}

TEST_CASE("export subcommand") {
  const std::string config = write_file("export.json", kTwoSkew);
  const Outcome obj = run_cli({"export", config, "--segments", "8"});
  CHECK(obj.code == cli::kHolds);
  CHECK(obj.out.find("o line_2") != std::string::npos);

  const Outcome csv = run_cli({"export", config, "--format", "csv"});
  CHECK(csv.code == cli::kHolds);
  CHECK(csv.out.rfind("index,point_x", 0) == 0);

  const std::string path = scratch("export.obj").string();
  const Outcome to_file = run_cli({"export", config, "--out", path});
  CHECK(to_file.code == cli::kHolds);
  CHECK(std::filesystem::file_size(path) > 0);
  CHECK(to_file.json()["radius"].get<double>() == doctest::Approx(0.5));

  CHECK(run_cli({"export", config, "--format", "stl"}).code == cli::kInvalidInput);
  CHECK(run_cli({"export", config, "--radius", "-1"}).code == cli::kInvalidInput);
}
