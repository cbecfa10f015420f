#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "darksector/cli.hpp"
#include "darksector/json_support.hpp"
#include "darksector/svg.hpp"
#include "support.hpp"

using namespace darksector;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_with(cli::RunConfig config) {
  std::ostringstream out, err;
  int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config_for(cli::Command command, const std::string& scene) {
  cli::RunConfig c;
  c.command = command;
  c.scene_path = test::data_path("scenes/" + scene);
  c.seeds = 1024;
  return c;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / ("darksector_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int shell(const std::string& args) {
  int status = std::system((std::string(DARKSECTOR_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run_with(config_for(cli::Command::Validate, "toy.json")).code == cli::kOk);
  auto bad = run_with(config_for(cli::Command::Validate, "crossing.json"));
  CHECK(bad.code == cli::kInvalidScene);
  CHECK(bad.out.find("mirrors-intersect") != std::string::npos);
  CHECK(run_with(config_for(cli::Command::Map, "crossing.json")).code == cli::kInvalidScene);
  CHECK(run_with(config_for(cli::Command::Validate, "missing.json")).code == cli::kParseError);
}

TEST_CASE("parameter bounds") {
  auto c = config_for(cli::Command::Map, "toy.json");
  c.seeds = 4;
  CHECK(run_with(c).code == cli::kParseError);
  c = config_for(cli::Command::Map, "toy.json");
  c.eps_b = 0.01;
  CHECK(run_with(c).code == cli::kParseError);
  c = config_for(cli::Command::Trace, "toy.json");
  CHECK(run_with(c).code == cli::kParseError);
  c = config_for(cli::Command::Map, "single_mirror.json");
  c.radius = 0.5;
  CHECK(run_with(c).code == cli::kInvalidScene);
}

TEST_CASE("parse_pi_multiple") {
  CHECK(cli::parse_pi_multiple("3/2") == RationalTurn(3, 2));
  CHECK(cli::parse_pi_multiple("-1/2") == RationalTurn(3, 2));
  CHECK(cli::parse_pi_multiple("1") == RationalTurn(1, 1));
  CHECK_THROWS_AS(cli::parse_pi_multiple("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_pi_multiple("x"), std::invalid_argument);
}

TEST_CASE("trace report") {
  auto c = config_for(cli::Command::Trace, "single_mirror.json");
  c.theta_pi = RationalTurn(3, 2);
  auto r = run_with(c);
  REQUIRE(r.code == cli::kOk);
  auto doc = Json::parse(r.out);
  CHECK(doc["status"] == "escaped");
  CHECK(doc["exit_dir_pi"] == "1/2");
  CHECK(doc["itinerary"][0]["side"] == "+");
}

TEST_CASE("sectors on the single mirror") {
  fs::path dir = scratch_dir();
  auto c = config_for(cli::Command::Sectors, "single_mirror.json");
  c.out_path = dir / "a.json";
  c.svg_path = dir / "a.svg";
  auto r = run_with(c);
  REQUIRE(r.code == cli::kOk);
  auto doc = Json::parse(slurp(dir / "a.json"));
  REQUIRE(doc["sectors"].size() == 1);
  CHECK(test::arc_gap(doc["sectors"][0]["arc"]["start"].get<double>(), 5 * kPi / 4) <= 1e-8);
  CHECK(test::arc_gap(doc["sectors"][0]["arc"]["end"].get<double>(), 7 * kPi / 4) <= 1e-8);
  CHECK(doc["certified"] == true);
  std::string svg = slurp(dir / "a.svg");
  CHECK(count(svg, "class=\"dark-sector\"") == 1);
  CHECK(count(svg, "class=\"mirror\"") == 1);

  c.out_path = dir / "b.json";
  c.svg_path = dir / "b.svg";
  REQUIRE(run_with(c).code == cli::kOk);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));

  // Render from the saved report reproduces the shaded sector.
  auto rc = config_for(cli::Command::Render, "single_mirror.json");
  rc.report_path = dir / "a.json";
  auto rendered = run_with(rc);
  CHECK(rendered.code == cli::kOk);
  CHECK(count(rendered.out, "class=\"dark-sector\"") == 1);
  fs::remove_all(dir);
}

TEST_CASE("sectors with nothing to certify") {
  fs::path dir = scratch_dir();
  std::ofstream(dir / "far.json") << R"({"mirrors":[{"anchor":[0,0],"length":0.1,"angle":{"num":0,"den":1}}],)"
                                  << R"("source":[5,0]})";
  auto c = config_for(cli::Command::Sectors, "toy.json");
  c.scene_path = dir / "far.json";
  auto r = run_with(c);
  // A mirror edge-on to the source is never struck: f is the identity.
  CHECK(r.code == cli::kNoDarkSector);
  auto doc = Json::parse(r.out);
  CHECK(doc.contains("decomposition"));
  CHECK(doc["certified"] == false);
  fs::remove_all(dir);
}

TEST_CASE("unfold report") {
  auto r = run_with(config_for(cli::Command::Unfold, "toy.json"));
  REQUIRE(r.code == cli::kOk);
  auto doc = Json::parse(r.out);
  CHECK(doc["genus"] == 1);
  CHECK(doc["euler_characteristic"] == 0);
  CHECK(doc["zeros"].size() == 8);
  CHECK(doc["poles"].size() == 4);
}

TEST_CASE("render_svg element counts and determinism") {
  Scene toy = test::toy_scene();
  auto k = enclosing_circle(toy);
  std::string svg = render_svg(toy, k);
  CHECK(count(svg, "class=\"mirror\"") == 2);
  CHECK(count(svg, "class=\"source\"") == 1);
  CHECK(count(svg, "class=\"enclosing-circle\"") == 1);
  CHECK(count(svg, "class=\"dark-sector\"") == 0);
  CHECK(svg == render_svg(toy, k));
  CHECK(svg.rfind("<?xml", 0) == 0);
}

TEST_CASE("command-line front end") {
  const std::string toy = test::data_path("scenes/toy.json");
  CHECK(shell("validate --scene " + toy) == 0);
  CHECK(shell("validate --scene " + test::data_path("scenes/crossing.json")) == 2);
  CHECK(shell("trace --scene " + toy + " --theta-pi 1/3") == 0);
  CHECK(shell("trace --scene " + toy + " --theta-pi 1/0") == 3);
  CHECK(shell("map --scene " + toy + " --seeds abc") == 3);
  CHECK(shell("frobnicate --scene " + toy) == 3);
  CHECK(shell("--help") == 0);
}
