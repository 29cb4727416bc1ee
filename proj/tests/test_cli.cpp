#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sphconv/cli.hpp"
#include "sphconv/constructors.hpp"
#include "sphconv/io.hpp"

using namespace sphconv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sphconv");
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "sphconv_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cap of radius pi/4 checks as constant width") {
  const auto path = tmp("cap.body.json");
  REQUIRE(run({"construct", "cap", "--center", "0,0,1", "--rho", "0.7853981633974483", "-o", path}).code == 0);
  const auto r = run({"check", "constant-width", path});
  CHECK(r.code == 0);
  CHECK(io::json::parse(r.out)["pass"] == true);
  CHECK(run({"check", "constant-diameter", path}).code == 0);
  CHECK(run({"check", "reduced", path}).code == 0);
}

TEST_CASE("random polygon fails the constant-width check") {
  const auto path = tmp("random.body.json");
  REQUIRE(run({"--seed", "7", "construct", "random", "--n", "9", "--max-diam", "1.5", "-o", path}).code == 0);
  CHECK(run({"check", "constant-width", path}).code == 1);
}

TEST_CASE("constant gamma is self-dual") {
  const auto gamma = tmp("one.gamma.json"), shape = tmp("one.wulff.json");
  REQUIRE(run({"wulff", "build", "--constant", "1", "--save-gamma", gamma, "-o", shape}).code == 0);
  CHECK(run({"wulff", "self-dual", gamma}).code == 0);
  CHECK(run({"wulff", "self-dual", shape}).code == 0);
  const auto sq = tmp("square.wulff.json");
  REQUIRE(run({"wulff", "build", "--polygon", "1,-1;1,1;-1,1;-1,-1", "-o", sq}).code == 0);
  CHECK(run({"wulff", "self-dual", sq}).code == 1);
  const auto induced = tmp("square.body.json");
  CHECK(run({"wulff", "induce", sq, "-o", induced}).code == 0);
  CHECK(io::load_body(induced).vertices().size() == 4);
}

TEST_CASE("constructors and round trip from the command line") {
  const auto tri = tmp("tri.body.json");
  REQUIRE(run({"construct", "cd-triangle", "--v1", "0.3,0,1", "--v2", "-0.2,0.25,1", "--v3", "-0.1,-0.3,1", "-o", tri})
              .code == 0);
  CHECK(run({"--tol", "1e-4", "roundtrip", tri}).code == 0);
  CHECK(run({"wulff", "project", tri, "-o", tmp("tri.wulff.json")}).code == 0);

  const auto odd = tmp("odd.body.json");
  REQUIRE(run({"construct", "oddgon", "--n", "5", "--thickness", "1.2", "-o", odd}).code == 0);
  const auto rep = run({"analyze", odd});
  REQUIRE(rep.code == 0);
  const auto doc = io::json::parse(rep.out);
  CHECK(doc["thickness"].get<double>() == doctest::Approx(1.2).epsilon(1e-8));

  CHECK(run({"construct", "cd-oddgon", "--vertices", "0.3,0,1;0.1,0.3,1;-0.25,0.2,1;-0.25,-0.2,1;0.1,-0.3,1"}).code ==
        0);
}

TEST_CASE("analyze matches the library") {
  const auto path = tmp("cap2.body.json");
  io::save_body(path, cap(UnitVec(0, 0, 1), 0.5));
  const auto doc = io::json::parse(run({"--samples", "180", "analyze", path}).out);
  const auto c = classify(io::load_body(path), kDefaultTolerance, 180);
  CHECK(doc["thickness"].get<double>() == c.thickness);
  CHECK(doc["diameter"].get<double>() == c.diameter);
}

TEST_CASE("render is deterministic") {
  const auto body = tmp("cap3.body.json"), a = tmp("a.svg"), b = tmp("b.svg");
  io::save_body(body, cap(UnitVec(0, 0, 1), 0.5));
  REQUIRE(run({"render", body, "--view", "1,0,1", "--diameter", "-o", a}).code == 0);
  REQUIRE(run({"render", body, "--view", "1,0,1", "--diameter", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("overlay") != std::string::npos);
}

TEST_CASE("usage and validation errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"construct", "oddgon", "--n", "4", "--thickness", "1"}).code == 2);
  CHECK(run({"construct", "cap", "--rho", "3"}).code == 2);
  CHECK(run({"check", "constant-width", tmp("missing.json")}).code == 2);
  const auto r = run({"construct", "cap", "--center", "a,b,c", "--rho", "0.3"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).code == 0);
}
