#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orbitkit/cli.hpp"

using nlohmann::json;
using orbitkit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ORBITKIT_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("orbit command examples") {
  const auto a1 = invoke({"orbit", "--series", "A1", "--lambda", "1/2,-1/2", "--lattice", "sc"});
  REQUIRE(a1.code == 0);
  const auto r = json::parse(a1.out);
  CHECK(r["regular"] == true);
  CHECK(r["dim_orbit"] == 2);
  CHECK(r["verdict"]["integral"] == true);
  CHECK(r["verdict"]["borel_weil"] == "nonzero_irreducible");
  CHECK(r["kks_blocks"].size() == 1);
  for (const char* key : {"lambda", "series", "singular_roots", "regular", "dim_orbit", "dim_stabilizer",
                          "positive_system", "b_roots", "kks_blocks", "certificates"})
    CHECK(r.contains(key));

  const auto point = json::parse(invoke({"orbit", "--series", "A2", "--lambda", "0,0,0"}).out);
  CHECK(point["dim_orbit"] == 0);
  CHECK(point["verdict"]["integral"] == true);
  CHECK(point["verdict"]["dominant_rep"] == json::array({"0", "0", "0"}));

  const auto adj = json::parse(invoke({"orbit", "--series", "A2", "--lambda", "2/3,-1/3,-1/3", "--lattice", "adjoint"}).out);
  CHECK(adj["verdict"]["integral"] == false);
  CHECK(adj["verdict"]["borel_weil"] == "zero_section_space");

  const auto fund = json::parse(invoke({"orbit", "--series", "A2", "--lambda", "1,0", "--basis", "fundamental"}).out);
  CHECK(fund["lambda"] == json::array({"2/3", "-1/3", "-1/3"}));

  const auto projected = json::parse(invoke({"orbit", "--series", "A1", "--lambda", "1,0"}).out);
  CHECK(projected["warnings"].size() == 1);
  CHECK(projected["lambda"] == json::array({"1/2", "-1/2"}));
}

TEST_CASE("JSON output round-trips and is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"orbit", "--series", "B3", "--lambda", "1,1/2,0", "--lattice", "adjoint"},
      {"orbit", "--series", "A2xT1", "--lambda", "1,-1,0,5/2"},
      {"cech", "h", "--nerve", data("tetrahedron.nerve"), "--k", "2"},
      {"cech", "chern", "--nerve", data("tetrahedron.nerve"), "--cocycle", data("face.cocycle")},
  };
  for (const auto& cmd : commands) {
    const auto first = invoke(cmd);
    REQUIRE(first.code == 0);
    CHECK(json::parse(first.out).dump(2) + "\n" == first.out);
    CHECK(invoke(cmd).out == first.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"orbit", "--lambda", "1,-1"}).code == 2);
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1,-1", "--output", "xml"}).code == 2);
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1/0,1"}).code == 3);
  CHECK(invoke({"orbit", "--series", "E8", "--lambda", "1"}).code == 3);
  CHECK(invoke({"orbit", "--series", "A2", "--lambda", "1,-1"}).code == 2);
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1,-1", "--lattice", "nope"}).code == 2);
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1,-1", "--lattice", "custom:/nonexistent/file"}).code == 3);

  ::setenv("ORBITKIT_WEYL_CAP", "10", 1);
  const auto capped = invoke({"orbit", "--series", "B3", "--lambda", "1,0,0"});
  CHECK(capped.code == 4);
  CHECK(json::parse(capped.err)["error"]["kind"] == "cap_exceeded");
  ::setenv("ORBITKIT_WEYL_CAP", "abc", 1);
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1,-1"}).code == 2);
  ::unsetenv("ORBITKIT_WEYL_CAP");

  const auto bad_nerve = write_temp("orbitkit_bad.nerve", "0 1\n# fine\n1 x\n");
  const auto r = invoke({"cech", "h", "--nerve", bad_nerve, "--k", "0", "--output", "text"});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(invoke({"cech", "h", "--nerve", "/nonexistent", "--k", "0"}).code == 3);
}

TEST_CASE("custom lattice files") {
  const auto good = write_temp("orbitkit_sc.json", R"([["1/2", "-1/2"]])");
  const auto r = json::parse(invoke({"orbit", "--series", "A1", "--lambda", "1/2,-1/2", "--lattice", "custom:" + good}).out);
  CHECK(r["verdict"]["integral"] == true);
  CHECK(r["verdict"]["lattice"] == "custom");
  const auto bad = write_temp("orbitkit_bad.json", R"([["1/4", "-1/4"]])");
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1,-1", "--lattice", "custom:" + bad}).code == 3);
  const auto junk = write_temp("orbitkit_junk.json", "[1, 2");
  CHECK(invoke({"orbit", "--series", "A1", "--lambda", "1,-1", "--lattice", "custom:" + junk}).code == 3);
}

TEST_CASE("cech command examples") {
  const auto sphere = invoke({"cech", "h", "--nerve", data("tetrahedron.nerve"), "--k", "2", "--ring", "z", "--output", "text"});
  CHECK(sphere.code == 0);
  CHECK(sphere.out == "H^2(nerve; Z) = Z\n");
  const auto circle = json::parse(invoke({"cech", "h", "--nerve", data("triangle.nerve"), "--k", "1", "--ring", "q"}).out);
  CHECK(circle["free_rank"] == 1);
  CHECK(circle["group"] == "Q");
  const auto zero = json::parse(invoke({"cech", "chern", "--nerve", data("tetrahedron.nerve"), "--cocycle", data("zero.cocycle")}).out);
  CHECK(zero["zero"] == true);
  const auto face = invoke({"cech", "chern", "--nerve", data("tetrahedron.nerve"), "--cocycle", data("face.cocycle"), "--output", "text"});
  CHECK((face.out == "class: free (1)\n" || face.out == "class: free (-1)\n"));

  const auto full = write_temp("orbitkit_full.nerve", "0 1 2 3\n");
  const auto invalid = invoke({"cech", "chern", "--nerve", full, "--cocycle", data("face.cocycle")});
  CHECK(invalid.code == 3);
  CHECK(json::parse(invalid.out)["witness"] == json::array({0, 1, 2, 3}));
}

TEST_CASE("audit commands") {
  CHECK(invoke({"audit", "algebra", "--n", "4"}).code == 0);
  CHECK(invoke({"audit", "roots", "--n", "3"}).code == 0);
  CHECK(invoke({"audit", "kks", "--n", "3", "--lambda", "2/3,-1/3,-1/3"}).code == 0);
  CHECK(invoke({"audit", "kks", "--n", "2", "--lambda", "1", "--basis", "fundamental"}).code == 0);
  const auto cal = invoke({"audit", "calibrate"});
  CHECK(cal.code == 0);
  CHECK(json::parse(cal.out)["frozen"] == "2");
  CHECK(invoke({"audit", "roots", "--n", "9"}).code == 2);
}

TEST_CASE("text output") {
  const auto r = invoke({"orbit", "--series", "A2", "--lambda", "2/3,-1/3,-1/3", "--output", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim orbit: 4") != std::string::npos);
  CHECK(r.out.find("integral: yes") != std::string::npos);
  const auto e = invoke({"orbit", "--series", "A2", "--lambda", "1,-1", "--output", "text"});
  CHECK(e.code == 2);
  CHECK(e.err.rfind("orbitkit: dimension_mismatch:", 0) == 0);
}
