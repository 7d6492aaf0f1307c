#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "torusjump/chaincx.hpp"

using namespace tjtest;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("torusjump-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the installed binary through the shell; `env` is prepended verbatim
// (e.g. "TORUSJUMP_CAPS=max_basis=2").
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  auto dir = scratch_dir();
  auto out = dir / ("out" + std::to_string(counter) + ".txt");
  auto err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = env + (env.empty() ? "" : " ") + TORUSJUMP_CLI_PATH +
                    " " + args + " >" + out.string() + " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::filesystem::path write_file(const std::string& name,
                                 const std::string& body) {
  auto p = scratch_dir() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("generate emits a loadable complex") {
  RunResult r = run_cli("generate torus:2 --coeff zz");
  REQUIRE(r.code == 0);
  FreeComplex c = complex_from_json(nlohmann::json::parse(r.out));
  CHECK(c == koszul_torus(2, zz()));

  RunResult w = run_cli("generate wedge:3");
  REQUIRE(w.code == 0);
  CHECK(complex_from_json(nlohmann::json::parse(w.out)) ==
        wedge_of_circles(3, qq()));

  RunResult f = run_cli("generate surface:2 --coeff f5");
  REQUIRE(f.code == 0);
  CHECK(complex_from_json(nlohmann::json::parse(f.out)) ==
        surface_complex(2, fp(5)));
}

TEST_CASE("jumps reports the torus loci in text form") {
  RunResult r = run_cli("jumps torus:2");
  CHECK(r.code == 0);
  CHECK(r.out.find("ring: QQ[t1,t2]  degrees 0..2") != std::string::npos);
  CHECK(r.out.find("note: varieties, not ideals, are the verified objects") !=
        std::string::npos);
  CHECK(r.out.find("[t1 - 1]") != std::string::npos);
  CHECK(r.out.find("dim 0, codim 2") != std::string::npos);
}

TEST_CASE("jumps flags whole-torus degrees") {
  RunResult r = run_cli("jumps wedge:2");
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 1: whole torus") != std::string::npos);
}

TEST_CASE("jumps json output is machine readable") {
  RunResult r = run_cli("jumps torus:2 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["lo"] == 0);
  CHECK(j["hi"] == 2);
  REQUIRE(j["loci"].size() == 3);
  CHECK(j["loci"][0]["degree"] == 0);
  CHECK(j["loci"][0]["codim"] == 2);
  CHECK(j["loci"][0]["whole_torus"] == false);
  std::vector<std::string> gens = j["loci"][0]["generators"];
  CHECK(std::find(gens.begin(), gens.end(), "t1 - 1") != gens.end());

  nlohmann::json w =
      nlohmann::json::parse(run_cli("jumps wedge:2 --format json").out);
  CHECK(w["loci"][1]["whole_torus"] == true);
  CHECK(w["loci"][1]["generators"].empty());
}

TEST_CASE("jumps accepts twisted and file specs") {
  RunResult r = run_cli("jumps twist:torus:1,1/2");
  CHECK(r.code == 0);
  CHECK(r.out.find("[t1 - 2]") != std::string::npos);

  auto path = write_file("fox.json",
                         "{\"generators\": 2, \"relators\": [\"abAB\"]}");
  RunResult f = run_cli("jumps fox:" + path.string());
  CHECK(f.code == 0);
  CHECK(f.out.find("degrees 0..2") != std::string::npos);

  RunResult p5 = run_cli("jumps wedge:2 --coeff fp:5");
  CHECK(p5.code == 0);
  CHECK(p5.out.find("F5[t1,t2]") != std::string::npos);
}

TEST_CASE("verify-propagation passes the torus and fails the surface") {
  RunResult ok = run_cli("verify-propagation torus:2 --mode space:2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("mode: space(2)") != std::string::npos);
  CHECK(ok.out.find("(vi) pass: signed Euler characteristic = 0") !=
        std::string::npos);
  CHECK(ok.out.find("overall: pass") != std::string::npos);

  RunResult bad = run_cli("verify-propagation surface:2 --mode space:2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(vi) FAIL") != std::string::npos);
  CHECK(bad.out.find("-2") != std::string::npos);

  RunResult perv = run_cli("verify-propagation torus:2");
  CHECK(perv.code == 0);
  CHECK(perv.out.find("mode: perverse") != std::string::npos);
}

TEST_CASE("verify-propagation consumes component files") {
  auto path = write_file("comp.json",
                         "{\"components\": [[\"t1 - 1\", \"t2 - 1\"]]}");
  RunResult r = run_cli("verify-propagation torus:2 --mode space:2 "
                        "--components " +
                        path.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("(iii) pass") != std::string::npos);
  CHECK(r.out.find("(iv_purity) pass") != std::string::npos);

  auto wrong = write_file("comp_bad.json",
                          "{\"components\": [[\"t1 - 1\"]]}");
  RunResult b = run_cli("verify-propagation torus:2 --mode space:2 "
                        "--components " +
                        wrong.string());
  CHECK(b.code == 1);
  CHECK(b.out.find("(iii) FAIL") != std::string::npos);
}

TEST_CASE("abelian-duality verdicts and exit codes") {
  RunResult ok = run_cli("abelian-duality torus:2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdict: abelian-duality of dimension 2") !=
        std::string::npos);
  CHECK(ok.out.find(
            "caveat: torsion-freeness certified only for the primes tested") !=
        std::string::npos);
  CHECK(ok.out.find("primes tested: 2 3 5 7 11 13") != std::string::npos);

  RunResult no = run_cli("abelian-duality surface:2");
  CHECK(no.code == 1);
  CHECK(no.out.find("verdict: no") != std::string::npos);
  CHECK(no.out.find("witness: field QQ, degree 1") != std::string::npos);

  RunResult part = run_cli("abelian-duality torus:1 --partial");
  CHECK(part.code == 0);
  CHECK(part.out.find("partial") != std::string::npos);
}

TEST_CASE("oracle agrees and is deterministic") {
  RunResult a = run_cli("oracle torus:2");
  CHECK(a.code == 0);
  CHECK(a.out.find("points tested: 50") != std::string::npos);
  CHECK(a.out.find("mismatches: 0") != std::string::npos);
  RunResult b = run_cli("oracle torus:2");
  CHECK(a.out == b.out);

  RunResult w = run_cli("oracle wedge:2 --coeff f5");
  CHECK(w.code == 0);
  CHECK(w.out.find("F5^2") != std::string::npos);
  CHECK(w.out.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("usage and resource errors exit 2 with no partial report") {
  RunResult r = run_cli("jumps nosuchfile.json");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("cannot open") != std::string::npos);

  RunResult none = run_cli("");
  CHECK(none.code == 2);

  RunResult sub = run_cli("frobnicate torus:2");
  CHECK(sub.code == 2);

  RunResult badspec = run_cli("jumps torus:zero");
  CHECK(badspec.code == 2);
  CHECK(badspec.out.empty());
}

TEST_CASE("caps from the environment abort cleanly") {
  RunResult r = run_cli("jumps torus:2", "TORUSJUMP_CAPS=max_basis=2");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("basis size cap 2 exceeded") != std::string::npos);

  RunResult ok = run_cli("jumps torus:2", "TORUSJUMP_CAPS=max_basis=1000");
  CHECK(ok.code == 0);

  RunResult flag = run_cli("jumps torus:2 --max-basis 2");
  CHECK(flag.code == 2);
  CHECK(flag.err.find("basis size cap") != std::string::npos);
}
