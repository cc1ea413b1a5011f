#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string out_path = "cli_test_output.txt";
  const std::string cmd =
      std::string(HXCTL_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = -1;
#ifdef _WIN32
  code = status;
#else
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
#endif
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return RunResult{code, ss.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate: valid structure exits 0") {
  auto r = run("validate --structure k3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "valid"));
  auto f = run(std::string("validate --structure ") + DATA_DIR "/k3.json");
  CHECK(f.exit_code == 0);
}

TEST_CASE("validate: broken structure exits 1 and names the axiom") {
  const std::string path = "cli_broken.json";
  {
    // z2 with the addition row 1+1 = {1}: 1 loses its inverse.
    std::ofstream out(path);
    out << R"({"name":"broken","m":2,"n":2,"elements":["0","1"],
               "zero":"0","one":"1",
               "f":[{"args":["0","0"],"value":["0"]},
                    {"args":["0","1"],"value":["1"]},
                    {"args":["1","1"],"value":["1"]}],
               "g":[{"args":["0","0"],"value":"0"},
                    {"args":["0","1"],"value":"0"},
                    {"args":["1","1"],"value":"1"}]})";
  }
  auto r = run("validate --structure " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "unique-inverse"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("validate").exit_code == 2);                     // missing --structure
  CHECK(run("validate --structure nosuch.json").exit_code == 2);
  CHECK(run("radical --structure k3").exit_code == 2);       // missing --ideal
  CHECK(run("classify --structure k3 --ideal \"{0,u}\" --phi bogus --delta delta0 "
            "--mulset \"{1}\"").exit_code == 2);
  CHECK(run("theorems --only T99").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("ideals: lists the lattice with flags") {
  auto r = run("ideals --structure z6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "4 hyperideal"));
  CHECK(contains(r.output, "prime"));
  CHECK(contains(r.output, "maximal"));
}

TEST_CASE("radical: both oracles, frozen value") {
  auto r = run("radical --structure z8 --ideal \"{0}\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "{0,2,4,6}"));
}

TEST_CASE("classify: table-driven structure") {
  auto r = run("classify --structure k3 --ideal \"{0,u}\" --phi phi0 "
               "--delta delta1 --mulset \"{1}\"");
  CHECK(r.exit_code == 0);
  auto v = run("classify --structure k3 --ideal \"{0,u}\" --phi phi1 "
               "--delta delta0 --mulset \"{1}\"");
  CHECK(v.exit_code == 0);
  CHECK(contains(v.output, "vacuous"));
}

TEST_CASE("classify: modular witness mode exits 1 on a refuted instance") {
  auto r = run("classify --structure \"modular(5,25,4,3)\" --ideal \"<5^5>\" "
               "--phi pow:5 --delta delta0");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "fails"));
}

TEST_CASE("classify: unit-interval grid mode") {
  auto r = run("classify --structure unit-interval-max --ideal \"[0,1/2]\" "
               "--phi phiW --delta delta0 --mulset \"(0,1/10]\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "holds_on_sample"));
}

TEST_CASE("product and localize emit loadable structure documents") {
  const std::string path = "cli_prod.json";
  auto r = run("product --structure z2 --structure2 z3 --report " + path);
  CHECK(r.exit_code == 0);
  auto back = run("validate --structure " + path);
  std::remove(path.c_str());
  CHECK(back.exit_code == 0);
  auto l = run("localize --structure z6 --mulset \"{1,5}\"");
  CHECK(l.exit_code == 0);
}

TEST_CASE("theorems: scoped sweep is clean and --json emits a report") {
  const std::string path = "cli_sweep.json";
  auto r = run("theorems --structure k3 --only T01 --json --report " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  CHECK(contains(ss.str(), "\"theorem-sweep\""));
  CHECK(contains(ss.str(), "\"T01\""));
  CHECK(contains(ss.str(), "\"total_violations\": 0"));
}
