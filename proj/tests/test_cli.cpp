#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(AMWP_CLI_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace

TEST_CASE("catalog listing and show") {
  RunResult list = run("catalog list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("STU") != std::string::npos);
  CHECK(list.output.find("delta_P11128") != std::string::npos);

  RunResult show = run("catalog show V12_11136");
  CHECK(show.exit_code == 0);
  CHECK(show.output.find("9*y3^3") != std::string::npos);
}

TEST_CASE("metric golden text") {
  RunResult r = run("metric --catalog STU");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("det(g) = (27*y1*y2 + 54*y1*y3 + 27*y2*y3 + 27*y3^2)") !=
        std::string::npos);
  CHECK(r.output.find("kappa=1") != std::string::npos);
  CHECK(r.output.find("s_normalization=24") != std::string::npos);

  RunResult at = run("metric --catalog STU --at 1,1,1");
  CHECK(at.exit_code == 0);
  CHECK(at.output.find("positive_definite = true") != std::string::npos);
}

TEST_CASE("scalar subcommand") {
  RunResult at = run("scalar --catalog STU --at 1,1,1");
  CHECK(at.exit_code == 0);
  CHECK(at.output.find("-1378/375") != std::string::npos);

  RunResult ray = run("scalar --catalog STU --ray s^2,s,s --samples 10,100");
  CHECK(ray.exit_code == 0);
  CHECK(ray.output.find("s,y1,y2,y3,f,scalar,scalar_float") != std::string::npos);
  CHECK(ray.output.find("24037/48") != std::string::npos);
}

TEST_CASE("verify battery exit codes") {
  RunResult ok = run("verify --suite lemma3_5 --seed 7 --n 5");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("lemma3_5: 6/6 pass") != std::string::npos);

  RunResult thm = run("verify --suite thm3_7 --seed 9 --n 4");
  CHECK(thm.exit_code == 0);

  RunResult unknown = run("verify --suite bogus");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
  RunResult r = run("metric --input /nonexistent/file.json");
  CHECK(r.exit_code == 2);

  std::ofstream bad("bad_cubic.json");
  bad << R"({"r": 3, "mode": "monomials",
             "terms": [{"exponents": [2,0,0], "value": "1"}]})";
  bad.close();
  RunResult schema = run("metric --input bad_cubic.json");
  CHECK(schema.exit_code == 2);
  CHECK(schema.output.find("error:") != std::string::npos);
  std::remove("bad_cubic.json");
}

TEST_CASE("polytope report") {
  RunResult r = run("polytope --catalog delta_P11128 --action dual");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-12") != std::string::npos);

  RunResult pts = run("polytope --catalog delta_P11128_polar --action points");
  CHECK(pts.exit_code == 0);
  CHECK(pts.output.find("lattice_points") != std::string::npos);
}

TEST_CASE("outputs are deterministic for fixed command and seed") {
  RunResult a = run("scalar --catalog STU --ray s^2,s,s --samples 10,100 --seed 3");
  RunResult b = run("scalar --catalog STU --ray s^2,s,s --samples 10,100 --seed 3");
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
}

TEST_CASE("perturbation experiments through the CLI") {
  std::ofstream prep("prep_stu.json");
  prep << R"({
    "cubic": {"r": 3, "mode": "monomials",
              "terms": [{"exponents": [3,0,0], "value": "8"},
                        {"exponents": [2,0,1], "value": "12"},
                        {"exponents": [2,1,0], "value": "6"},
                        {"exponents": [1,0,2], "value": "6"},
                        {"exponents": [1,1,1], "value": "6"}]},
    "tail": [{"m": [1,0,0], "c": [0.01, 0]}]
  })";
  prep.close();
  RunResult p = run("perturb --input prep_stu.json --experiment periodicity");
  CHECK(p.exit_code == 0);
  CHECK(p.output.find("max_deviation") != std::string::npos);
  std::remove("prep_stu.json");
}
