#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HILBKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

const char* kTwoPointFixture = R"({
  "seed": 0, "n": 2, "d": 2,
  "points": [
    {"type": "simple", "coords": ["1/1", "0/1", "0/1"]},
    {"type": "simple", "coords": ["1/1", "1/1", "1/1"]}
  ]
})";

}  // namespace

TEST_CASE("chart-eqs emits the chart equation set") {
  const CliResult r = run_cli("chart-eqs --basis 1,x --vars x,y");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("equations").size() == 3);
  CHECK(j.at("basis").size() == 2);
  CHECK(j.at("border").size() == 3);
  CHECK(j.at("space") == "affine");

  // byte-identical reruns
  const CliResult again = run_cli("chart-eqs --basis 1,x --vars x,y");
  CHECK(again.out == r.out);

  const CliResult pretty = run_cli("--pretty chart-eqs --basis 1,x --vars x,y");
  CHECK(pretty.exit_code == 0);
  CHECK(nlohmann::json::parse(pretty.out) == j);
}

TEST_CASE("global-eqs fixed and full modes") {
  const CliResult r = run_cli("global-eqs --n 2 --mu 2 --d 2 --u x0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("context").at("mode") == "u_fixed");
  CHECK(j.at("context").at("u") == "x0");
  CHECK(j.at("equations").size() > 10);

  const CliResult rf = run_cli("global-eqs --n 2 --mu 2 --d 2 --full-k");
  CHECK(rf.exit_code == 0);
  const auto jf = nlohmann::json::parse(rf.out);
  CHECK(jf.at("context").at("mode") == "full_k");
  CHECK(jf.at("equations").size() >= j.at("equations").size());

  const CliResult rb = run_cli("global-eqs --n 2 --mu 2 --d 2 --u x0 --basis x0,x1");
  CHECK(rb.exit_code == 0);
  CHECK(nlohmann::json::parse(rb.out).at("equations").size() < j.at("equations").size());

  CHECK(run_cli("global-eqs --n 2 --mu 2 --d 2 --u x0 --full-k").exit_code == 2);
  CHECK(run_cli("global-eqs --n 2 --mu 2 --d 1").exit_code == 1);  // d < mu
}

TEST_CASE("make-fixture round-trips into check-membership") {
  const CliResult f = run_cli("make-fixture --n 2 --mu 2 --d 2 --seed 42");
  CHECK(f.exit_code == 0);
  const auto j = nlohmann::json::parse(f.out);
  CHECK(j.at("fixture").at("seed") == 42);
  CHECK(j.at("point").at("mu") == 2);
  const auto path = temp_file("hilbkit_cli_fixture.json", f.out);

  const CliResult m = run_cli("check-membership --point " + path.string());
  CHECK(m.exit_code == 0);
  const auto mj = nlohmann::json::parse(m.out);
  CHECK(mj.at("member") == true);
  CHECK(mj.at("witness").is_null());

  // determinism across reruns with the same seed
  const CliResult f2 = run_cli("make-fixture --n 2 --mu 2 --d 2 --seed 42");
  CHECK(f2.out == f.out);
  const CliResult f3 = run_cli("make-fixture --n 2 --mu 2 --d 2 --seed 43");
  CHECK(f3.out != f.out);

  // a double point fixture is also a member
  const CliResult fd = run_cli("make-fixture --n 2 --mu 2 --doubles 1 --d 2 --seed 5");
  CHECK(fd.exit_code == 0);
  const auto pd = temp_file("hilbkit_cli_fixture_dbl.json", fd.out);
  const CliResult md = run_cli("check-membership --point " + pd.string());
  CHECK(md.exit_code == 0);
  CHECK(nlohmann::json::parse(md.out).at("member") == true);
}

TEST_CASE("tangent-dim and normal-form on the two-point fixture") {
  const auto path = temp_file("hilbkit_cli_twopoint.json", kTwoPointFixture);

  const CliResult t = run_cli("tangent-dim --basis 1,x --z " + path.string());
  CHECK(t.exit_code == 0);
  CHECK(nlohmann::json::parse(t.out).at("dimension") == 4);

  const CliResult tk = run_cli("tangent-dim --basis 1,x --z " + path.string() + " --kernel");
  CHECK(nlohmann::json::parse(tk.out).at("kernel").size() == 4);

  const CliResult nf = run_cli("normal-form --basis 1,x --z " + path.string() + " --poly y^3");
  CHECK(nf.exit_code == 0);
  const auto nj = nlohmann::json::parse(nf.out);
  CHECK(nj.at("vector") == nlohmann::json::array({"0/1", "1/1"}));
}

TEST_CASE("error paths and exit codes") {
  // malformed JSON is a usage error
  const auto bad = temp_file("hilbkit_cli_bad.json", "{ not json");
  const CliResult r1 = run_cli("check-membership --point " + bad.string());
  CHECK(r1.exit_code == 2);
  CHECK(nlohmann::json::parse(r1.out).contains("error"));

  // a coordinate vector violating the Pluecker relations is a domain error
  const auto broken = temp_file("hilbkit_cli_broken.json", R"({
    "n": 2, "d": 2, "mu": 2,
    "coords": [
      {"key": ["x0^2", "x0*x1"], "value": "1/1"},
      {"key": ["x0^2", "x1*x2"], "value": "1/1"},
      {"key": ["x0*x1", "x0*x2"], "value": "1/1"},
      {"key": ["x1^2", "x2^2"], "value": "1/1"}
    ]
  })");
  const CliResult r2 = run_cli("check-membership --point " + broken.string());
  CHECK(r2.exit_code == 1);
  CHECK(nlohmann::json::parse(r2.out).contains("error"));

  // singular fixtures are domain errors
  const auto singular = temp_file("hilbkit_cli_singular.json", R"({
    "n": 2, "d": 2,
    "points": [
      {"type": "simple", "coords": ["1/1", "0/1", "0/1"]},
      {"type": "simple", "coords": ["1/1", "0/1", "1/1"]}
    ]
  })");
  const CliResult r3 = run_cli("normal-form --basis 1,x --z " + singular.string() + " --poly y");
  CHECK(r3.exit_code == 1);

  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("make-fixture --mu 1 --doubles 1 --d 2").exit_code == 2);
  CHECK(run_cli("chart-eqs --basis 1,q --vars x,y").exit_code == 2);
}
