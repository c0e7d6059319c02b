#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli_path() {
  struct stat st{};
  if (stat("./groupomega", &st) == 0) return "./groupomega";
  return "build/groupomega";  // manual runs from the source root
}

struct CliResult {
  int exitCode = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  CliResult r;
  std::string cmd = env + (env.empty() ? "" : " ") + cli_path() + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expectExit = 0) {
  CliResult r = run_cli("--json " + args);
  INFO(r.out);
  CHECK(r.exitCode == expectExit);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("slice-bound output") {
  nlohmann::json j = run_json("slice-bound ut:4,2 -p 2");
  CHECK(j["schema"] == 1);
  CHECK(j["pDegrees"] == nlohmann::json({3, 2, 1}));
  CHECK(j["delta"] == "5");
  CHECK(j["idealExact"] == 43);
  CHECK(j["trivial"] == 64);
  CHECK(j["argmin"] == nlohmann::json({3, 4}));
  CHECK(j["pDividesOrder"] == true);
  CHECK(j["hoeffding"].get<double>() == doctest::Approx(145.4333).epsilon(1e-4));
}

TEST_CASE("young ratio output") {
  nlohmann::json j = run_json("young ratio --hexagon 6 --triangle 13");
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 91);
  CHECK(j["ratio"] == "2940/1573");
}

TEST_CASE("matching cyclic output") {
  nlohmann::json j = run_json("matching cyclic -m 100");
  CHECK(j["schema"] == 1);
  CHECK(j["ok"] == true);
  CHECK(j["border"] == true);
  CHECK(j["cardinality"] == 50);
  CHECK(j["group"] == "cyclic:100");
  REQUIRE(j["s"].size() == 50);
  CHECK(j["s"][2] == nlohmann::json({2, 4}));
  CHECK(j["u"][2][0] == 96);  // -4 mod 100
}

TEST_CASE("group info output") {
  nlohmann::json j = run_json("group info sym:6");
  CHECK(j["order"] == "720");
  CHECK(j["classes"] == 11);
  CHECK(j["abelian"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("group info badspec").exitCode == 2);
  CHECK(run_cli("group info cyclic:0").exitCode == 2);
  CHECK(run_cli("matching cyclic -m 200", "GROUPOMEGA_BUDGET=1").exitCode == 3);
  CHECK(run_cli("group info cyclic:8").exitCode == 0);

  // failing verdicts exit 1 and still print the counterexample
  const char* path = "cli_formats_bad_instance.json";
  {
    FILE* f = fopen(path, "w");
    REQUIRE(f != nullptr);
    fputs(R"({"group": "cyclic:4", "triples": )"
          R"([{"S": [0,1,2,3], "T": [0,1,2,3], "U": [0,1,2,3]}]})",
          f);
    fclose(f);
  }
  CliResult bad = run_cli(std::string("--json stpp verify --file ") + path);
  CHECK(bad.exitCode == 1);
  nlohmann::json j = nlohmann::json::parse(bad.out);
  CHECK(j["ok"] == false);
  CHECK(j.contains("witness"));
  std::remove(path);

  {
    FILE* f = fopen(path, "w");
    REQUIRE(f != nullptr);
    fputs(R"({"group": "cyclic:4", "triples": [{"S": [0,1], "T": [0,2], "U": [0]}]})", f);
    fclose(f);
  }
  CliResult good = run_cli(std::string("--json stpp verify --file ") + path);
  CHECK(good.exitCode == 0);
  CHECK(nlohmann::json::parse(good.out)["ok"] == true);
  std::remove(path);
}
