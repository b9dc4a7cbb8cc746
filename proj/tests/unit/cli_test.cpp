#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace steinberg {
namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("steinberg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) {
    ::setenv(name, value, 1);
  }
  ~EnvGuard() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST_CASE("documented byte-exact outputs") {
  CHECK(run_cli({"phi", "1,2,3", "--format", "json"}).out == "[[3],[3]]\n");
  CHECK(run_cli({"xi-s", "0,1,2", "--format", "json"}).out == "[\"-+-+\",\"-+\"]\n");
  CHECK(run_cli({"phi", "1,2,3"}).out == "((3),(3))\n");
  CHECK(run_cli({"xi-k", "0,3,1"}).out == "((2,1),(2,1))\n");
  CHECK(run_cli({"xi-s", "0,1,2"}).out == "-+-+/-+\n");
  CHECK(run_cli({"canon-matrix", "[[1,1],[1,1]]"}).out == "2,0\n");
  CHECK(run_cli({"canon-matrix", "[[1,1],[1,1]]", "--format", "json"}).out ==
        "{\"n\":2,\"word\":[2,0]}\n");
}

TEST_CASE("triple and its inverse through the command line") {
  const RunResult t = run_cli({"triple", "0,3,1", "--format", "json"});
  CHECK(t.code == 0);
  CHECK(t.out == "{\"T1\":[[1,2],[3]],\"T2\":[[1,2],[3]],\"nu\":[1,1]}\n");
  const RunResult u =
      run_cli({"untriple", "{\"T1\":[[1,2],[3]],\"T2\":[[1,2],[3]],\"nu\":[1,1]}",
               "--format", "json"});
  CHECK(u.code == 0);
  CHECK(u.out == "{\"n\":3,\"word\":[0,3,1]}\n");
  CHECK(run_cli({"untriple", "{\"T1\":[[1,2,3]],\"T2\":[[1,3],[2]],\"nu\":[2]}"}).out ==
        "1,0,2\n");
}

TEST_CASE("skew bridge and grassmann canonicalization commands") {
  const RunResult tri = run_cli(
      {"triangle", "{\"T1\":[[1,2,3]],\"T2\":[[2,3,4]],\"ells\":[4],\"ms\":[1],\"n\":4}",
       "--format", "json"});
  CHECK(tri.code == 0);
  CHECK(tri.out == "{\"inner\":[1],\"outer\":[5],\"rows\":[[null,1,2,3,4]]}\n");
  CHECK(run_cli({"triangle",
                 "{\"T1\":[[1,2,3]],\"T2\":[[2,3,4]],\"ells\":[4],\"ms\":[1],\"n\":4}"})
            .out == ". 1 2 3 4\n");
  const RunResult grass =
      run_cli({"canon-grass", "[[1,0],[0,1],[1,0],[0,1]]", "--format", "json"});
  CHECK(grass.code == 0);
  CHECK(grass.out ==
        "{\"tau1\":{\"n\":2,\"word\":[1,2]},\"tau2\":{\"n\":2,\"word\":[1,2]}}\n");
}

TEST_CASE("table command emits every class") {
  const RunResult json_run = run_cli({"table", "--n", "2", "--format", "json"});
  CHECK(json_run.code == 0);
  const auto rows = nlohmann::json::parse(json_run.out);
  CHECK(rows.size() == 7);
  CHECK(rows[0]["word"].dump() == "[1,2]");
  CHECK(rows[0]["phi"].dump() == "[[2],[2]]");
  const RunResult md = run_cli({"table", "--n", "2", "--format", "markdown"});
  CHECK(md.out.substr(0, 1) == "|");
  CHECK(md.out.find("xi_s") != std::string::npos);
}

TEST_CASE("orbit and fiber listings") {
  const RunResult orbits = run_cli({"orbits", "--n", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(orbits.out).size() == 3);
  CHECK(run_cli({"orbits", "--n", "1"}).out.find("classes: 3") != std::string::npos);
  const RunResult fibers =
      run_cli({"count-fibers", "--n", "2", "--lambda", "1,1", "--mu", "1,1",
               "--format", "json"});
  const auto f = nlohmann::json::parse(fibers.out);
  CHECK(f["count"] == 3);
  CHECK(f["predicted"] == 3);
  CHECK(run_cli({"count-fibers", "--n", "2"}).out.find("total=7 predicted=7") !=
        std::string::npos);
  CHECK(run_cli({"count-fibers", "--n", "2", "--lambda", "1,1"}).code == 1);
}

TEST_CASE("verification command exit codes") {
  const RunResult ok = run_cli({"verify", "--n", "2", "--what", "all", "--format", "json"});
  CHECK(ok.code == 0);
  const auto report = nlohmann::json::parse(ok.out);
  CHECK(report["checked"] == 14);
  CHECK(report["mismatches"] == 0);
  CHECK(report["undecided"] == 0);

  const RunResult bad = run_cli(
      {"verify", "--n", "2", "--what", "xi", "--prime", "2", "--trials", "1",
       "--format", "json"});
  CHECK(bad.code == 2);
  CHECK(nlohmann::json::parse(bad.out)["mismatches"].get<int>() > 0);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::string> args{"verify", "--n", "2", "--what", "all",
                                      "--format", "json"};
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.code == second.code);
  CHECK(first.out == second.out);
  const std::vector<std::string> noisy{"verify", "--n", "2", "--what", "xi",
                                       "--prime", "2", "--trials", "1"};
  CHECK(run_cli(noisy).out == run_cli(noisy).out);
}

TEST_CASE("environment variables configure the oracle") {
  {
    EnvGuard prime("STEINBERG_PRIME", "2");
    EnvGuard trials("STEINBERG_TRIALS", "1");
    CHECK(run_cli({"verify", "--n", "2", "--what", "xi"}).code == 2);
    CHECK(run_cli({"verify", "--n", "2", "--what", "xi", "--prime", "2147483647",
                   "--trials", "7"})
              .code == 0);
  }
  CHECK(run_cli({"verify", "--n", "2", "--what", "xi"}).code == 0);
}

TEST_CASE("failures report to standard error with exit one") {
  const RunResult bad_word = run_cli({"phi", "1,x"});
  CHECK(bad_word.code == 1);
  CHECK(bad_word.out.empty());
  CHECK(bad_word.err.find("error:") == 0);
  CHECK(run_cli({"phi", "1,1"}).code == 1);
  CHECK(run_cli({"untriple", "{"}).code == 1);
  CHECK(run_cli({"untriple", "{\"T1\":[[1,2]],\"T2\":[[1,2]],\"nu\":[9]}"}).code == 1);
  CHECK(run_cli({"nosuch"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"table"}).code == 1);
  CHECK(run_cli({"table", "--n", "2", "--format", "yaml"}).code == 1);
}

TEST_CASE("help requests succeed") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"phi", "--help"}).code == 0);
  CHECK(run_cli({"--help"}).out.find("phi") != std::string::npos);
}

}  // namespace
}  // namespace steinberg
