#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bridgeburn/cli.hpp"
#include "bridgeburn/families.hpp"
#include "bridgeburn/game.hpp"
#include "bridgeburn/graph_io.hpp"
#include "bridgeburn/tree_solver.hpp"

using namespace bridgeburn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("bridgeburn_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("cop numbers") {
  auto r = run({"copnumber", "--family", "path", "--params", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"cb\":2}\n");
  r = run({"copnumber", "--family", "cycle", "--params", "6", "--variant", "classic"});
  CHECK(r.json() == nlohmann::json{{"c", 2}});
  r = run({"copnumber", "--family", "path", "--params", "6", "--max-k", "1"});
  CHECK(r.code == 0);
  CHECK(r.json()["cb"].is_null());
  CHECK(r.json()["exceedsMaxK"] == 1);
}

TEST_CASE("solve and capture time") {
  auto r = run({"solve", "--family", "complete", "--params", "4"});
  CHECK(r.code == 0);
  CHECK(r.json()["winner"] == "cop");
  CHECK(r.json()["captureTimeRounds"] == 1);
  r = run({"capture-time", "--family", "capture_family", "--params", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.json()["captureTimeRounds"] == 6);
  r = run({"solve", "--family", "stalemate", "--cops", "2"});
  CHECK(r.json()["winner"] == "cop");
}

TEST_CASE("formula, bounds and tree") {
  auto r = run({"formula", "--family", "torus", "--params", "16,14"});
  CHECK(r.code == 0);
  CHECK(r.json()["exact"] == 2);
  CHECK(r.json()["lower"] == 2);
  CHECK(r.json()["upper"] == 2);
  r = run({"formula", "--family", "spider", "--params", "2,2,2"});
  CHECK(r.code == 2);
  r = run({"bounds", "--family", "stalemate"});
  CHECK(r.json()["gamma2"] == 1);
  CHECK(r.json()["cliqueCoverDom"] == 2);

  const auto file = temp_file("spider.txt", to_edge_list(generate(FamilySpec{Family::kSpider, {3, 3, 3}})));
  r = run({"tree", "--graph", file, "--root", "0"});
  CHECK(r.code == 0);
  CHECK(r.json()["N"] == 3);
  CHECK(r.json()["placements"] == nlohmann::json{1, 4, 7});
  std::filesystem::remove(file);
}

TEST_CASE("arena and exhaust") {
  auto r = run({"arena", "--family", "path", "--params", "6", "--policy", "stationary", "--policy", "leaf_isolate"});
  CHECK(r.code == 0);
  CHECK(r.json()["outcome"]["type"] == "robber_escape");
  CHECK_NOTHROW(transcript_from_json(r.json()).replay());
  r = run({"exhaust", "--family", "hypercube", "--params", "3", "--policy", "hypercube_mirror"});
  CHECK(r.code == 0);
  CHECK(r.json()["outcome"] == "policy_wins_always");
  r = run({"exhaust", "--family", "path", "--params", "6", "--policy", "greedy_closer"});
  CHECK(r.json()["outcome"] == "policy_beaten");
  CHECK(r.json()["counterexample"].is_object());
}

TEST_CASE("exit codes") {
  SUBCASE("input errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"solve"}).code == 2);
    CHECK(run({"solve", "--family", "nope"}).code == 2);
    CHECK(run({"solve", "--family", "path", "--params", "0"}).code == 2);
    CHECK(run({"solve", "--graph", "/nonexistent/graph.txt"}).code == 2);
    CHECK(run({"solve", "--family", "path", "--params", "4", "--bogus"}).code == 2);
    CHECK(run({"arena", "--family", "path", "--params", "4", "--policy", "stationary"}).code == 2);
    CHECK(run({"tree", "--family", "cycle", "--params", "4"}).code == 2);
    const auto bad = temp_file("bad.txt", "3 2\n0 1\n1 1\n");
    const auto r = run({"solve", "--graph", bad});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
    std::filesystem::remove(bad);
  }
  SUBCASE("domain errors") {
    CHECK(run({"capture-time", "--family", "path", "--params", "6"}).code == 1);
  }
  SUBCASE("budget") {
    const auto r = run({"solve", "--family", "grid", "--params", "3,3", "--budget", "10"});
    CHECK(r.code == 3);
    CHECK(r.json()["outcome"] == "budget_exceeded");
    CHECK(r.json()["explored"].get<std::uint64_t>() > 10);
  }
}

TEST_CASE("generate round-trips and output is stable") {
  for (const auto& [fam, params] : std::vector<std::pair<std::string, std::string>>{
           {"grid", "3,4"}, {"torus", "3,5"}, {"hypercube", "3"}, {"capture_family", "2,3"}, {"spider", "1,2,3"}}) {
    CAPTURE(fam);
    const auto a = run({"generate", "--family", fam, "--params", params});
    const auto b = run({"generate", "--family", fam, "--params", params});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.back() == '\n');
    const auto file = temp_file("gen.json", a.out);
    const auto c = run({"generate", "--graph", file});
    CHECK(c.out == a.out);
    std::filesystem::remove(file);
  }
  const std::vector<std::string> solve{"solve", "--family", "grid", "--params", "2,4"};
  CHECK(run(solve).out == run(solve).out);
  auto pretty = solve;
  pretty.push_back("--pretty");
  const auto p = run(pretty);
  CHECK(p.out.find('\n') < p.out.size() - 1);
  CHECK(nlohmann::json::parse(p.out) == run(solve).json());
}
