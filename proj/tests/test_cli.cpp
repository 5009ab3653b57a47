// End-to-end checks of the command line tool: spawns the real binary
// (path injected as CLI_PATH), captures output and exit codes.
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

#include "helpers.hpp"
#include "proxigraph/io.hpp"

using nlohmann::json;
using proxigraph::read_file;
using testhelp::fixture;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

RunResult run_cli(const std::string& args) {
  const std::string out = temp_path("proxigraph_cli_out.txt");
  const std::string err = temp_path("proxigraph_cli_err.txt");
  const std::string cmd =
      std::string(CLI_PATH) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = temp_path(name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("classify verb") {
  const RunResult r = run_cli("classify " + fixture("hamming.json"));
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["level"] == "metric");
  CHECK(j["violation"] == json::array({"100", "010", "110"}));
  CHECK(r.err.find("metric") != std::string::npos);
}

TEST_CASE("graph verb produces a loadable graph file") {
  const RunResult r =
      run_cli("graph --mode proximinal " + fixture("hamming.json") +
              " --parts A B");
  CHECK(r.code == 0);
  const auto g = proxigraph::validate_graph(proxigraph::parse_graph(r.out));
  CHECK(g.edges().size() == 12);
  CHECK(r.err.find("dist(A, B) = 1") != std::string::npos);

  const RunResult farthest =
      run_cli("graph --mode farthest " + fixture("hamming.json"));
  const auto f =
      proxigraph::validate_graph(proxigraph::parse_graph(farthest.out));
  CHECK(f.edges().size() == 4);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string args = "graph --mode proximinal " + fixture("hamming.json");
  CHECK(run_cli(args).out == run_cli(args).out);
  const std::string sweep = "sweep --suite roundtrip --max-part-size 2 --seed 5";
  CHECK(run_cli(sweep).out == run_cli(sweep).out);
}

TEST_CASE("decide verb pins the cube refusal") {
  const RunResult r =
      run_cli("decide --target ultrametric --level exact " + fixture("q3.json"));
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["realizable"] == false);
  CHECK(j["reason"] == "core component not complete bipartite");

  const RunResult iso = run_cli("decide --target ultrametric --level isomorphism " +
                                fixture("q3.json"));
  CHECK(json::parse(iso.out)["realizable"] == false);

  const RunResult fam = run_cli("decide --target metric --level exact " +
                                fixture("empty_infinite.json"));
  CHECK(fam.code == 0);
  CHECK(json::parse(fam.out)["witness"]["kind"] == "empty-proximinal");
}

TEST_CASE("realize then verify round trips") {
  const RunResult w = run_cli("realize --target metric " + fixture("q3.json"));
  REQUIRE(w.code == 0);
  const std::string witness = write_temp("proxigraph_witness.json", w.out);

  const RunResult v = run_cli("verify " + fixture("q3.json") + " " + witness);
  CHECK(v.code == 0);
  const json j = json::parse(v.out);
  CHECK(j["equal"] == true);
  CHECK(j["missing"].empty());
  CHECK(j["extra"].empty());
  CHECK(v.err.find("graphs equal") != std::string::npos);
}

TEST_CASE("verify reports the symmetric difference and fails") {
  // The farthest witness of the path graph seen through proximinal eyes:
  // its proximinal graph is the complementary single edge.
  const RunResult w =
      run_cli("realize --target farthest " + fixture("path.json"));
  REQUIRE(w.code == 0);
  const std::string witness = write_temp("proxigraph_witness2.json", w.out);

  const RunResult v = run_cli("verify " + fixture("path.json") + " " + witness +
                              " --mode proximinal");
  CHECK(v.code == 1);
  const json j = json::parse(v.out);
  CHECK(j["equal"] == false);
  CHECK(j["missing"].size() == 3);
  CHECK(j["extra"] == json::array({json::array({"a1", "b2"})}));
}

TEST_CASE("balls verb") {
  const RunResult r =
      run_cli("balls " + fixture("ultra4.json") + " --radius 1");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["blocks"].size() == 3);

  const RunResult frac =
      run_cli("balls " + fixture("ultra4.json") + " --radius 1/2");
  CHECK(json::parse(frac.out)["blocks"].size() == 4);

  const RunResult metric =
      run_cli("balls " + fixture("hamming.json") + " --radius 1");
  CHECK(metric.code == 1);
  CHECK(metric.err.find("NotUltrametric") != std::string::npos);

  CHECK(run_cli("balls " + fixture("ultra4.json") + " --radius x").code == 2);
  CHECK(run_cli("balls " + fixture("ultra4.json") + " --radius=-1").code == 2);
}

TEST_CASE("orbit verb") {
  const RunResult r =
      run_cli("orbit " + fixture("hamming.json") + " " +
              fixture("hamming_map.json") + " --steps 5 --a0 100 --b0 110");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["steps"] == 5);
  CHECK(j["distances"] == json::array({"1", "1", "1", "1", "1"}));

  const RunResult bad =
      run_cli("orbit " + fixture("hamming.json") + " " +
              fixture("hamming_map.json") + " --steps 5 --a0 100 --b0 011");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotBestProximityPair") != std::string::npos);
}

TEST_CASE("dot verb emits DOT text") {
  const RunResult r = run_cli("dot " + fixture("q3.json"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph G {", 0) == 0);
  CHECK(r.err.find("8 nodes, 12 edges") != std::string::npos);
}

TEST_CASE("sweep verb") {
  const RunResult r = run_cli(
      "sweep --suite ultrametric-oracle --max-part-size 2 --seed 3");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["failures"] == 0);
  CHECK(j["suite"] == "ultrametric-oracle");

  CHECK(run_cli("sweep --suite no-such-suite").code == 1);
}

TEST_CASE("exit codes separate domain errors from malformed input") {
  // domain errors: structurally fine files, impossible requests
  CHECK(run_cli("realize --target ultrametric " + fixture("q3.json")).code == 1);
  CHECK(run_cli("realize --target metric " + fixture("empty_infinite.json"))
            .code == 1);

  // malformed input
  CHECK(run_cli("classify /no/such/file.json").code == 2);
  const std::string bad = write_temp("proxigraph_bad.json", "{oops");
  CHECK(run_cli("classify " + bad).code == 2);
  const std::string floats = write_temp(
      "proxigraph_floats.json",
      R"({"points": ["x", "y"], "distances": [[0, 1.5], [1.5, 0]]})");
  CHECK(run_cli("classify " + floats).code == 2);

  // usage errors
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("decide --target metric").code == 2);  // missing file
  CHECK(run_cli("graph --mode sideways " + fixture("hamming.json")).code == 2);

  // help is not an error
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("decide --help").code == 0);
}
