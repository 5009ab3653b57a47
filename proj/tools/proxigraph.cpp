// proxigraph: proximinal and farthest graphs of finite semimetric spaces.
//
// Structured output (JSON, or DOT for the dot verb) goes to stdout; a
// one-line human summary goes to stderr. Exit codes: 0 success, 1 domain
// error (also: verify mismatch, sweep failures), 2 malformed input or
// usage error.

#include <array>
#include <cstddef>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "proxigraph/bigraph.hpp"
#include "proxigraph/dynamics.hpp"
#include "proxigraph/errors.hpp"
#include "proxigraph/io.hpp"
#include "proxigraph/proximity.hpp"
#include "proxigraph/rational.hpp"
#include "proxigraph/realize.hpp"
#include "proxigraph/space.hpp"
#include "proxigraph/sweep.hpp"

namespace {

using namespace proxigraph;

FiniteSpace load_space(const std::string& path) {
  return validate_space(parse_space(read_file(path)));
}

BipartiteGraph load_graph(const std::string& path) {
  return validate_graph(parse_graph(read_file(path)));
}

Target parse_target(const std::string& name) {
  if (name == "metric") return Target::ProximinalMetric;
  if (name == "ultrametric") return Target::ProximinalUltrametric;
  return Target::Farthest;
}

DecisionLevel parse_level(const std::string& name) {
  return name == "exact" ? DecisionLevel::ExactParts
                         : DecisionLevel::UpToIsomorphism;
}

void emit(const std::string& body, const std::string& summary) {
  std::cout << body << "\n";
  std::cerr << summary << "\n";
}

std::string violation_text(const FiniteSpace& space,
                           const std::array<std::size_t, 3>& t) {
  return "(" + space.points()[t[0]] + ", " + space.points()[t[1]] + ", " +
         space.points()[t[2]] + ")";
}

// Edges as sorted label pairs; the diff below is a plain set difference.
std::set<std::pair<std::string, std::string>> edge_labels(
    const BipartiteGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : g.edges())
    out.emplace(g.part_a()[a], g.part_b()[b]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proximinal and farthest graphs of finite semimetric spaces"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string space_path, graph_path, map_path;
  std::vector<std::string> parts{"A", "B"};
  std::string mode = "proximinal";
  std::string target = "metric";
  std::string level = "exact";
  std::string radius_text;
  std::string suite;
  std::string a0_label, b0_label;
  std::size_t steps = 1;
  SweepOptions sweep_options;

  auto add_parts = [&parts](CLI::App* cmd) {
    cmd->add_option("--parts", parts, "part names in the space file")
        ->expected(2);
  };

  auto* classify_cmd =
      app.add_subcommand("classify", "semimetric / metric / ultrametric");
  classify_cmd->add_option("space", space_path, "space file")->required();
  classify_cmd->callback([&] {
    const FiniteSpace space = load_space(space_path);
    const SpaceClass cls = classify(space);
    std::string summary = to_string(cls.level);
    if (cls.violation) {
      summary += cls.level == Level::Semimetric
                     ? ": triangle inequality fails at "
                     : ": strong triangle inequality fails at ";
      summary += violation_text(space, *cls.violation);
    }
    emit(serialize_classification(cls, space), summary);
  });

  auto* graph_cmd =
      app.add_subcommand("graph", "proximinal or farthest graph of a space");
  graph_cmd->add_option("space", space_path, "space file")->required();
  graph_cmd->add_option("--mode", mode, "proximinal or farthest")
      ->check(CLI::IsMember({"proximinal", "farthest"}));
  add_parts(graph_cmd);
  graph_cmd->callback([&] {
    const FiniteSpace space = load_space(space_path);
    const auto a = space.part(parts[0]);
    const auto b = space.part(parts[1]);
    const bool prox = mode == "proximinal";
    const BipartiteGraph g = prox ? proximinal_graph(space, a, b)
                                  : farthest_graph(space, a, b);
    const ProximityReport report = proximity_report(
        space, a, b, prox ? ProxMode::Proximinal : ProxMode::Farthest);
    emit(serialize_graph(g),
         mode + " graph: " + std::to_string(g.vertex_count()) + " vertices, " +
             std::to_string(g.edges().size()) + " edges, " +
             (prox ? "dist" : "sup") + "(A, B) = " + to_string(report.extremum));
  });

  auto* decide_cmd =
      app.add_subcommand("decide", "is the graph realizable over the target class");
  decide_cmd->add_option("graph", graph_path, "graph file")->required();
  decide_cmd->add_option("--target", target, "metric, ultrametric or farthest")
      ->check(CLI::IsMember({"metric", "ultrametric", "farthest"}));
  decide_cmd->add_option("--level", level, "exact or isomorphism")
      ->check(CLI::IsMember({"exact", "isomorphism"}));
  decide_cmd->callback([&] {
    const BipartiteGraph g = load_graph(graph_path);
    const Decision d = decide(g, parse_target(target), parse_level(level));
    std::string summary = d.realizable ? "realizable: " : "not realizable: ";
    summary += to_string(d.reason);
    if (!d.detail.empty()) summary += " " + d.detail;
    emit(serialize_decision(d), summary);
  });

  auto* realize_cmd =
      app.add_subcommand("realize", "witness space whose graph is the input");
  realize_cmd->add_option("graph", graph_path, "graph file")->required();
  realize_cmd->add_option("--target", target, "metric, ultrametric or farthest")
      ->check(CLI::IsMember({"metric", "ultrametric", "farthest"}));
  realize_cmd->callback([&] {
    const BipartiteGraph g = load_graph(graph_path);
    const Target t = parse_target(target);
    const FiniteSpace space = t == Target::ProximinalMetric ? realize_metric(g)
                              : t == Target::ProximinalUltrametric
                                  ? realize_ultrametric(g)
                                  : realize_farthest(g);
    emit(serialize_space(space),
         std::string(to_string(t)) + " witness on " +
             std::to_string(space.points().size()) + " points");
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "recompute the graph from a space and diff against a graph file");
  verify_cmd->add_option("graph", graph_path, "graph file with the claim")
      ->required();
  verify_cmd->add_option("space", space_path, "space file")->required();
  verify_cmd->add_option("--mode", mode, "proximinal or farthest")
      ->check(CLI::IsMember({"proximinal", "farthest"}));
  add_parts(verify_cmd);
  verify_cmd->callback([&] {
    const BipartiteGraph claimed = load_graph(graph_path);
    const FiniteSpace space = load_space(space_path);
    const auto a = space.part(parts[0]);
    const auto b = space.part(parts[1]);
    const BipartiteGraph actual = mode == "proximinal"
                                      ? proximinal_graph(space, a, b)
                                      : farthest_graph(space, a, b);
    const auto want = edge_labels(claimed);
    const auto got = edge_labels(actual);
    nlohmann::json diff;
    diff["missing"] = nlohmann::json::array();
    diff["extra"] = nlohmann::json::array();
    for (const auto& e : want)
      if (!got.count(e)) diff["missing"].push_back({e.first, e.second});
    for (const auto& e : got)
      if (!want.count(e)) diff["extra"].push_back({e.first, e.second});
    const bool equal = claimed == actual;
    diff["equal"] = equal;
    std::string summary =
        equal ? "graphs equal"
              : "graphs differ: " + std::to_string(diff["missing"].size()) +
                    " missing, " + std::to_string(diff["extra"].size()) +
                    " extra";
    if (!equal && diff["missing"].empty() && diff["extra"].empty())
      summary += " (parts or infinite flags differ)";
    emit(diff.dump(2), summary);
    if (!equal) exit_code = 1;
  });

  auto* balls_cmd =
      app.add_subcommand("balls", "closed-ball partition of an ultrametric space");
  balls_cmd->add_option("space", space_path, "space file")->required();
  balls_cmd->add_option("--radius", radius_text, "radius, an integer or p/q")
      ->required();
  balls_cmd->callback([&] {
    const FiniteSpace space = load_space(space_path);
    const auto radius = parse_rational(radius_text);
    if (!radius) throw ParseError("bad radius: " + radius_text);
    const BallPartition partition = ball_partition(space, *radius);
    emit(serialize_partition(partition, space),
         "radius " + to_string(*radius) + ": " +
             std::to_string(partition.blocks.size()) + " blocks");
  });

  auto* orbit_cmd = app.add_subcommand(
      "orbit", "distances along the orbit of a best proximity pair");
  orbit_cmd->add_option("space", space_path, "space file")->required();
  orbit_cmd->add_option("map", map_path, "map file")->required();
  orbit_cmd->add_option("--steps", steps, "iterations")->required();
  orbit_cmd->add_option("--a0", a0_label, "starting point in part A")->required();
  orbit_cmd->add_option("--b0", b0_label, "starting point in part B")->required();
  add_parts(orbit_cmd);
  orbit_cmd->callback([&] {
    const FiniteSpace space = load_space(space_path);
    const auto a = space.part(parts[0]);
    const auto b = space.part(parts[1]);
    const ValidatedMap f =
        validate_map(parse_map_table(read_file(map_path)), space, a, b);
    const auto a0 = space.index_of(a0_label);
    const auto b0 = space.index_of(b0_label);
    if (!a0) fail(Errc::UnknownPoint, a0_label);
    if (!b0) fail(Errc::UnknownPoint, b0_label);
    const std::vector<Rat> distances = orbit_check(f, space, *a0, *b0, steps);
    nlohmann::json out;
    out["steps"] = steps;
    out["distances"] = nlohmann::json::array();
    for (const Rat& d : distances) out["distances"].push_back(to_string(d));
    emit(out.dump(2), "orbit constant at " + to_string(distances.front()) +
                          " over " + std::to_string(steps) + " steps");
  });

  auto* dot_cmd = app.add_subcommand("dot", "DOT rendering of a graph file");
  dot_cmd->add_option("graph", graph_path, "graph file")->required();
  dot_cmd->callback([&] {
    const BipartiteGraph g = load_graph(graph_path);
    std::cout << export_dot(g);
    std::cerr << std::to_string(g.vertex_count()) + " nodes, " +
                     std::to_string(g.edges().size()) + " edges\n";
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "run a named invariant suite");
  sweep_cmd->add_option("--suite", suite, "suite name")->required();
  sweep_cmd->add_option("--max-part-size", sweep_options.max_part_size,
                        "largest part in exhaustive suites");
  sweep_cmd->add_option("--max-points", sweep_options.max_points,
                        "largest carrier in random suites");
  sweep_cmd->add_option("--count", sweep_options.count,
                        "random instances per suite");
  sweep_cmd->add_option("--seed", sweep_options.seed, "RNG seed");
  sweep_cmd->callback([&] {
    const SweepResult result = run_sweep(suite, sweep_options);
    std::string summary = "suite " + result.suite + ": " +
                          std::to_string(result.instances) + " instances, " +
                          std::to_string(result.failures) + " failures";
    if (!result.passed()) summary += " (first: " + result.first_failure + ")";
    emit(serialize_sweep(result), summary);
    if (!result.passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
