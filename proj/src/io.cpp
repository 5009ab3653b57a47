#include "proxigraph/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace proxigraph {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(std::string(what) + ": not valid JSON");
  if (!j.is_object())
    throw ParseError(std::string(what) + ": top level must be an object");
  return j;
}

std::vector<std::string> string_array(const json& j, const std::string& key,
                                      const char* what) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string(what) + ": missing array \"" + key + "\"");
  std::vector<std::string> out;
  for (const json& item : j[key]) {
    if (!item.is_string())
      throw ParseError(std::string(what) + ": \"" + key +
                       "\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rat parse_distance(const json& cell) {
  if (cell.is_number_integer()) return Rat(cell.get<std::int64_t>());
  if (cell.is_string()) {
    if (auto r = parse_rational(cell.get<std::string>())) return *r;
    throw ParseError("space file: bad rational \"" + cell.get<std::string>() +
                     "\"");
  }
  throw ParseError("space file: distances must be strings or integers");
}

json space_to_json(const FiniteSpace& space) {
  json j;
  j["points"] = space.points();
  json rows = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k)
      row.push_back(to_string(space.dist(i, k)));
    rows.push_back(std::move(row));
  }
  j["distances"] = std::move(rows);
  json parts = json::object();
  for (const auto& [name, indices] : space.parts()) {
    json labels = json::array();
    for (std::size_t i : indices) labels.push_back(space.label(i));
    parts[name] = std::move(labels);
  }
  j["parts"] = std::move(parts);
  return j;
}

json graph_to_json(const BipartiteGraph& g) {
  json j;
  j["A"] = g.part_a();
  j["B"] = g.part_b();
  json edges = json::array();
  for (auto [a, b] : g.edges())
    edges.push_back(json::array({g.part_a()[a], g.part_b()[b]}));
  j["edges"] = std::move(edges);
  j["infinite"] = {{"A", g.a_infinite()}, {"B", g.b_infinite()}};
  return j;
}

}  // namespace

RawSpace parse_space(const std::string& text) {
  json j = parse_json(text, "space file");
  RawSpace raw;
  raw.points = string_array(j, "points", "space file");
  if (!j.contains("distances") || !j["distances"].is_array())
    throw ParseError("space file: missing array \"distances\"");
  for (const json& row : j["distances"]) {
    if (!row.is_array())
      throw ParseError("space file: \"distances\" must hold rows");
    std::vector<Rat> out_row;
    for (const json& cell : row) out_row.push_back(parse_distance(cell));
    raw.distances.push_back(std::move(out_row));
  }
  if (j.contains("parts")) {
    if (!j["parts"].is_object())
      throw ParseError("space file: \"parts\" must be an object");
    for (const auto& [name, labels] : j["parts"].items()) {
      if (!labels.is_array())
        throw ParseError("space file: part \"" + name + "\" must be an array");
      std::vector<std::string> members;
      for (const json& item : labels) {
        if (!item.is_string())
          throw ParseError("space file: part \"" + name +
                           "\" must hold strings");
        members.push_back(item.get<std::string>());
      }
      raw.parts[name] = std::move(members);
    }
  }
  return raw;
}

std::string serialize_space(const FiniteSpace& space) {
  return space_to_json(space).dump(2);
}

RawGraph parse_graph(const std::string& text) {
  json j = parse_json(text, "graph file");
  RawGraph raw;
  raw.part_a = string_array(j, "A", "graph file");
  raw.part_b = string_array(j, "B", "graph file");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("graph file: missing array \"edges\"");
  for (const json& edge : j["edges"]) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
        !edge[1].is_string())
      throw ParseError("graph file: each edge must be a pair of labels");
    raw.edges.emplace_back(edge[0].get<std::string>(),
                           edge[1].get<std::string>());
  }
  if (j.contains("infinite")) {
    if (!j["infinite"].is_object())
      throw ParseError("graph file: \"infinite\" must be an object");
    const json& inf = j["infinite"];
    for (const char* key : {"A", "B"}) {
      if (!inf.contains(key)) continue;
      if (!inf[key].is_boolean())
        throw ParseError("graph file: \"infinite\" flags must be booleans");
    }
    raw.a_infinite = inf.value("A", false);
    raw.b_infinite = inf.value("B", false);
  }
  return raw;
}

std::string serialize_graph(const BipartiteGraph& g) {
  return graph_to_json(g).dump(2);
}

std::map<std::string, std::string> parse_map_table(const std::string& text) {
  json j = parse_json(text, "map file");
  if (!j.contains("map") || !j["map"].is_object())
    throw ParseError("map file: missing object \"map\"");
  std::map<std::string, std::string> table;
  for (const auto& [key, value] : j["map"].items()) {
    if (!value.is_string())
      throw ParseError("map file: image of \"" + key + "\" must be a string");
    table[key] = value.get<std::string>();
  }
  return table;
}

std::string serialize_map_table(
    const std::map<std::string, std::string>& table) {
  json j;
  j["map"] = table;
  return j.dump(2);
}

std::string serialize_classification(const SpaceClass& cls,
                                     const FiniteSpace& space) {
  json j;
  j["level"] = to_string(cls.level);
  if (cls.violation) {
    auto [x, y, z] = *cls.violation;
    j["violation"] =
        json::array({space.label(x), space.label(y), space.label(z)});
  }
  return j.dump(2);
}

std::string serialize_decision(const Decision& decision) {
  json j;
  j["target"] = to_string(decision.target);
  j["level"] = to_string(decision.level);
  j["realizable"] = decision.realizable;
  j["reason"] = to_string(decision.reason);
  if (!decision.detail.empty()) j["detail"] = decision.detail;
  if (decision.space) j["witness"] = space_to_json(*decision.space);
  if (decision.family)
    j["witness"] = {{"kind", to_string(*decision.family)},
                    {"params", json::object()}};
  return j.dump(2);
}

std::string serialize_partition(const BallPartition& partition,
                                const FiniteSpace& space) {
  json j;
  j["radius"] = to_string(partition.radius);
  json blocks = json::array();
  for (const Ball& ball : partition.blocks) {
    json members = json::array();
    for (std::size_t m : ball.members) members.push_back(space.label(m));
    blocks.push_back(
        {{"center", space.label(ball.center)}, {"members", std::move(members)}});
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2);
}

std::string serialize_sweep(const SweepResult& result) {
  json j;
  j["suite"] = result.suite;
  j["instances"] = result.instances;
  j["failures"] = result.failures;
  if (!result.first_failure.empty()) j["first_failure"] = result.first_failure;
  return j.dump(2);
}

namespace {

std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const BipartiteGraph& g) {
  std::string out = "graph G {\n  rankdir=LR;\n  { rank=source;";
  for (const std::string& a : g.part_a()) out += " " + dot_quote(a) + ";";
  out += " }\n  { rank=sink;";
  for (const std::string& b : g.part_b()) out += " " + dot_quote(b) + ";";
  out += " }\n";
  for (auto [a, b] : g.edges())
    out += "  " + dot_quote(g.part_a()[a]) + " -- " + dot_quote(g.part_b()[b]) +
           ";\n";
  out += "}\n";
  return out;
}

}  // namespace proxigraph
