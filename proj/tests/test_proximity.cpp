#include "doctest.h"

#include <utility>
#include <vector>

#include "helpers.hpp"
#include "proxigraph/io.hpp"
#include "proxigraph/proximity.hpp"

using namespace proxigraph;
using testhelp::fixture;
using testhelp::space_of;
using testhelp::thrown_code;

namespace {

FiniteSpace hamming() {
  return validate_space(parse_space(read_file(fixture("hamming.json"))));
}

FiniteSpace ultra4() {
  return validate_space(parse_space(read_file(fixture("ultra4.json"))));
}

std::vector<std::pair<std::string, std::string>> edge_labels(
    const BipartiteGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : g.edges())
    out.emplace_back(g.part_a()[a], g.part_b()[b]);
  return out;
}

}  // namespace

TEST_CASE("proximity report on the hamming space") {
  const FiniteSpace h = hamming();
  const ProximityReport r =
      proximity_report(h, h.part("A"), h.part("B"), ProxMode::Proximinal);
  CHECK(r.extremum == rat(1));
  CHECK(r.pairs.size() == 12);
  // Every vertex participates: the attaining sets are the full parts.
  CHECK(r.a0 == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(r.b0 == std::vector<std::size_t>{4, 5, 6, 7});
  // 100's nearest point of B at distance 1, least index on the tie.
  CHECK(r.witness_b[0] == 4);
  // 110's nearest point of A.
  CHECK(r.witness_a[4] == 0);
  // Points of A witness themselves inside A.
  CHECK(r.witness_a[0] == 0);
}

TEST_CASE("farthest report flips the comparison") {
  const FiniteSpace h = hamming();
  const ProximityReport r =
      proximity_report(h, h.part("A"), h.part("B"), ProxMode::Farthest);
  CHECK(r.extremum == rat(3));
  CHECK(r.pairs == std::vector<std::pair<std::size_t, std::size_t>>{
                       {0, 6}, {1, 5}, {2, 4}, {3, 7}});
  CHECK(r.witness_b[0] == 6);  // 100's antipode 011
}

TEST_CASE("proximinal graph of the hamming space is the cube") {
  const FiniteSpace h = hamming();
  const BipartiteGraph g = proximinal_graph(h, h.part("A"), h.part("B"));
  CHECK(g.vertex_count() == 8);
  CHECK(g.edges().size() == 12);
  CHECK(g.degree_multiset() ==
        std::vector<std::size_t>{3, 3, 3, 3, 3, 3, 3, 3});
  CHECK(edge_labels(g) ==
        std::vector<std::pair<std::string, std::string>>{
            {"100", "110"}, {"100", "101"}, {"100", "000"},
            {"010", "110"}, {"010", "011"}, {"010", "000"},
            {"001", "101"}, {"001", "011"}, {"001", "000"},
            {"111", "110"}, {"111", "101"}, {"111", "011"}});

  const BipartiteGraph cube =
      validate_graph(parse_graph(read_file(fixture("q3.json"))));
  auto f = find_isomorphism(g, cube);
  REQUIRE(f);
  CHECK(verify_isomorphism(*f, g, cube));
}

TEST_CASE("farthest graph of the hamming space is a perfect matching") {
  const FiniteSpace h = hamming();
  const BipartiteGraph g = farthest_graph(h, h.part("A"), h.part("B"));
  CHECK(g.edges().size() == 4);
  CHECK(g.degree_multiset() ==
        std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(edge_labels(g) ==
        std::vector<std::pair<std::string, std::string>>{
            {"100", "011"}, {"010", "101"}, {"001", "110"}, {"111", "000"}});
}

TEST_CASE("single best proximity pair") {
  const FiniteSpace u = ultra4();
  const BipartiteGraph g = proximinal_graph(u, u.part("A"), u.part("B"));
  CHECK(edge_labels(g) ==
        std::vector<std::pair<std::string, std::string>>{{"a1", "b1"}});
  const ProximityReport r =
      proximity_report(u, u.part("A"), u.part("B"), ProxMode::Proximinal);
  CHECK(r.a0 == std::vector<std::size_t>{0});
  CHECK(r.b0 == std::vector<std::size_t>{2});
}

TEST_CASE("graph parts keep the caller's order") {
  const FiniteSpace u = ultra4();
  const std::vector<std::size_t> a{1, 0};  // a2 first
  const std::vector<std::size_t> b{3, 2};
  const BipartiteGraph g = proximinal_graph(u, a, b);
  CHECK(g.part_a() == std::vector<std::string>{"a2", "a1"});
  CHECK(g.part_b() == std::vector<std::string>{"b2", "b1"});
  CHECK(edge_labels(g) ==
        std::vector<std::pair<std::string, std::string>>{{"a1", "b1"}});
}

TEST_CASE("is_proximinal hands back a witness per point") {
  const FiniteSpace h = hamming();
  const auto witness = is_proximinal(h, h.part("B"));
  CHECK(witness[0] == 4);  // 100 -> 110
  CHECK(witness[3] == 4);  // 111 -> 110
  CHECK(witness[7] == 7);  // members witness themselves
}

TEST_CASE("part preconditions") {
  const FiniteSpace u = ultra4();
  const std::vector<std::size_t> a{0, 1};
  const std::vector<std::size_t> empty;
  const std::vector<std::size_t> huge{17};
  const std::vector<std::size_t> doubled{2, 2};
  const std::vector<std::size_t> touching{1, 2};

  CHECK(thrown_code([&] { proximinal_graph(u, empty, a); }) == Errc::EmptySet);
  CHECK(thrown_code([&] { proximinal_graph(u, a, huge); }) ==
        Errc::InvalidIndex);
  CHECK(thrown_code([&] { proximinal_graph(u, a, doubled); }) ==
        Errc::DuplicateLabel);
  CHECK(thrown_code([&] { proximinal_graph(u, a, touching); }) ==
        Errc::PartsOverlap);
}

TEST_CASE("ultrametric structure flags") {
  SUBCASE("one close pair") {
    const FiniteSpace u = ultra4();
    const UltrametricStructure s =
        ultrametric_structure(u, u.part("A"), u.part("B"));
    CHECK(s.diam_a == rat(2));
    CHECK(s.diam_b == rat(2));
    CHECK(s.diam_union == rat(2));
    CHECK(s.dist == rat(1));
    CHECK(!s.b0_equals_b);
    CHECK(s.all_pairs_best);  // a0 x b0 is the single pair
    CHECK(!s.graph_connected);
    CHECK(!s.graph_complete_bipartite);
  }
  SUBCASE("the trivial metric is as connected as it gets") {
    const FiniteSpace t = space_of(
        {"a1", "a2", "b1", "b2"},
        {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}},
        {{"A", {"a1", "a2"}}, {"B", {"b1", "b2"}}});
    const UltrametricStructure s =
        ultrametric_structure(t, t.part("A"), t.part("B"));
    CHECK(s.dist == rat(1));
    CHECK(s.b0_equals_b);
    CHECK(s.all_pairs_best);
    CHECK(s.graph_connected);
    CHECK(s.graph_complete_bipartite);
    CHECK(s.diam_union <= s.dist);
  }
  SUBCASE("metric spaces are refused") {
    const FiniteSpace h = hamming();
    CHECK(thrown_code([&] {
            ultrametric_structure(h, h.part("A"), h.part("B"));
          }) == Errc::NotUltrametric);
  }
}
