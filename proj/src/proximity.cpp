#include "proxigraph/proximity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace proxigraph {

namespace {

void check_subset(const FiniteSpace& space, std::span<const std::size_t> subset,
                  const char* role) {
  if (subset.empty()) fail(Errc::EmptySet, std::string(role) + " is empty");
  std::set<std::size_t> seen;
  for (std::size_t i : subset) {
    if (i >= space.size())
      fail(Errc::InvalidIndex,
           std::string(role) + " index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second)
      fail(Errc::DuplicateLabel,
           std::string(role) + " repeats point " + space.label(i));
  }
}

bool better(ProxMode mode, const Rat& candidate, const Rat& incumbent) {
  return mode == ProxMode::Proximinal ? candidate < incumbent
                                      : candidate > incumbent;
}

// Argbest of d(x, .) over the subset, least point index on ties.
std::size_t extremal_in(const FiniteSpace& space, std::size_t x,
                        std::span<const std::size_t> subset, ProxMode mode) {
  std::size_t best = subset.front();
  for (std::size_t s : subset) {
    const Rat& d = space.dist(x, s);
    if (better(mode, d, space.dist(x, best)) ||
        (d == space.dist(x, best) && s < best))
      best = s;
  }
  return best;
}

}  // namespace

void require_parts(const FiniteSpace& space, std::span<const std::size_t> a,
                   std::span<const std::size_t> b) {
  check_subset(space, a, "part A");
  check_subset(space, b, "part B");
  std::set<std::size_t> in_a(a.begin(), a.end());
  for (std::size_t j : b)
    if (in_a.count(j))
      fail(Errc::PartsOverlap, "point " + space.label(j) + " lies in both parts");
}

std::vector<std::size_t> is_proximinal(const FiniteSpace& space,
                                       std::span<const std::size_t> subset) {
  check_subset(space, subset, "subset");
  std::vector<std::size_t> witness(space.size());
  for (std::size_t x = 0; x < space.size(); ++x)
    witness[x] = extremal_in(space, x, subset, ProxMode::Proximinal);
  return witness;
}

ProximityReport proximity_report(const FiniteSpace& space,
                                 std::span<const std::size_t> a,
                                 std::span<const std::size_t> b, ProxMode mode) {
  require_parts(space, a, b);

  ProximityReport report;
  report.mode = mode;
  report.extremum = space.dist(a.front(), b.front());
  for (std::size_t i : a)
    for (std::size_t j : b)
      if (better(mode, space.dist(i, j), report.extremum))
        report.extremum = space.dist(i, j);

  std::vector<std::size_t> sorted_a(a.begin(), a.end());
  std::vector<std::size_t> sorted_b(b.begin(), b.end());
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  for (std::size_t i : sorted_a)
    for (std::size_t j : sorted_b)
      if (space.dist(i, j) == report.extremum) report.pairs.emplace_back(i, j);
  for (std::size_t i : sorted_a)
    if (std::any_of(sorted_b.begin(), sorted_b.end(), [&](std::size_t j) {
          return space.dist(i, j) == report.extremum;
        }))
      report.a0.push_back(i);
  for (std::size_t j : sorted_b)
    if (std::any_of(sorted_a.begin(), sorted_a.end(), [&](std::size_t i) {
          return space.dist(i, j) == report.extremum;
        }))
      report.b0.push_back(j);

  report.witness_a.resize(space.size());
  report.witness_b.resize(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    report.witness_a[x] = extremal_in(space, x, a, mode);
    report.witness_b[x] = extremal_in(space, x, b, mode);
  }
  return report;
}

namespace {

BipartiteGraph graph_from_report(const FiniteSpace& space,
                                 std::span<const std::size_t> a,
                                 std::span<const std::size_t> b,
                                 const ProximityReport& report) {
  std::map<std::size_t, std::size_t> a_pos, b_pos;
  std::vector<std::string> labels_a, labels_b;
  for (std::size_t k = 0; k < a.size(); ++k) {
    a_pos[a[k]] = k;
    labels_a.push_back(space.label(a[k]));
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    b_pos[b[k]] = k;
    labels_b.push_back(space.label(b[k]));
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [i, j] : report.pairs) edges.emplace(a_pos.at(i), b_pos.at(j));
  return BipartiteGraph(std::move(labels_a), std::move(labels_b),
                        std::move(edges));
}

}  // namespace

BipartiteGraph proximinal_graph(const FiniteSpace& space,
                                std::span<const std::size_t> a,
                                std::span<const std::size_t> b) {
  return graph_from_report(
      space, a, b, proximity_report(space, a, b, ProxMode::Proximinal));
}

BipartiteGraph farthest_graph(const FiniteSpace& space,
                              std::span<const std::size_t> a,
                              std::span<const std::size_t> b) {
  return graph_from_report(space, a, b,
                           proximity_report(space, a, b, ProxMode::Farthest));
}

UltrametricStructure ultrametric_structure(const FiniteSpace& space,
                                           std::span<const std::size_t> a,
                                           std::span<const std::size_t> b) {
  SpaceClass cls = classify(space);
  if (cls.level != Level::Ultrametric) {
    std::string detail = "space is only a " + std::string(to_string(cls.level));
    if (cls.violation) {
      auto [x, y, z] = *cls.violation;
      detail += " (witness " + space.label(x) + ", " + space.label(y) + ", " +
                space.label(z) + ")";
    }
    fail(Errc::NotUltrametric, detail);
  }

  ProximityReport report =
      proximity_report(space, a, b, ProxMode::Proximinal);
  std::vector<std::size_t> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());

  UltrametricStructure s;
  s.diam_a = diameter(space, a);
  s.diam_b = diameter(space, b);
  s.diam_union = diameter(space, all);
  s.dist = report.extremum;

  std::vector<std::size_t> sorted_b(b.begin(), b.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  s.b0_equals_b = report.b0 == sorted_b;
  s.all_pairs_best =
      report.pairs.size() == report.a0.size() * report.b0.size();

  BipartiteGraph g = graph_from_report(space, a, b, report);
  s.graph_connected = components(g).size() == 1;
  s.graph_complete_bipartite = is_complete_bipartite(g);
  return s;
}

}  // namespace proxigraph
