#ifndef PROXIGRAPH_PROXIMITY_HPP
#define PROXIGRAPH_PROXIMITY_HPP

#include <span>
#include <vector>

#include "proxigraph/bigraph.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

enum class ProxMode { Proximinal, Farthest };

/// Everything the extremum over A x B determines: the value, the attaining
/// subsets and pairs, and a per-point witness map. In Proximinal mode the
/// witness is the best approximation in each part; in Farthest mode it is
/// the most distant point instead.
struct ProximityReport {
  ProxMode mode = ProxMode::Proximinal;
  Rat extremum;
  std::vector<std::size_t> a0;  // ascending point indices
  std::vector<std::size_t> b0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // attaining, sorted
  std::vector<std::size_t> witness_a;  // per point of X, index into the space
  std::vector<std::size_t> witness_b;
};

/// Raw material for the structure checks on ultrametric spaces: diameters,
/// the cross distance, and how the attaining sets and the graph sit
/// relative to each other.
struct UltrametricStructure {
  Rat diam_a;
  Rat diam_b;
  Rat diam_union;
  Rat dist;
  bool b0_equals_b = false;
  bool all_pairs_best = false;        // every pair of a0 x b0 attains dist
  bool graph_connected = false;
  bool graph_complete_bipartite = false;
};

/// Shared precondition of every two-part operation: both parts nonempty,
/// duplicate-free, in range, and disjoint.
void require_parts(const FiniteSpace& space, std::span<const std::size_t> a,
                   std::span<const std::size_t> b);

/// Best approximation in S for every point of X, ties broken by least
/// index. On a finite carrier the minimum is always attained.
std::vector<std::size_t> is_proximinal(const FiniteSpace& space,
                                       std::span<const std::size_t> subset);

ProximityReport proximity_report(const FiniteSpace& space,
                                 std::span<const std::size_t> a,
                                 std::span<const std::size_t> b, ProxMode mode);

/// Bipartite graph on parts (A,B) whose edges are the pairs attaining
/// dist(A,B).
BipartiteGraph proximinal_graph(const FiniteSpace& space,
                                std::span<const std::size_t> a,
                                std::span<const std::size_t> b);

/// Bipartite graph whose edges are the pairs attaining the maximum of d
/// over A x B.
BipartiteGraph farthest_graph(const FiniteSpace& space,
                              std::span<const std::size_t> a,
                              std::span<const std::size_t> b);

/// NotUltrametric unless the space satisfies the strong triangle
/// inequality; mixing regimes silently would report vacuous flags.
UltrametricStructure ultrametric_structure(const FiniteSpace& space,
                                           std::span<const std::size_t> a,
                                           std::span<const std::size_t> b);

}  // namespace proxigraph

#endif
