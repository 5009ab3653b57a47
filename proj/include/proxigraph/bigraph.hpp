#ifndef PROXIGRAPH_BIGRAPH_HPP
#define PROXIGRAPH_BIGRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxigraph/errors.hpp"

namespace proxigraph {

/// Raw graph description, before validation.
struct RawGraph {
  std::vector<std::string> part_a;
  std::vector<std::string> part_b;
  std::vector<std::pair<std::string, std::string>> edges;
  bool a_infinite = false;
  bool b_infinite = false;
};

/// Bipartite graph with fixed parts A and B. Vertices carry string labels;
/// edges always join the two parts. A part may be annotated as a finite
/// sample of an infinite part, but only when the edge set is empty.
///
/// Global vertex ids: [0,|A|) lists part A, [|A|,|A|+|B|) part B, both in
/// declaration order.
class BipartiteGraph {
 public:
  BipartiteGraph(std::vector<std::string> part_a, std::vector<std::string> part_b,
                 std::set<std::pair<std::size_t, std::size_t>> edges,
                 bool a_infinite = false, bool b_infinite = false);

  const std::vector<std::string>& part_a() const { return a_; }
  const std::vector<std::string>& part_b() const { return b_; }
  /// Edges as (index into A, index into B), ordered.
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  bool a_infinite() const { return a_infinite_; }
  bool b_infinite() const { return b_infinite_; }
  bool finite() const { return !a_infinite_ && !b_infinite_; }
  bool empty() const { return edges_.empty(); }

  std::size_t vertex_count() const { return a_.size() + b_.size(); }
  bool in_part_a(std::size_t v) const { return v < a_.size(); }
  const std::string& vertex_label(std::size_t v) const {
    return in_part_a(v) ? a_[v] : b_[v - a_.size()];
  }
  std::optional<std::size_t> vertex_by_label(std::string_view label) const;

  std::size_t a_vertex(std::size_t a_index) const { return a_index; }
  std::size_t b_vertex(std::size_t b_index) const { return a_.size() + b_index; }

  /// Adjacency by global id; same-part pairs are never adjacent.
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return degree_[v]; }
  std::vector<std::size_t> degree_multiset() const;  // sorted ascending

  bool operator==(const BipartiteGraph& other) const = default;

 private:
  std::vector<std::string> a_, b_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::size_t> degree_;
  bool a_infinite_ = false, b_infinite_ = false;
};

/// Connected components of the non-isolated subgraph, plus per-component
/// completeness. Vertex ids refer to the graph the decomposition was
/// computed from.
struct Decomposition {
  struct Component {
    std::vector<std::size_t> a_side;  // global ids, ascending
    std::vector<std::size_t> b_side;
    bool complete = false;
  };
  std::vector<Component> components;
  bool all_complete = false;
};

/// Checks all invariants on raw data. Throws DomainError with codes
/// PartsOverlap, EmptyPart, DuplicateLabel, EdgeWithinPart, UnknownEndpoint,
/// EdgesOnInfiniteEmptyClaim. Edge endpoint order in the input is free.
BipartiteGraph validate_graph(const RawGraph& raw);

/// The subgraph induced by non-isolated vertices, edges unchanged.
/// EmptyGraph when there are no edges.
BipartiteGraph core(const BipartiteGraph& g);

/// Connected components over all vertices (isolated ones are singletons),
/// each sorted ascending, ordered by least vertex id.
std::vector<std::vector<std::size_t>> components(const BipartiteGraph& g);

bool is_complete_bipartite(const BipartiteGraph& g);

/// Components of core(g) with completeness flags. EmptyGraph when g has no
/// edges.
Decomposition cbd_decompose(const BipartiteGraph& g);

/// True iff the given label bijection preserves adjacency both ways.
/// The bijection need not respect parts. NotBijective when f is not a
/// bijection from V(g) onto V(h).
bool verify_isomorphism(const std::map<std::string, std::string>& f,
                        const BipartiteGraph& g, const BipartiteGraph& h);

struct IsomorphismOptions {
  std::size_t max_vertices = 12;
  bool part_respecting = false;  // parts must map onto parts (either way around)
};

/// Backtracking search with degree pruning; small instances only (TooLarge
/// beyond the configured bound).
std::optional<std::map<std::string, std::string>> find_isomorphism(
    const BipartiteGraph& g, const BipartiteGraph& h,
    const IsomorphismOptions& options = {});

}  // namespace proxigraph

#endif
