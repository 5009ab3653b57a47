#include "proxigraph/bigraph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

namespace proxigraph {

BipartiteGraph::BipartiteGraph(std::vector<std::string> part_a,
                               std::vector<std::string> part_b,
                               std::set<std::pair<std::size_t, std::size_t>> edges,
                               bool a_infinite, bool b_infinite)
    : a_(std::move(part_a)),
      b_(std::move(part_b)),
      edges_(std::move(edges)),
      a_infinite_(a_infinite),
      b_infinite_(b_infinite) {
  degree_.assign(a_.size() + b_.size(), 0);
  for (const auto& [i, j] : edges_) {
    assert(i < a_.size() && j < b_.size());
    ++degree_[i];
    ++degree_[a_.size() + j];
  }
}

std::optional<std::size_t> BipartiteGraph::vertex_by_label(
    std::string_view label) const {
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] == label) return i;
  for (std::size_t j = 0; j < b_.size(); ++j)
    if (b_[j] == label) return a_.size() + j;
  return std::nullopt;
}

bool BipartiteGraph::adjacent(std::size_t u, std::size_t v) const {
  if (in_part_a(u) == in_part_a(v)) return false;
  if (in_part_a(v)) std::swap(u, v);
  return edges_.contains({u, v - a_.size()});
}

std::vector<std::size_t> BipartiteGraph::degree_multiset() const {
  std::vector<std::size_t> degrees = degree_;
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

BipartiteGraph validate_graph(const RawGraph& raw) {
  if (raw.part_a.empty()) fail(Errc::EmptyPart, "part A is empty");
  if (raw.part_b.empty()) fail(Errc::EmptyPart, "part B is empty");

  std::unordered_map<std::string_view, std::pair<bool, std::size_t>> where;
  auto index_part = [&](const std::vector<std::string>& part, bool is_a) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      auto [it, inserted] = where.emplace(part[i], std::make_pair(is_a, i));
      if (!inserted) {
        if (it->second.first != is_a)
          fail(Errc::PartsOverlap, "vertex '" + part[i] + "' is in both parts");
        fail(Errc::DuplicateLabel, "vertex '" + part[i] + "' repeats in a part");
      }
    }
  };
  index_part(raw.part_a, true);
  index_part(raw.part_b, false);

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : raw.edges) {
    auto iu = where.find(u);
    auto iv = where.find(v);
    if (iu == where.end()) fail(Errc::UnknownEndpoint, "'" + u + "'");
    if (iv == where.end()) fail(Errc::UnknownEndpoint, "'" + v + "'");
    if (iu->second.first == iv->second.first)
      fail(Errc::EdgeWithinPart, "{" + u + "," + v + "}");
    if (iu->second.first)
      edges.emplace(iu->second.second, iv->second.second);
    else
      edges.emplace(iv->second.second, iu->second.second);
  }

  if ((raw.a_infinite || raw.b_infinite) && !edges.empty())
    fail(Errc::EdgesOnInfiniteEmptyClaim,
         "a part is declared infinite but the edge list is not empty");

  return BipartiteGraph(raw.part_a, raw.part_b, std::move(edges), raw.a_infinite,
                        raw.b_infinite);
}

BipartiteGraph core(const BipartiteGraph& g) {
  if (g.empty()) fail(Errc::EmptyGraph, "core is defined for nonempty graphs");
  std::vector<bool> touched_a(g.part_a().size(), false);
  std::vector<bool> touched_b(g.part_b().size(), false);
  for (const auto& [i, j] : g.edges()) {
    touched_a[i] = true;
    touched_b[j] = true;
  }
  std::vector<std::string> a, b;
  std::vector<std::size_t> new_a(g.part_a().size()), new_b(g.part_b().size());
  for (std::size_t i = 0; i < g.part_a().size(); ++i)
    if (touched_a[i]) {
      new_a[i] = a.size();
      a.push_back(g.part_a()[i]);
    }
  for (std::size_t j = 0; j < g.part_b().size(); ++j)
    if (touched_b[j]) {
      new_b[j] = b.size();
      b.push_back(g.part_b()[j]);
    }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [i, j] : g.edges()) edges.emplace(new_a[i], new_b[j]);
  return BipartiteGraph(std::move(a), std::move(b), std::move(edges));
}

std::vector<std::vector<std::size_t>> components(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : g.edges()) {
    std::size_t ru = find(i), rv = find(g.b_vertex(j));
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> result;
  result.reserve(by_root.size());
  for (auto& [root, members] : by_root) result.push_back(std::move(members));
  return result;
}

bool is_complete_bipartite(const BipartiteGraph& g) {
  return g.edges().size() == g.part_a().size() * g.part_b().size();
}

Decomposition cbd_decompose(const BipartiteGraph& g) {
  if (g.empty()) fail(Errc::EmptyGraph, "nothing to decompose");
  std::vector<bool> isolated(g.vertex_count(), true);
  for (const auto& [i, j] : g.edges())
    isolated[i] = isolated[g.b_vertex(j)] = false;

  Decomposition result;
  result.all_complete = true;
  for (const auto& comp : components(g)) {
    if (comp.size() == 1 && isolated[comp.front()]) continue;
    Decomposition::Component record;
    for (std::size_t v : comp)
      (g.in_part_a(v) ? record.a_side : record.b_side).push_back(v);
    std::size_t edges_inside = 0;
    for (std::size_t u : record.a_side)
      for (std::size_t v : record.b_side)
        if (g.adjacent(u, v)) ++edges_inside;
    record.complete =
        edges_inside == record.a_side.size() * record.b_side.size();
    result.all_complete = result.all_complete && record.complete;
    result.components.push_back(std::move(record));
  }
  return result;
}

bool verify_isomorphism(const std::map<std::string, std::string>& f,
                        const BipartiteGraph& g, const BipartiteGraph& h) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n || h.vertex_count() != n)
    fail(Errc::NotBijective, "map size does not match vertex counts");
  std::vector<std::size_t> image(n);
  std::vector<bool> hit(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = f.find(g.vertex_label(v));
    if (it == f.end())
      fail(Errc::NotBijective, "no image for '" + g.vertex_label(v) + "'");
    auto w = h.vertex_by_label(it->second);
    if (!w) fail(Errc::NotBijective, "image '" + it->second + "' is not in the target");
    if (hit[*w]) fail(Errc::NotBijective, "image '" + it->second + "' repeats");
    hit[*w] = true;
    image[v] = *w;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(image[u], image[v])) return false;
  return true;
}

namespace {

struct IsoSearch {
  const BipartiteGraph& g;
  const BipartiteGraph& h;
  bool part_respecting;
  std::vector<std::size_t> order;       // g vertices, most-constrained first
  std::vector<std::size_t> image;       // g vertex -> h vertex
  std::vector<bool> used;               // h vertex taken
  std::vector<bool> assigned;           // g vertex mapped

  bool consistent(std::size_t v, std::size_t w) const {
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      if (assigned[u] && g.adjacent(u, v) != h.adjacent(image[u], w)) return false;
    return true;
  }

  bool orientation_ok(std::size_t v, std::size_t w, bool a_to_a) const {
    if (!part_respecting) return true;
    return (g.in_part_a(v) == a_to_a) == h.in_part_a(w);
  }

  bool extend(std::size_t depth, bool a_to_a) {
    if (depth == order.size()) return true;
    std::size_t v = order[depth];
    for (std::size_t w = 0; w < h.vertex_count(); ++w) {
      if (used[w] || h.degree(w) != g.degree(v)) continue;
      if (!orientation_ok(v, w, a_to_a) || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      assigned[v] = true;
      if (extend(depth + 1, a_to_a)) return true;
      used[w] = false;
      assigned[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<std::string, std::string>> find_isomorphism(
    const BipartiteGraph& g, const BipartiteGraph& h,
    const IsomorphismOptions& options) {
  if (g.vertex_count() > options.max_vertices ||
      h.vertex_count() > options.max_vertices)
    fail(Errc::TooLarge, "instance exceeds " + std::to_string(options.max_vertices) +
                             " vertices");
  if (g.vertex_count() != h.vertex_count() ||
      g.edges().size() != h.edges().size() ||
      g.degree_multiset() != h.degree_multiset())
    return std::nullopt;

  IsoSearch search{g, h, options.part_respecting, {}, {}, {}, {}};
  search.order.resize(g.vertex_count());
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t u, std::size_t v) {
                     return g.degree(u) > g.degree(v);
                   });
  search.image.assign(g.vertex_count(), 0);

  for (bool a_to_a : {true, false}) {
    search.used.assign(h.vertex_count(), false);
    search.assigned.assign(g.vertex_count(), false);
    if (search.extend(0, a_to_a)) {
      std::map<std::string, std::string> f;
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        f[g.vertex_label(v)] = h.vertex_label(search.image[v]);
      return f;
    }
    if (!options.part_respecting) break;  // single pass; orientation is free
  }
  return std::nullopt;
}

}  // namespace proxigraph
