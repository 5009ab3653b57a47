#include "proxigraph/generators.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>
#include <utility>

#include "proxigraph/proximity.hpp"

namespace proxigraph {

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  // modulo bias is irrelevant at test scale; stability across stdlibs is not
  return bound <= 1 ? 0 : static_cast<std::size_t>(rng() % bound);
}

BipartiteGraph graph_from_mask(std::size_t part_a, std::size_t part_b,
                               std::uint64_t mask, bool a_infinite,
                               bool b_infinite) {
  std::vector<std::string> a, b;
  for (std::size_t i = 0; i < part_a; ++i) a.push_back("a" + std::to_string(i + 1));
  for (std::size_t j = 0; j < part_b; ++j) b.push_back("b" + std::to_string(j + 1));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < part_a; ++i)
    for (std::size_t j = 0; j < part_b; ++j)
      if (mask & (std::uint64_t{1} << (i * part_b + j))) edges.emplace(i, j);
  return BipartiteGraph(std::move(a), std::move(b), std::move(edges),
                        a_infinite, b_infinite);
}

FiniteSpace random_ultrametric(std::mt19937_64& rng, std::size_t n,
                               std::size_t levels) {
  // cluster[lev][x]: block id of x at level lev+1; top level is one block
  std::vector<std::vector<std::size_t>> cluster(
      levels, std::vector<std::size_t>(n, 0));
  for (std::size_t lev = levels - 1; lev-- > 0;) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
    for (std::size_t x = 0; x < n; ++x) {
      std::pair<std::size_t, std::size_t> key{cluster[lev + 1][x],
                                              pick(rng, 3)};
      auto [it, fresh] = ids.emplace(key, ids.size());
      (void)fresh;
      cluster[lev][x] = it->second;
    }
  }

  std::vector<std::string> points;
  for (std::size_t x = 0; x < n; ++x) points.push_back("p" + std::to_string(x + 1));
  std::vector<Rat> matrix(n * n, Rat(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      std::size_t lev = 0;
      while (cluster[lev][x] != cluster[lev][y]) ++lev;
      matrix[x * n + y] = matrix[y * n + x] = rat(static_cast<std::int64_t>(lev) + 1);
    }
  return FiniteSpace(std::move(points), std::move(matrix));
}

FiniteSpace random_semimetric(std::mt19937_64& rng, std::size_t n) {
  static const Rat pool[] = {rat(1, 2), rat(1),    rat(3, 2),
                             rat(2),    rat(5, 2), rat(3)};
  std::vector<std::string> points;
  for (std::size_t x = 0; x < n; ++x) points.push_back("p" + std::to_string(x + 1));
  std::vector<Rat> matrix(n * n, Rat(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      matrix[x * n + y] = matrix[y * n + x] = pool[pick(rng, std::size(pool))];
  return FiniteSpace(std::move(points), std::move(matrix));
}

PartPair random_parts(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // Fisher-Yates by hand; std::shuffle is implementation-defined too
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(idx[i], idx[pick(rng, i + 1)]);

  std::size_t p = 1 + pick(rng, n - 1);
  std::size_t q = 1 + pick(rng, n - p);
  PartPair parts;
  parts.a.assign(idx.begin(), idx.begin() + p);
  parts.b.assign(idx.begin() + p, idx.begin() + p + q);
  std::sort(parts.a.begin(), parts.a.end());
  std::sort(parts.b.begin(), parts.b.end());
  return parts;
}

std::map<std::string, std::string> random_cyclic_table(
    std::mt19937_64& rng, const FiniteSpace& space,
    std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::map<std::string, std::string> table;
  for (std::size_t x : a) table[space.label(x)] = space.label(b[pick(rng, b.size())]);
  for (std::size_t y : b) table[space.label(y)] = space.label(a[pick(rng, a.size())]);
  return table;
}

ValidatedMap random_cyclic_nonexpansive(std::mt19937_64& rng,
                                        const FiniteSpace& space,
                                        std::span<const std::size_t> a,
                                        std::span<const std::size_t> b,
                                        std::size_t tries) {
  for (std::size_t t = 0; t < tries; ++t) {
    ValidatedMap vm =
        validate_map(random_cyclic_table(rng, space, a, b), space, a, b);
    if (vm.nonexpansive) return vm;
  }
  // Collapse everything onto one best proximity pair: images sit at
  // distance 0 or dist(A,B), which no source pair can undercut.
  ProximityReport report =
      proximity_report(space, a, b, ProxMode::Proximinal);
  auto [a0, b0] = report.pairs.front();
  std::map<std::string, std::string> table;
  for (std::size_t x : a) table[space.label(x)] = space.label(b0);
  for (std::size_t y : b) table[space.label(y)] = space.label(a0);
  return validate_map(table, space, a, b);
}

}  // namespace proxigraph
