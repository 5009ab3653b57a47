#ifndef PROXIGRAPH_GENERATORS_HPP
#define PROXIGRAPH_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "proxigraph/bigraph.hpp"
#include "proxigraph/dynamics.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

/// Uniform draw from [0, bound). All generator randomness goes through
/// here instead of std::uniform_int_distribution, whose output is
/// implementation-defined; sweeps must replay identically on any stdlib.
std::size_t pick(std::mt19937_64& rng, std::size_t bound);

/// The graph with parts a1..ap and b1..bq whose edges are the set bits of
/// mask, bit i*q + j meaning (a_{i+1}, b_{j+1}). Matches the oracle's mask
/// convention. Infinite annotations are only legal with mask 0.
BipartiteGraph graph_from_mask(std::size_t part_a, std::size_t part_b,
                               std::uint64_t mask, bool a_infinite = false,
                               bool b_infinite = false);

/// Random ultrametric on points p1..pn with values in {1..levels}, built
/// from a chain of successively refined partitions: d(x, y) is the least
/// level whose partition puts x and y in one block.
FiniteSpace random_ultrametric(std::mt19937_64& rng, std::size_t n,
                               std::size_t levels = 4);

/// Random semimetric on p1..pn with distances drawn from a small rational
/// pool; repeats are frequent on purpose so extrema tie often.
FiniteSpace random_semimetric(std::mt19937_64& rng, std::size_t n);

struct PartPair {
  std::vector<std::size_t> a;  // ascending, disjoint from b, both nonempty
  std::vector<std::size_t> b;
};

/// Random disjoint nonempty parts; some points may end up in neither.
/// Needs n >= 2.
PartPair random_parts(std::mt19937_64& rng, std::size_t n);

/// Uniformly random cyclic table as labels: each point of A to some point
/// of B and vice versa.
std::map<std::string, std::string> random_cyclic_table(
    std::mt19937_64& rng, const FiniteSpace& space,
    std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Rejection-samples cyclic tables until one is nonexpansive. Falls back
/// to collapsing everything onto one best proximity pair, which is always
/// nonexpansive, so this cannot fail.
ValidatedMap random_cyclic_nonexpansive(std::mt19937_64& rng,
                                        const FiniteSpace& space,
                                        std::span<const std::size_t> a,
                                        std::span<const std::size_t> b,
                                        std::size_t tries = 40);

}  // namespace proxigraph

#endif
