#ifndef PROXIGRAPH_DYNAMICS_HPP
#define PROXIGRAPH_DYNAMICS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxigraph/space.hpp"

namespace proxigraph {

/// A cyclic self-map of A u B: F(a) in B for a in A, F(b) in A for b in B.
/// Maps are explicit finite tables over point indices; the parts the map
/// cycles over travel with it.
struct CyclicMap {
  std::map<std::size_t, std::size_t> table;
  std::vector<std::size_t> part_a;
  std::vector<std::size_t> part_b;
};

/// validate_map output: the map plus the nonexpansive verdict. A failed
/// verdict is data, not an error; the first expanding pair is the witness.
struct ValidatedMap {
  CyclicMap map;
  bool nonexpansive = false;
  std::optional<std::array<std::size_t, 2>> expansion;
};

/// Checks totality on A u B and the cyclic invariant (NotTotal / NotCyclic
/// name the offending point; UnknownPoint for labels outside the space or
/// keys outside both parts), then scans all pairs of A u B for an
/// expansion.
ValidatedMap validate_map(const std::map<std::string, std::string>& table,
                          const FiniteSpace& space,
                          std::span<const std::size_t> a,
                          std::span<const std::size_t> b);

struct HomomorphismVerdict {
  bool homomorphism = false;
  /// Edge (a, b) in point indices whose image is not an edge. A cyclic
  /// nonexpansive map can never produce one; a set value means the library
  /// contradicted itself.
  std::optional<std::array<std::size_t, 2>> broken_edge;
};

/// Checks that F maps every edge of the proximinal graph of (A,B) to an
/// edge. PreconditionFailed when the map is expansive.
HomomorphismVerdict verify_self_homomorphism(const ValidatedMap& f,
                                             const FiniteSpace& space,
                                             std::span<const std::size_t> a,
                                             std::span<const std::size_t> b);

/// d(F^k(a0), F^k(b0)) for k = 1..n over the map's own parts. Requires
/// (a0, b0) to attain dist(A,B) (NotBestProximityPair otherwise) and a
/// nonexpansive map (PreconditionFailed); every entry then equals
/// dist(A,B).
std::vector<Rat> orbit_check(const ValidatedMap& f, const FiniteSpace& space,
                             std::size_t a0, std::size_t b0, std::size_t n);

}  // namespace proxigraph

#endif
