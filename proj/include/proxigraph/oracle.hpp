#ifndef PROXIGRAPH_ORACLE_HPP
#define PROXIGRAPH_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <set>

#include "proxigraph/errors.hpp"

namespace proxigraph {

/// Brute-force enumeration for one part-size pair (p, q): which edge sets
/// over the fixed parts a_1..a_p, b_1..b_q arise as the min-attaining
/// cross pairs of a symmetric matrix with off-diagonal values in {1, 2}.
/// Edge sets are bit masks; bit i*q + j stands for the edge (a_i, b_j).
///
/// {1, 2}-valued matrices are automatically metrics (2 <= 1 + 1), and the
/// witness constructions never need other values, so these sets are
/// complete answers, not samples. Everything here runs on raw int
/// matrices, deliberately bypassing FiniteSpace, classify and the
/// proximity module, so it can serve as an independent oracle for them.
struct MaskOracle {
  std::size_t part_a = 0;
  std::size_t part_b = 0;
  std::set<std::uint64_t> metric;       // all {1,2} matrices
  std::set<std::uint64_t> ultrametric;  // strong-triangle survivors
  std::set<std::uint64_t> two_valued;   // single off-diagonal value, |D| = 2
};

/// Enumerates all 2^C(p+q, 2) matrices. TooLarge beyond 7 points total.
MaskOracle enumerate_masks(std::size_t part_a, std::size_t part_b);

}  // namespace proxigraph

#endif
