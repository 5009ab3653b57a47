#include "proxigraph/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace proxigraph {

MaskOracle enumerate_masks(std::size_t part_a, std::size_t part_b) {
  if (part_a == 0 || part_b == 0)
    fail(Errc::EmptyPart, "both parts need at least one vertex");
  std::size_t n = part_a + part_b;
  if (n > 7)
    fail(Errc::TooLarge, "matrix enumeration is bounded at 7 points, got " +
                             std::to_string(n));

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  MaskOracle out;
  out.part_a = part_a;
  out.part_b = part_b;
  int d[7][7] = {};
  std::uint64_t all_ones = std::uint64_t{1} << slots.size();
  for (std::uint64_t code = 0; code < all_ones; ++code) {
    for (std::size_t k = 0; k < slots.size(); ++k) {
      int v = 1 + static_cast<int>((code >> k) & 1);
      auto [i, j] = slots[k];
      d[i][j] = d[j][i] = v;
    }

    int best = 3;
    for (std::size_t i = 0; i < part_a; ++i)
      for (std::size_t j = part_a; j < n; ++j) best = std::min(best, d[i][j]);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < part_a; ++i)
      for (std::size_t j = part_a; j < n; ++j)
        if (d[i][j] == best) mask |= std::uint64_t{1} << (i * part_b + (j - part_a));

    out.metric.insert(mask);
    if (code == 0 || code == all_ones - 1) out.two_valued.insert(mask);

    bool ultra = true;
    for (std::size_t i = 0; i < n && ultra; ++i)
      for (std::size_t j = 0; j < n && ultra; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (d[i][j] > std::max(d[i][k], d[k][j])) {
            ultra = false;
            break;
          }
    if (ultra) out.ultrametric.insert(mask);
  }
  return out;
}

}  // namespace proxigraph
