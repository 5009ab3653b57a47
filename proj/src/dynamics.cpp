#include "proxigraph/dynamics.hpp"

#include <algorithm>
#include <set>

#include "proxigraph/proximity.hpp"

namespace proxigraph {

ValidatedMap validate_map(const std::map<std::string, std::string>& table,
                          const FiniteSpace& space,
                          std::span<const std::size_t> a,
                          std::span<const std::size_t> b) {
  require_parts(space, a, b);
  std::set<std::size_t> in_a(a.begin(), a.end());
  std::set<std::size_t> in_b(b.begin(), b.end());

  CyclicMap f;
  f.part_a.assign(a.begin(), a.end());
  f.part_b.assign(b.begin(), b.end());
  for (const auto& [key, value] : table) {
    auto ki = space.index_of(key);
    if (!ki)
      fail(Errc::UnknownPoint, "map key " + key + " is not a point of the space");
    if (!in_a.count(*ki) && !in_b.count(*ki))
      fail(Errc::UnknownPoint, "map key " + key + " lies in neither part");
    auto vi = space.index_of(value);
    if (!vi)
      fail(Errc::UnknownPoint,
           "map value " + value + " is not a point of the space");
    f.table[*ki] = *vi;
  }

  std::vector<std::size_t> domain(a.begin(), a.end());
  domain.insert(domain.end(), b.begin(), b.end());
  std::sort(domain.begin(), domain.end());
  for (std::size_t x : domain)
    if (!f.table.count(x))
      fail(Errc::NotTotal, "no image for " + space.label(x));
  for (const auto& [x, fx] : f.table) {
    if (in_a.count(x) && !in_b.count(fx))
      fail(Errc::NotCyclic, space.label(x) + " maps to " + space.label(fx) +
                                ", which is outside part B");
    if (in_b.count(x) && !in_a.count(fx))
      fail(Errc::NotCyclic, space.label(x) + " maps to " + space.label(fx) +
                                ", which is outside part A");
  }

  ValidatedMap out{std::move(f), true, std::nullopt};
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      std::size_t x = domain[i], y = domain[j];
      if (space.dist(out.map.table.at(x), out.map.table.at(y)) >
          space.dist(x, y)) {
        out.nonexpansive = false;
        out.expansion = {x, y};
        return out;
      }
    }
  return out;
}

namespace {

void require_nonexpansive(const ValidatedMap& f, const FiniteSpace& space) {
  if (f.nonexpansive) return;
  std::string detail = "map expands a pair";
  if (f.expansion)
    detail = "map expands (" + space.label((*f.expansion)[0]) + ", " +
             space.label((*f.expansion)[1]) + ")";
  fail(Errc::PreconditionFailed, detail);
}

}  // namespace

HomomorphismVerdict verify_self_homomorphism(const ValidatedMap& f,
                                             const FiniteSpace& space,
                                             std::span<const std::size_t> a,
                                             std::span<const std::size_t> b) {
  require_nonexpansive(f, space);
  BipartiteGraph g = proximinal_graph(space, a, b);
  std::map<std::size_t, std::size_t> a_pos, b_pos;
  for (std::size_t k = 0; k < a.size(); ++k) a_pos[a[k]] = k;
  for (std::size_t k = 0; k < b.size(); ++k) b_pos[b[k]] = k;
  for (auto [pa, pb] : g.edges()) {
    std::size_t x = a[pa], y = b[pb];
    // F swaps parts, so the image edge reads (F(y), F(x)) as an (A,B) pair
    std::size_t fx = f.map.table.at(x), fy = f.map.table.at(y);
    if (!g.edges().count({a_pos.at(fy), b_pos.at(fx)}))
      return {false, std::array<std::size_t, 2>{x, y}};
  }
  return {true, std::nullopt};
}

std::vector<Rat> orbit_check(const ValidatedMap& f, const FiniteSpace& space,
                             std::size_t a0, std::size_t b0, std::size_t n) {
  if (n == 0) fail(Errc::InvalidIndex, "orbit length must be positive");
  require_nonexpansive(f, space);
  const auto& pa = f.map.part_a;
  const auto& pb = f.map.part_b;
  if (std::find(pa.begin(), pa.end(), a0) == pa.end())
    fail(Errc::UnknownPoint, "orbit start " + space.label(a0) +
                                 " does not lie in part A");
  if (std::find(pb.begin(), pb.end(), b0) == pb.end())
    fail(Errc::UnknownPoint, "orbit start " + space.label(b0) +
                                 " does not lie in part B");
  if (space.dist(a0, b0) != set_distance(space, pa, pb))
    fail(Errc::NotBestProximityPair,
         "(" + space.label(a0) + ", " + space.label(b0) +
             ") does not attain dist(A, B)");
  std::vector<Rat> out;
  out.reserve(n);
  std::size_t x = a0, y = b0;
  for (std::size_t k = 0; k < n; ++k) {
    x = f.map.table.at(x);
    y = f.map.table.at(y);
    out.push_back(space.dist(x, y));
  }
  return out;
}

}  // namespace proxigraph
