#include "proxigraph/realize.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "proxigraph/proximity.hpp"

namespace proxigraph {

const char* to_string(Target target) {
  switch (target) {
    case Target::ProximinalMetric: return "proximinal-metric";
    case Target::ProximinalUltrametric: return "proximinal-ultrametric";
    case Target::Farthest: return "farthest";
  }
  return "?";
}

const char* to_string(DecisionLevel level) {
  return level == DecisionLevel::ExactParts ? "exact-parts" : "up-to-isomorphism";
}

const char* to_string(Reason reason) {
  switch (reason) {
    case Reason::NonemptyGraph: return "nonempty graph";
    case Reason::CoreCompletelyDecomposable:
      return "core decomposes into complete bipartite components";
    case Reason::CoreComponentNotCompleteBipartite:
      return "core component not complete bipartite";
    case Reason::EmptyBothPartsInfinite:
      return "empty graph with both parts infinite";
    case Reason::EmptyFinitePart: return "empty graph with a finite part";
    case Reason::EmptySomePartInfinite:
      return "empty graph with an infinite part";
    case Reason::EmptyBothPartsFinite:
      return "empty graph with both parts finite";
    case Reason::EmptyInfiniteVertexSet:
      return "empty graph with infinitely many vertices";
    case Reason::FiniteAndEmpty: return "finite and empty graph";
  }
  return "?";
}

const char* to_string(FamilyKind kind) {
  return kind == FamilyKind::EmptyProximinal ? "empty-proximinal"
                                             : "empty-farthest";
}

const char* to_string(Part part) { return part == Part::A ? "A" : "B"; }

namespace {

void check_point(const FamilyPoint& p) {
  if (p.ordinal < 1)
    fail(Errc::InvalidIndex,
         "family ordinal must be positive, got " + std::to_string(p.ordinal));
}

}  // namespace

std::int64_t CountableFamily::grade(const FamilyPoint& p) const {
  if (kind_ != FamilyKind::EmptyProximinal)
    fail(Errc::WrongFamilyKind, "grades exist only in the empty-proximinal family");
  check_point(p);
  return p.part == Part::A ? 2 * p.ordinal : 2 * p.ordinal - 1;
}

std::int64_t CountableFamily::block_index(const FamilyPoint& p) const {
  if (kind_ != FamilyKind::EmptyFarthest)
    fail(Errc::WrongFamilyKind, "blocks exist only in the empty-farthest family");
  check_point(p);
  if (p.part != Part::B)
    fail(Errc::InvalidIndex, "only part B is partitioned into blocks");
  return p.ordinal;
}

Rat CountableFamily::proximinal_rule(std::int64_t grade_x, std::int64_t grade_y,
                                     bool same_point) {
  if (grade_x < 1 || grade_y < 1)
    fail(Errc::InvalidIndex, "grades must be positive");
  if (same_point) return Rat(0);
  if (grade_x == grade_y) return Rat(1);
  return std::max(Rat(grade_x + 1, grade_x), Rat(grade_y + 1, grade_y));
}

Rat CountableFamily::distance(const FamilyPoint& p, const FamilyPoint& q) const {
  check_point(p);
  check_point(q);
  if (p == q) return Rat(0);
  if (kind_ == FamilyKind::EmptyProximinal)
    return proximinal_rule(grade(p), grade(q), false);
  if (p.part == q.part) return Rat(1);
  std::int64_t i = block_index(p.part == Part::B ? p : q);
  return Rat(1) + Rat(i, i + 1);
}

Rat CountableFamily::extremum() const {
  return kind_ == FamilyKind::EmptyProximinal ? Rat(1) : Rat(2);
}

bool CountableFamily::attained() const { return false; }

CountableFamily::Approximation CountableFamily::best_approximation(
    const FamilyPoint& x, Part side) const {
  if (kind_ != FamilyKind::EmptyProximinal)
    fail(Errc::WrongFamilyKind,
         "the empty-farthest family makes no proximinality claim");
  check_point(x);
  if (x.part == side) return {x, Rat(0)};
  // Candidates on the other side carry grades of the opposite parity.
  // Any grade above Phi(x) yields d = 1 + 1/Phi(x), any grade below yields
  // strictly more, so the least grade exceeding Phi(x) wins; that grade is
  // Phi(x) + 1, which always has the target side's parity.
  std::int64_t g = grade(x);
  std::int64_t witness_grade = g + 1;
  std::int64_t ordinal =
      side == Part::A ? witness_grade / 2 : (witness_grade + 1) / 2;
  return {FamilyPoint{side, ordinal}, Rat(g + 1, g)};
}

CountableFamily countable_family(FamilyKind kind) {
  return CountableFamily(kind);
}

namespace {

template <typename Dist>
FiniteSpace space_on_vertices(const BipartiteGraph& g, Dist d) {
  std::size_t n = g.vertex_count();
  std::vector<std::string> points;
  points.reserve(n);
  for (std::size_t v = 0; v < n; ++v) points.push_back(g.vertex_label(v));
  std::vector<Rat> matrix(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) matrix[i * n + j] = d(i, j);
  std::map<std::string, std::vector<std::size_t>> parts;
  parts["A"].resize(g.part_a().size());
  std::iota(parts["A"].begin(), parts["A"].end(), std::size_t{0});
  parts["B"].resize(g.part_b().size());
  std::iota(parts["B"].begin(), parts["B"].end(), g.part_a().size());
  return FiniteSpace(std::move(points), std::move(matrix), std::move(parts));
}

std::string component_labels(const BipartiteGraph& g,
                             const Decomposition::Component& comp) {
  std::string out = "{";
  bool first = true;
  for (const auto* side : {&comp.a_side, &comp.b_side})
    for (std::size_t v : *side) {
      if (!first) out += ", ";
      out += g.vertex_label(v);
      first = false;
    }
  return out + "}";
}

}  // namespace

FiniteSpace trivial_metric(const BipartiteGraph& g) {
  return space_on_vertices(g, [](std::size_t, std::size_t) { return Rat(1); });
}

FiniteSpace realize_metric(const BipartiteGraph& g) {
  if (g.empty()) fail(Errc::EmptyGraph, "no edges to realize");
  return space_on_vertices(g, [&](std::size_t i, std::size_t j) {
    return g.adjacent(i, j) ? Rat(1) : Rat(2);
  });
}

FiniteSpace realize_farthest(const BipartiteGraph& g) {
  if (g.empty()) fail(Errc::EmptyGraph, "no edges to realize");
  return space_on_vertices(g, [&](std::size_t i, std::size_t j) {
    return g.adjacent(i, j) ? Rat(2) : Rat(1);
  });
}

FiniteSpace realize_ultrametric(const BipartiteGraph& g) {
  if (g.empty()) fail(Errc::EmptyGraph, "no edges to realize");
  Decomposition dec = cbd_decompose(g);
  for (const auto& comp : dec.components)
    if (!comp.complete)
      fail(Errc::NotCompletelyDecomposable,
           "component " + component_labels(g, comp) +
               " is not complete bipartite");
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp_of(g.vertex_count(), none);
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    for (std::size_t v : dec.components[c].a_side) comp_of[v] = c;
    for (std::size_t v : dec.components[c].b_side) comp_of[v] = c;
  }
  // isolated vertices keep component "none", hence distance 2 to everything
  return space_on_vertices(g, [&](std::size_t i, std::size_t j) {
    return comp_of[i] != none && comp_of[i] == comp_of[j] ? Rat(1) : Rat(2);
  });
}

MinDistanceSet min_distance_set_size(const BipartiteGraph& g) {
  if (g.empty()) fail(Errc::EmptyGraph, "no edges to realize");
  // A size-2 distance set leaves a single constant off-diagonal value, and
  // scaling never moves the attaining pairs, so the trivial metric exhausts
  // every k = 2 candidate.
  FiniteSpace t = trivial_metric(g);
  if (proximinal_graph(t, t.part("A"), t.part("B")) == g)
    return {2, std::move(t)};
  return {3, realize_metric(g)};
}

Decision decide(const BipartiteGraph& g, Target target, DecisionLevel level) {
  Decision d;
  d.target = target;
  d.level = level;

  if (!g.empty()) {
    // nonempty graphs are finite: infinite annotations require an empty
    // edge set, so both levels agree from here on
    if (target == Target::ProximinalUltrametric) {
      Decomposition dec = cbd_decompose(g);
      auto bad = std::find_if(dec.components.begin(), dec.components.end(),
                              [](const auto& c) { return !c.complete; });
      if (bad != dec.components.end()) {
        d.reason = Reason::CoreComponentNotCompleteBipartite;
        d.detail = component_labels(g, *bad);
        return d;
      }
      d.realizable = true;
      d.reason = Reason::CoreCompletelyDecomposable;
      d.space = realize_ultrametric(g);
      return d;
    }
    d.realizable = true;
    d.reason = Reason::NonemptyGraph;
    if (is_complete_bipartite(g))
      d.space = trivial_metric(g);
    else
      d.space = target == Target::Farthest ? realize_farthest(g)
                                           : realize_metric(g);
    return d;
  }

  bool both_infinite = g.a_infinite() && g.b_infinite();
  bool some_infinite = g.a_infinite() || g.b_infinite();

  if (level == DecisionLevel::UpToIsomorphism) {
    if (some_infinite) {
      d.realizable = true;
      d.reason = Reason::EmptyInfiniteVertexSet;
      d.family = target == Target::Farthest ? FamilyKind::EmptyFarthest
                                            : FamilyKind::EmptyProximinal;
    } else {
      d.reason = Reason::FiniteAndEmpty;
    }
    return d;
  }

  if (target == Target::Farthest) {
    if (some_infinite) {
      d.realizable = true;
      d.reason = Reason::EmptySomePartInfinite;
      d.family = FamilyKind::EmptyFarthest;
    } else {
      d.reason = Reason::EmptyBothPartsFinite;
    }
    return d;
  }

  if (both_infinite) {
    d.realizable = true;
    d.reason = Reason::EmptyBothPartsInfinite;
    d.family = FamilyKind::EmptyProximinal;
  } else {
    d.reason = Reason::EmptyFinitePart;
  }
  return d;
}

}  // namespace proxigraph
