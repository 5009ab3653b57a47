#include "proxigraph/sweep.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "proxigraph/dynamics.hpp"
#include "proxigraph/generators.hpp"
#include "proxigraph/oracle.hpp"
#include "proxigraph/proximity.hpp"
#include "proxigraph/realize.hpp"

namespace proxigraph {

namespace {

struct Counter {
  SweepResult result;

  explicit Counter(std::string suite) { result.suite = std::move(suite); }

  void instance() { ++result.instances; }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (result.failures++ == 0) result.first_failure = what;
  }
};

std::string ctx_mask(std::size_t p, std::size_t q, std::uint64_t mask) {
  return "parts (" + std::to_string(p) + "," + std::to_string(q) + ") mask " +
         std::to_string(mask);
}

std::string ctx_seeded(const char* what, std::size_t i) {
  return std::string(what) + " instance " + std::to_string(i);
}

void sweep_roundtrip(const SweepOptions& o, Counter& c) {
  for (std::size_t p = 1; p <= o.max_part_size; ++p)
    for (std::size_t q = 1; q <= o.max_part_size; ++q) {
      std::uint64_t masks = std::uint64_t{1} << (p * q);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        c.instance();
        BipartiteGraph g = graph_from_mask(p, q, mask);
        std::string ctx = ctx_mask(p, q, mask);
        if (mask == 0) {
          for (Target t : {Target::ProximinalMetric,
                           Target::ProximinalUltrametric, Target::Farthest})
            for (DecisionLevel lev :
                 {DecisionLevel::ExactParts, DecisionLevel::UpToIsomorphism})
              c.expect(!decide(g, t, lev).realizable,
                       ctx + ": empty finite graph declared realizable");
          continue;
        }
        FiniteSpace w = realize_metric(g);
        c.expect(classify(w).level != Level::Semimetric,
                 ctx + ": metric witness fails the triangle inequality");
        c.expect(distance_set(w).size() <= 3,
                 ctx + ": metric witness uses too many values");
        c.expect(proximinal_graph(w, w.part("A"), w.part("B")) == g,
                 ctx + ": proximinal round trip broke");
        FiniteSpace f = realize_farthest(g);
        c.expect(farthest_graph(f, f.part("A"), f.part("B")) == g,
                 ctx + ": farthest round trip broke");
        bool swapped = true;
        for (std::size_t i = 0; i < w.size() && swapped; ++i)
          for (std::size_t j = 0; j < w.size(); ++j)
            if (i != j && w.dist(i, j) + f.dist(i, j) != rat(3)) {
              swapped = false;
              break;
            }
        c.expect(swapped, ctx + ": witnesses are not 1<->2 value swaps");
        Decision d =
            decide(g, Target::ProximinalMetric, DecisionLevel::ExactParts);
        c.expect(d.realizable && d.space.has_value(),
                 ctx + ": decide refused a nonempty graph");
        if (d.space)
          c.expect(proximinal_graph(*d.space, d.space->part("A"),
                                    d.space->part("B")) == g,
                   ctx + ": decide witness fails to reproduce the graph");
      }
    }
}

void sweep_ultrametric_oracle(const SweepOptions& o, Counter& c) {
  for (std::size_t p = 1; p <= o.max_part_size; ++p)
    for (std::size_t q = 1; q <= o.max_part_size; ++q) {
      MaskOracle oracle = enumerate_masks(p, q);
      std::uint64_t masks = std::uint64_t{1} << (p * q);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        c.instance();
        BipartiteGraph g = graph_from_mask(p, q, mask);
        std::string ctx = ctx_mask(p, q, mask);
        Decision d = decide(g, Target::ProximinalUltrametric,
                            DecisionLevel::ExactParts);
        bool oracle_yes = oracle.ultrametric.count(mask) > 0;
        c.expect(d.realizable == oracle_yes,
                 ctx + ": decide disagrees with the matrix oracle");
        if (!d.realizable || mask == 0) continue;
        FiniteSpace w = realize_ultrametric(g);
        c.expect(classify(w).level == Level::Ultrametric,
                 ctx + ": witness is not ultrametric");
        c.expect(proximinal_graph(w, w.part("A"), w.part("B")) == g,
                 ctx + ": ultrametric round trip broke");
      }
    }
}

void sweep_min_distance(const SweepOptions& o, Counter& c) {
  for (std::size_t p = 1; p <= o.max_part_size; ++p)
    for (std::size_t q = 1; q <= o.max_part_size; ++q) {
      MaskOracle oracle = enumerate_masks(p, q);
      std::uint64_t masks = std::uint64_t{1} << (p * q);
      for (std::uint64_t mask = 1; mask < masks; ++mask) {
        c.instance();
        BipartiteGraph g = graph_from_mask(p, q, mask);
        std::string ctx = ctx_mask(p, q, mask);
        MinDistanceSet res = min_distance_set_size(g);
        bool two = oracle.two_valued.count(mask) > 0;
        c.expect(res.size == (two ? 2u : 3u),
                 ctx + ": answer disagrees with the enumeration");
        c.expect(distance_set(res.witness).size() == res.size,
                 ctx + ": witness has the wrong value count");
        c.expect(proximinal_graph(res.witness, res.witness.part("A"),
                                  res.witness.part("B")) == g,
                 ctx + ": witness fails to reproduce the graph");
        c.expect((res.size == 2) == is_complete_bipartite(g),
                 ctx + ": size 2 must mark exactly the complete bipartite graphs");
      }
    }
}

void sweep_structure(const SweepOptions& o, Counter& c) {
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    c.instance();
    std::size_t n = 2 + pick(rng, o.max_points - 1);
    FiniteSpace space = random_ultrametric(rng, n);
    PartPair parts = random_parts(rng, n);
    std::string ctx = ctx_seeded("structure", i);

    UltrametricStructure us = ultrametric_structure(space, parts.a, parts.b);
    ProximityReport rep =
        proximity_report(space, parts.a, parts.b, ProxMode::Proximinal);
    BipartiteGraph g = proximinal_graph(space, parts.a, parts.b);

    bool diam_b_small = us.diam_b <= us.dist;
    c.expect(diam_b_small == (us.b0_equals_b && us.all_pairs_best),
             ctx + ": diam(B) <= dist(A,B) must match B0 = B with all pairs best");

    bool core_cb = false, b_in_core = false;
    if (!g.empty()) {
      core_cb = is_complete_bipartite(core(g));
      b_in_core = true;
      for (std::size_t k = 0; k < parts.b.size(); ++k)
        if (g.degree(g.b_vertex(k)) == 0) b_in_core = false;
    }
    c.expect(diam_b_small == (!g.empty() && core_cb && b_in_core),
             ctx + ": diam(B) <= dist(A,B) must match the core shape");

    bool connected = components(g).size() == 1;
    bool cb = is_complete_bipartite(g);
    bool diam_union_small = us.diam_union <= us.dist;
    c.expect(connected == diam_union_small && diam_union_small == cb,
             ctx + ": connected / diam(A u B) / complete bipartite equivalence");
    c.expect(
        us.graph_connected == connected && us.graph_complete_bipartite == cb,
        ctx + ": structure record disagrees with direct graph checks");

    c.expect(set_distance(space, rep.a0, rep.b0) == rep.extremum,
             ctx + ": dist(A0,B0) drifted from dist(A,B)");
    bool core_matches = true;
    for (std::size_t k = 0; k < parts.a.size(); ++k) {
      bool in_a0 =
          std::binary_search(rep.a0.begin(), rep.a0.end(), parts.a[k]);
      if ((g.degree(g.a_vertex(k)) > 0) != in_a0) core_matches = false;
    }
    for (std::size_t k = 0; k < parts.b.size(); ++k) {
      bool in_b0 =
          std::binary_search(rep.b0.begin(), rep.b0.end(), parts.b[k]);
      if ((g.degree(g.b_vertex(k)) > 0) != in_b0) core_matches = false;
    }
    c.expect(core_matches, ctx + ": V(core) differs from A0 u B0");
  }
}

void sweep_balls(const SweepOptions& o, Counter& c) {
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    c.instance();
    std::size_t n = 2 + pick(rng, o.max_points - 1);
    FiniteSpace space = random_ultrametric(rng, n);
    // discard the parts draw so this suite walks the exact same space
    // sequence as the structure suite under one seed
    random_parts(rng, n);
    std::string ctx = ctx_seeded("balls", i);

    std::vector<Rat> radii = distance_set(space);
    std::size_t attained = radii.size();
    for (std::size_t k = 0; k < attained; ++k)
      radii.push_back(radii[k] + rat(1, 2));
    std::sort(radii.begin(), radii.end());

    std::vector<std::vector<std::size_t>> block_of;  // per radius, per point
    for (const Rat& r : radii) {
      BallPartition bp = ball_partition(space, r);
      std::vector<std::size_t> owner(space.size(), space.size());
      bool ok = bp.radius == r;
      for (std::size_t bi = 0; bi < bp.blocks.size(); ++bi) {
        const Ball& ball = bp.blocks[bi];
        if (closed_ball(space, ball.center, r).members != ball.members)
          ok = false;
        for (std::size_t m : ball.members) {
          if (owner[m] != space.size()) ok = false;  // overlap
          owner[m] = bi;
          // recentering: every member generates the same ball
          if (closed_ball(space, m, r).members != ball.members) ok = false;
        }
      }
      for (std::size_t x = 0; x < space.size(); ++x)
        if (owner[x] == space.size()) ok = false;  // gap
      c.expect(ok, ctx + ": partition at radius " + to_string(r) + " broke");
      block_of.push_back(std::move(owner));
    }

    // nesting: with recentering verified, every closed ball is a partition
    // block, so it is enough that each partition refines the next
    bool nest = true;
    for (std::size_t r1 = 0; r1 < radii.size() && nest; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < radii.size() && nest; ++r2)
        for (std::size_t x = 0; x < n && nest; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (block_of[r1][x] == block_of[r1][y] &&
                block_of[r2][x] != block_of[r2][y]) {
              nest = false;
              break;
            }
    c.expect(nest, ctx + ": a small ball crosses the boundary of a larger one");
  }
}

void sweep_families(const SweepOptions&, Counter& c) {
  CountableFamily prox = countable_family(FamilyKind::EmptyProximinal);
  c.instance();
  c.expect(prox.extremum() == rat(1) && !prox.attained(),
           "empty-proximinal extremum metadata is wrong");

  constexpr std::int64_t phi_max = 200;
  // distance depends only on the grades, and the grade map is injective,
  // so a table over grades covers every point pair
  std::vector<std::vector<Rat>> d(phi_max + 1,
                                  std::vector<Rat>(phi_max + 1, Rat(0)));
  for (std::int64_t g = 1; g <= phi_max; ++g)
    for (std::int64_t h = 1; h <= phi_max; ++h)
      d[g][h] = CountableFamily::proximinal_rule(g, h, g == h);

  bool strong = true;
  std::int64_t bad = 0;
  for (std::int64_t x = 1; x <= phi_max && strong; ++x)
    for (std::int64_t y = 1; y <= phi_max && strong; ++y)
      for (std::int64_t z = 1; z <= phi_max; ++z) {
        c.instance();
        if (d[x][y] > std::max(d[x][z], d[z][y])) {
          strong = false;
          bad = x;
          break;
        }
      }
  c.expect(strong, "strong triangle fails in the empty-proximinal family near grade " +
                       std::to_string(bad));

  bool gaps = true;
  for (std::int64_t g = 1; g <= phi_max; ++g)
    for (std::int64_t h = 1; h <= phi_max; ++h) {
      if (g == h) continue;
      if (!(d[g][h] > rat(1) && d[g][h] <= rat(2))) gaps = false;
    }
  // cross distances through grade g sit at exactly 1 + 1/g, marching to 1
  for (std::int64_t g = 1; g <= phi_max - 1; ++g)
    if (d[g][g + 1] != Rat(g + 1, g)) gaps = false;
  c.instance();
  c.expect(gaps, "empty-proximinal distances left the interval (1, 2]");

  for (std::int64_t k = 1; k <= 100; ++k)
    for (Part part : {Part::A, Part::B})
      for (Part side : {Part::A, Part::B}) {
        c.instance();
        FamilyPoint x{part, k};
        CountableFamily::Approximation ap = prox.best_approximation(x, side);
        bool ok = prox.distance(x, ap.witness) == ap.value;
        if (part == side) {
          ok = ok && ap.value == rat(0) && ap.witness == x;
        } else {
          std::int64_t g = prox.grade(x);
          ok = ok && ap.value == Rat(g + 1, g);
          for (std::int64_t m = 1; m <= 300; ++m)
            if (prox.distance(x, FamilyPoint{side, m}) < ap.value) ok = false;
        }
        c.expect(ok, "best approximation broke at " +
                         std::string(to_string(part)) + std::to_string(k));
      }

  CountableFamily far = countable_family(FamilyKind::EmptyFarthest);
  c.instance();
  c.expect(far.extremum() == rat(2) && !far.attained(),
           "empty-farthest extremum metadata is wrong");
  for (std::int64_t i = 1; i <= 500; ++i) {
    c.instance();
    Rat cross = far.distance(FamilyPoint{Part::A, (i % 7) + 1},
                             FamilyPoint{Part::B, i});
    bool ok = cross == rat(1) + Rat(i, i + 1);
    ok = ok && cross != rat(2) && cross >= rat(3, 2) && cross < rat(2);
    ok = ok && far.block_index(FamilyPoint{Part::B, i}) == i;
    ok = ok && far.distance(FamilyPoint{Part::A, 1},
                            FamilyPoint{Part::A, i + 1}) == rat(1);
    ok = ok && far.distance(FamilyPoint{Part::B, i},
                            FamilyPoint{Part::B, i + 1}) == rat(1);
    c.expect(ok, "empty-farthest distances broke at block " + std::to_string(i));
  }
}

void sweep_dynamics(const SweepOptions& o, Counter& c) {
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    c.instance();
    std::size_t n = 2 + pick(rng, o.max_points - 1);
    FiniteSpace space =
        i % 2 == 0 ? random_ultrametric(rng, n) : random_semimetric(rng, n);
    PartPair parts = random_parts(rng, n);
    std::string ctx = ctx_seeded("dynamics", i);

    ValidatedMap vm = random_cyclic_nonexpansive(rng, space, parts.a, parts.b);
    c.expect(vm.nonexpansive, ctx + ": generator produced an expansive map");
    HomomorphismVerdict verdict =
        verify_self_homomorphism(vm, space, parts.a, parts.b);
    c.expect(verdict.homomorphism, ctx + ": an edge image left the graph");

    ProximityReport rep =
        proximity_report(space, parts.a, parts.b, ProxMode::Proximinal);
    auto [a0, b0] = rep.pairs[pick(rng, rep.pairs.size())];
    std::vector<Rat> orbit = orbit_check(vm, space, a0, b0, 20);
    bool constant = std::all_of(orbit.begin(), orbit.end(), [&](const Rat& r) {
      return r == rep.extremum;
    });
    c.expect(orbit.size() == 20 && constant, ctx + ": orbit distances drifted");

    bool alternates = true;
    for (std::size_t x : parts.a) {
      std::size_t fx = vm.map.table.at(x);
      if (!std::binary_search(parts.b.begin(), parts.b.end(), fx))
        alternates = false;
      std::size_t ffx = vm.map.table.at(fx);
      if (!std::binary_search(parts.a.begin(), parts.a.end(), ffx))
        alternates = false;
    }
    c.expect(alternates, ctx + ": F or F^2 left its target part");
  }
}

void sweep_duality(const SweepOptions& o, Counter& c) {
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    c.instance();
    std::size_t n = 2 + pick(rng, o.max_points - 1);
    FiniteSpace space = random_semimetric(rng, n);
    PartPair parts = random_parts(rng, n);
    std::string ctx = ctx_seeded("duality", i);

    BipartiteGraph far = farthest_graph(space, parts.a, parts.b);
    c.expect(far == proximinal_graph(reciprocal(space), parts.a, parts.b),
             ctx + ": farthest differs from proximinal of the reciprocal");

    FiniteSpace shifted = shift(space, rat(3, 2));
    c.expect(proximinal_graph(shifted, parts.a, parts.b).edges() ==
                 proximinal_graph(space, parts.a, parts.b).edges(),
             ctx + ": shifting moved proximinal edges");
    c.expect(farthest_graph(shifted, parts.a, parts.b).edges() == far.edges(),
             ctx + ": shifting moved farthest edges");

    std::map<std::string, std::string> relabel;
    for (const std::string& lbl : space.points()) relabel[lbl] = lbl + "x";
    FiniteSpace moved = pushforward(space, relabel);
    c.expect(proximinal_graph(moved, parts.a, parts.b).edges() ==
                 proximinal_graph(space, parts.a, parts.b).edges(),
             ctx + ": relabeling moved proximinal edges");
  }

  for (std::size_t p = 1; p <= o.max_part_size; ++p)
    for (std::size_t q = 1; q <= o.max_part_size; ++q) {
      std::uint64_t masks = std::uint64_t{1} << (p * q);
      for (std::uint64_t mask = 0; mask < masks; ++mask)
        for (bool ai : {false, true})
          for (bool bi : {false, true}) {
            if (mask != 0 && (ai || bi)) continue;
            c.instance();
            BipartiteGraph g = graph_from_mask(p, q, mask, ai, bi);
            std::string ctx = ctx_mask(p, q, mask) + (ai ? " A-inf" : "") +
                              (bi ? " B-inf" : "");
            for (DecisionLevel lev : {DecisionLevel::ExactParts,
                                      DecisionLevel::UpToIsomorphism}) {
              Decision dm = decide(g, Target::ProximinalMetric, lev);
              Decision df = decide(g, Target::Farthest, lev);
              c.expect(!dm.realizable || df.realizable,
                       ctx + ": proximinal-metric must imply farthest");
              if (lev == DecisionLevel::UpToIsomorphism)
                c.expect(dm.realizable == df.realizable,
                         ctx + ": decisions must coincide up to isomorphism");
            }
            if (mask == 0 && ai != bi) {
              Decision dm = decide(g, Target::ProximinalMetric,
                                   DecisionLevel::ExactParts);
              Decision df =
                  decide(g, Target::Farthest, DecisionLevel::ExactParts);
              c.expect(df.realizable && !dm.realizable,
                       ctx + ": one infinite part must separate the targets");
            }
          }
    }
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = {
      "roundtrip", "ultrametric-oracle", "min-distance", "structure",
      "balls",     "families",           "dynamics",     "duality"};
  return names;
}

SweepResult run_sweep(const std::string& suite, const SweepOptions& options) {
  Counter c(suite);
  if (suite == "roundtrip")
    sweep_roundtrip(options, c);
  else if (suite == "ultrametric-oracle")
    sweep_ultrametric_oracle(options, c);
  else if (suite == "min-distance")
    sweep_min_distance(options, c);
  else if (suite == "structure")
    sweep_structure(options, c);
  else if (suite == "balls")
    sweep_balls(options, c);
  else if (suite == "families")
    sweep_families(options, c);
  else if (suite == "dynamics")
    sweep_dynamics(options, c);
  else if (suite == "duality")
    sweep_duality(options, c);
  else
    fail(Errc::UnknownSuite, suite + " is not a sweep suite");
  return c.result;
}

}  // namespace proxigraph
