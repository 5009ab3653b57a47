#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>

#include "helpers.hpp"
#include "proxigraph/generators.hpp"
#include "proxigraph/oracle.hpp"
#include "proxigraph/space.hpp"
#include "proxigraph/sweep.hpp"

using namespace proxigraph;
using testhelp::thrown_code;

TEST_CASE("mask oracle on the smallest carriers") {
  SUBCASE("one point per part") {
    const MaskOracle o = enumerate_masks(1, 1);
    // The single cross pair always attains the minimum.
    CHECK(o.metric == std::set<std::uint64_t>{1});
    CHECK(o.ultrametric == std::set<std::uint64_t>{1});
    CHECK(o.two_valued == std::set<std::uint64_t>{1});
  }
  SUBCASE("one against two") {
    const MaskOracle o = enumerate_masks(1, 2);
    CHECK(o.metric == std::set<std::uint64_t>{1, 2, 3});
    // Cores on a single A vertex are stars, always complete bipartite.
    CHECK(o.ultrametric == o.metric);
    CHECK(o.two_valued == std::set<std::uint64_t>{3});
  }
  SUBCASE("containments") {
    const MaskOracle o = enumerate_masks(2, 3);
    for (std::uint64_t m : o.ultrametric) CHECK(o.metric.count(m));
    for (std::uint64_t m : o.two_valued) CHECK(o.metric.count(m));
    // Every nonempty edge set over {1,2}-valued symmetric matrices shows up.
    CHECK(o.metric.size() == 63);
    CHECK(!o.metric.count(0));
  }
  SUBCASE("guards") {
    CHECK(thrown_code([] { enumerate_masks(0, 2); }) == Errc::EmptyPart);
    CHECK(thrown_code([] { enumerate_masks(4, 4); }) == Errc::TooLarge);
  }
}

TEST_CASE("generators are deterministic per seed") {
  std::mt19937_64 rng1(11), rng2(11), rng3(12);
  const FiniteSpace u1 = random_ultrametric(rng1, 6);
  const FiniteSpace u2 = random_ultrametric(rng2, 6);
  CHECK(u1 == u2);
  CHECK(classify(u1).level == Level::Ultrametric);
  CHECK(!(random_ultrametric(rng3, 6) == u1));

  std::mt19937_64 rng4(11), rng5(11);
  CHECK(random_semimetric(rng4, 5) == random_semimetric(rng5, 5));
}

TEST_CASE("random parts are disjoint, sorted and cover at most everything") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PartPair parts = random_parts(rng, 6);
    REQUIRE(!parts.a.empty());
    REQUIRE(!parts.b.empty());
    std::set<std::size_t> seen;
    for (std::size_t i : parts.a) {
      CHECK(i < 6);
      CHECK(seen.insert(i).second);
    }
    for (std::size_t i : parts.b) {
      CHECK(i < 6);
      CHECK(seen.insert(i).second);
    }
    CHECK(std::is_sorted(parts.a.begin(), parts.a.end()));
    CHECK(std::is_sorted(parts.b.begin(), parts.b.end()));
  }
}

TEST_CASE("every suite passes at desk scale") {
  SweepOptions small;
  small.max_part_size = 2;
  small.max_points = 5;
  small.count = 25;
  small.seed = 7;
  for (const std::string& name : sweep_names()) {
    const SweepResult r = run_sweep(name, small);
    INFO(name, ": ", r.first_failure);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("sweeps are reproducible") {
  SweepOptions small;
  small.max_points = 5;
  small.count = 30;
  small.seed = 99;
  const SweepResult a = run_sweep("duality", small);
  const SweepResult b = run_sweep("duality", small);
  CHECK(a.instances == b.instances);
  CHECK(a.failures == b.failures);
}

TEST_CASE("suite names are checked") {
  CHECK(sweep_names().size() == 8);
  CHECK(thrown_code([] { run_sweep("no-such-suite"); }) == Errc::UnknownSuite);
}
