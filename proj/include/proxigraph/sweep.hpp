#ifndef PROXIGRAPH_SWEEP_HPP
#define PROXIGRAPH_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace proxigraph {

struct SweepOptions {
  std::size_t max_part_size = 3;  // exhaustive graph suites: all (p,q) up to this
  std::size_t max_points = 8;     // random space suites: carrier size 2..max
  std::size_t count = 200;        // random instances per suite
  std::uint64_t seed = 1;
};

struct SweepResult {
  std::string suite;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when clean

  bool passed() const { return failures == 0; }
};

/// The available suites:
///   roundtrip          witness constructions reproduce every small graph,
///                      empty finite graphs are refused
///   ultrametric-oracle decide vs the {1,2}-matrix enumeration oracle
///   min-distance       min_distance_set_size vs the same enumeration
///   structure          the three structure equivalences on random
///                      ultrametric spaces, plus attaining-set identities
///   balls              partition, recentering and nesting laws of closed
///                      balls on random ultrametric spaces
///   families           closed-form checks on the two countable families
///                      (fixed bounds, options ignored)
///   dynamics           cyclic nonexpansive maps: edge preservation, orbit
///                      invariance, part alternation
///   duality            farthest = proximinal-of-reciprocal, shift and
///                      relabeling invariance, decision implications
const std::vector<std::string>& sweep_names();

/// UnknownSuite for names outside sweep_names().
SweepResult run_sweep(const std::string& suite,
                      const SweepOptions& options = {});

}  // namespace proxigraph

#endif
