#ifndef PROXIGRAPH_SPACE_HPP
#define PROXIGRAPH_SPACE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxigraph/errors.hpp"
#include "proxigraph/rational.hpp"

namespace proxigraph {

/// Raw data as read from a space file, before any invariant is enforced.
struct RawSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rat>> distances;
  std::map<std::string, std::vector<std::string>> parts;
};

/// A finite semimetric space: labeled points, exact rational symmetric
/// distance matrix, optional named parts. Immutable after construction.
class FiniteSpace {
 public:
  // Trusts its arguments to satisfy the type invariants; external data goes
  // through validate_space.
  FiniteSpace(std::vector<std::string> points, std::vector<Rat> matrix,
              std::map<std::string, std::vector<std::size_t>> parts = {});

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(std::size_t i) const { return points_[i]; }

  const Rat& dist(std::size_t i, std::size_t j) const {
    return matrix_[i * points_.size() + j];
  }

  std::optional<std::size_t> index_of(std::string_view label) const;

  const std::map<std::string, std::vector<std::size_t>>& parts() const {
    return parts_;
  }
  /// Indices of a declared part, in declaration order. UnknownPart if absent.
  const std::vector<std::size_t>& part(const std::string& name) const;

  bool operator==(const FiniteSpace& other) const = default;

 private:
  std::vector<std::string> points_;
  std::vector<Rat> matrix_;  // row-major, size n*n
  std::map<std::string, std::vector<std::size_t>> parts_;
};

enum class Level { Semimetric, Metric, Ultrametric };

const char* to_string(Level level);

/// Classification result: the strongest class whose inequality holds, plus
/// the first ordered triple (x,y,z) violating the next class, if any.
struct SpaceClass {
  Level level = Level::Semimetric;
  std::optional<std::array<std::size_t, 3>> violation;
};

struct Ball {
  std::size_t center = 0;
  Rat radius;
  std::vector<std::size_t> members;  // ascending indices; always contains center
};

/// Disjoint closed balls of one radius covering the space. Representatives
/// are the ball centers, chosen as the least index per block.
struct BallPartition {
  Rat radius;
  std::vector<Ball> blocks;  // ordered by least member index

  std::vector<std::size_t> representatives() const;
};

/// Checks all FiniteSpace invariants on raw data. Throws DomainError with
/// codes AsymmetricMatrix, NegativeDistance, NonzeroDiagonal,
/// ZeroOffDiagonal, DuplicateLabel, UnknownPoint, PartsOverlap.
FiniteSpace validate_space(const RawSpace& raw);

SpaceClass classify(const FiniteSpace& space);

/// All values attained by the distance, ascending and duplicate-free.
/// Contains 0 for every space.
std::vector<Rat> distance_set(const FiniteSpace& space);

/// min over A x B of d(a,b). Overlapping sets are allowed (the minimum is
/// then 0); empty sets are not.
Rat set_distance(const FiniteSpace& space, std::span<const std::size_t> a,
                 std::span<const std::size_t> b);
Rat set_distance(const FiniteSpace& space, std::size_t a,
                 std::span<const std::size_t> b);

Rat diameter(const FiniteSpace& space, std::span<const std::size_t> subset);

Ball closed_ball(const FiniteSpace& space, std::size_t center, const Rat& radius);

/// Partition into closed balls of one radius (ultrametric spaces only; the
/// underlying relation d(x,y) <= r is transitive exactly there).
BallPartition ball_partition(const FiniteSpace& space, const Rat& radius);

/// New space with every off-diagonal distance increased by c > 0.
FiniteSpace shift(const FiniteSpace& space, const Rat& c);

/// New space with every off-diagonal distance replaced by its reciprocal.
/// An involution; swaps min- and max-attaining pairs.
FiniteSpace reciprocal(const FiniteSpace& space);

/// Relabels points through a bijection, preserving all distances and parts.
FiniteSpace pushforward(const FiniteSpace& space,
                        const std::map<std::string, std::string>& relabel);

/// Resolves labels to indices; UnknownPoint on a miss.
std::vector<std::size_t> resolve_points(const FiniteSpace& space,
                                        std::span<const std::string> labels);

}  // namespace proxigraph

#endif
