#include "proxigraph/space.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <unordered_map>

namespace proxigraph {

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<Rat> matrix,
                         std::map<std::string, std::vector<std::size_t>> parts)
    : points_(std::move(points)), matrix_(std::move(matrix)), parts_(std::move(parts)) {
  assert(matrix_.size() == points_.size() * points_.size());
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == label) return i;
  return std::nullopt;
}

const std::vector<std::size_t>& FiniteSpace::part(const std::string& name) const {
  auto it = parts_.find(name);
  if (it == parts_.end()) fail(Errc::UnknownPart, "no part named '" + name + "'");
  return it->second;
}

const char* to_string(Level level) {
  switch (level) {
    case Level::Semimetric: return "semimetric";
    case Level::Metric: return "metric";
    case Level::Ultrametric: return "ultrametric";
  }
  return "?";
}

FiniteSpace validate_space(const RawSpace& raw) {
  const std::size_t n = raw.points.size();
  if (raw.distances.size() != n)
    throw std::invalid_argument("matrix row count does not match point count");
  for (const auto& row : raw.distances)
    if (row.size() != n)
      throw std::invalid_argument("matrix column count does not match point count");

  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = seen.emplace(raw.points[i], i);
    if (!inserted)
      fail(Errc::DuplicateLabel, "label '" + raw.points[i] + "' at indices " +
                                     std::to_string(it->second) + " and " +
                                     std::to_string(i));
  }

  std::vector<Rat> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.distances[i][i] != Rat(0))
      fail(Errc::NonzeroDiagonal, "d(" + std::to_string(i) + "," + std::to_string(i) +
                                      ") = " + to_string(raw.distances[i][i]));
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = raw.distances[i][j];
      if (i < j) {
        if (v != raw.distances[j][i])
          fail(Errc::AsymmetricMatrix, "d(" + std::to_string(i) + "," +
                                           std::to_string(j) + ") != d(" +
                                           std::to_string(j) + "," + std::to_string(i) + ")");
        if (v < Rat(0))
          fail(Errc::NegativeDistance,
               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(v));
        if (v == Rat(0))
          fail(Errc::ZeroOffDiagonal,
               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = 0");
      }
      matrix[i * n + j] = v;
    }
  }

  std::map<std::string, std::vector<std::size_t>> parts;
  std::vector<bool> claimed(n, false);
  for (const auto& [name, labels] : raw.parts) {
    std::vector<std::size_t> indices;
    indices.reserve(labels.size());
    for (const auto& label : labels) {
      auto it = seen.find(label);
      if (it == seen.end())
        fail(Errc::UnknownPoint, "part '" + name + "' references '" + label + "'");
      if (claimed[it->second])
        fail(Errc::PartsOverlap, "point '" + label + "' appears in two parts");
      claimed[it->second] = true;
      indices.push_back(it->second);
    }
    parts.emplace(name, std::move(indices));
  }

  return FiniteSpace(raw.points, std::move(matrix), std::move(parts));
}

SpaceClass classify(const FiniteSpace& space) {
  const std::size_t n = space.size();
  // Triangle inequality first; its first lexicographic failure caps the
  // level at Semimetric.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (space.dist(x, y) > space.dist(x, z) + space.dist(z, y))
          return {Level::Semimetric, std::array<std::size_t, 3>{x, y, z}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (space.dist(x, y) > std::max(space.dist(x, z), space.dist(z, y)))
          return {Level::Metric, std::array<std::size_t, 3>{x, y, z}};
  return {Level::Ultrametric, std::nullopt};
}

std::vector<Rat> distance_set(const FiniteSpace& space) {
  std::set<Rat> values;
  values.insert(Rat(0));
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j)
      values.insert(space.dist(i, j));
  return {values.begin(), values.end()};
}

namespace {

void require_points(const FiniteSpace& space, std::span<const std::size_t> set,
                    const char* role) {
  if (set.empty()) fail(Errc::EmptySet, std::string(role) + " is empty");
  for (std::size_t i : set)
    if (i >= space.size())
      fail(Errc::UnknownPoint, std::string(role) + " index " + std::to_string(i));
}

}  // namespace

Rat set_distance(const FiniteSpace& space, std::span<const std::size_t> a,
                 std::span<const std::size_t> b) {
  require_points(space, a, "A");
  require_points(space, b, "B");
  Rat best = space.dist(a.front(), b.front());
  for (std::size_t x : a)
    for (std::size_t y : b) best = std::min(best, space.dist(x, y));
  return best;
}

Rat set_distance(const FiniteSpace& space, std::size_t a,
                 std::span<const std::size_t> b) {
  const std::size_t one[] = {a};
  return set_distance(space, one, b);
}

Rat diameter(const FiniteSpace& space, std::span<const std::size_t> subset) {
  require_points(space, subset, "S");
  Rat best(0);
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      best = std::max(best, space.dist(subset[i], subset[j]));
  return best;
}

Ball closed_ball(const FiniteSpace& space, std::size_t center, const Rat& radius) {
  if (center >= space.size())
    fail(Errc::UnknownPoint, "center index " + std::to_string(center));
  if (radius < Rat(0)) throw std::invalid_argument("negative ball radius");
  Ball ball{center, radius, {}};
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.dist(center, i) <= radius) ball.members.push_back(i);
  return ball;
}

std::vector<std::size_t> BallPartition::representatives() const {
  std::vector<std::size_t> reps;
  reps.reserve(blocks.size());
  for (const auto& block : blocks) reps.push_back(block.center);
  return reps;
}

BallPartition ball_partition(const FiniteSpace& space, const Rat& radius) {
  if (radius < Rat(0)) throw std::invalid_argument("negative partition radius");
  SpaceClass cls = classify(space);
  if (cls.level != Level::Ultrametric) {
    std::string what = "space classifies as ";
    what += to_string(cls.level);
    if (cls.violation) {
      const auto& [x, y, z] = *cls.violation;
      what += " (witness " + space.label(x) + "," + space.label(y) + "," + space.label(z) + ")";
    }
    fail(Errc::NotUltrametric, what);
  }

  const std::size_t n = space.size();
  // d(x,y) <= r is an equivalence relation here; union-find collects blocks.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (space.dist(i, j) <= radius) {
        std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }

  // Merging always hangs the larger root under the smaller, so each class
  // root is its least index: representative and ball center in one.
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  BallPartition partition{radius, {}};
  for (std::size_t root : roots)
    partition.blocks.push_back(closed_ball(space, root, radius));
  return partition;
}

FiniteSpace shift(const FiniteSpace& space, const Rat& c) {
  if (c <= Rat(0)) fail(Errc::NonpositiveShift, "shift " + to_string(c));
  const std::size_t n = space.size();
  std::vector<Rat> matrix(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) matrix[i * n + j] = c + space.dist(i, j);
  return FiniteSpace(space.points(), std::move(matrix), space.parts());
}

FiniteSpace reciprocal(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<Rat> matrix(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) matrix[i * n + j] = Rat(1) / space.dist(i, j);
  return FiniteSpace(space.points(), std::move(matrix), space.parts());
}

FiniteSpace pushforward(const FiniteSpace& space,
                        const std::map<std::string, std::string>& relabel) {
  std::vector<std::string> renamed;
  renamed.reserve(space.size());
  std::set<std::string_view> images;
  for (const auto& point : space.points()) {
    auto it = relabel.find(point);
    if (it == relabel.end())
      fail(Errc::NotBijective, "no image for point '" + point + "'");
    if (!images.insert(it->second).second)
      fail(Errc::NotBijective, "image '" + it->second + "' repeats");
    renamed.push_back(it->second);
  }
  std::vector<Rat> matrix(space.size() * space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      matrix[i * space.size() + j] = space.dist(i, j);
  return FiniteSpace(std::move(renamed), std::move(matrix), space.parts());
}

std::vector<std::size_t> resolve_points(const FiniteSpace& space,
                                        std::span<const std::string> labels) {
  std::vector<std::size_t> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) {
    auto idx = space.index_of(label);
    if (!idx) fail(Errc::UnknownPoint, "'" + label + "'");
    indices.push_back(*idx);
  }
  return indices;
}

}  // namespace proxigraph
