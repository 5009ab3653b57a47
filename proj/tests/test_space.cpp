#include "doctest.h"

#include <array>
#include <stdexcept>

#include "helpers.hpp"
#include "proxigraph/io.hpp"
#include "proxigraph/space.hpp"

using namespace proxigraph;
using testhelp::fixture;
using testhelp::space_of;
using testhelp::thrown_code;

namespace {

FiniteSpace hamming() {
  return validate_space(parse_space(read_file(fixture("hamming.json"))));
}

FiniteSpace ultra4() {
  return validate_space(parse_space(read_file(fixture("ultra4.json"))));
}

}  // namespace

TEST_CASE("validate_space accepts the fixtures") {
  const FiniteSpace h = hamming();
  CHECK(h.size() == 8);
  CHECK(h.part("A").size() == 4);
  CHECK(h.part("B").size() == 4);
  CHECK(h.dist(0, 4) == rat(1));
  CHECK(h.dist(4, 0) == rat(1));
  CHECK(h.label(3) == "111");
  CHECK(h.index_of("000") == 7);
  CHECK(!h.index_of("banana"));
}

TEST_CASE("validate_space rejects each broken invariant") {
  RawSpace raw;
  raw.points = {"x", "y"};
  raw.distances = {{rat(0), rat(1)}, {rat(1), rat(0)}};

  SUBCASE("shape mismatch") {
    raw.distances.pop_back();
    CHECK_THROWS_AS(validate_space(raw), std::invalid_argument);
  }
  SUBCASE("duplicate label") {
    raw.points[1] = "x";
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::DuplicateLabel);
  }
  SUBCASE("nonzero diagonal") {
    raw.distances[0][0] = rat(1);
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::NonzeroDiagonal);
  }
  SUBCASE("asymmetry") {
    raw.distances[0][1] = rat(2);
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::AsymmetricMatrix);
  }
  SUBCASE("negative distance") {
    raw.distances[0][1] = raw.distances[1][0] = rat(-1);
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::NegativeDistance);
  }
  SUBCASE("zero off the diagonal") {
    raw.distances[0][1] = raw.distances[1][0] = rat(0);
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::ZeroOffDiagonal);
  }
  SUBCASE("part references a missing point") {
    raw.parts["A"] = {"z"};
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::UnknownPoint);
  }
  SUBCASE("parts overlap") {
    raw.parts["A"] = {"x"};
    raw.parts["B"] = {"x"};
    CHECK(thrown_code([&] { validate_space(raw); }) == Errc::PartsOverlap);
  }
}

TEST_CASE("classification ladder with first violations") {
  SUBCASE("hamming space is a metric, not an ultrametric") {
    const SpaceClass cls = classify(hamming());
    CHECK(cls.level == Level::Metric);
    REQUIRE(cls.violation);
    // d(100,010) = 2 > max(d(100,110), d(110,010)) = 1.
    CHECK(*cls.violation == std::array<std::size_t, 3>{0, 1, 4});
  }
  SUBCASE("a stretched triangle is only a semimetric") {
    const FiniteSpace s = space_of({"p1", "p2", "p3"},
                                   {{0, 1, 1}, {1, 0, 5}, {1, 5, 0}});
    const SpaceClass cls = classify(s);
    CHECK(cls.level == Level::Semimetric);
    REQUIRE(cls.violation);
    // d(p2,p3) = 5 > d(p2,p1) + d(p1,p3) = 2, first in scan order.
    CHECK(*cls.violation == std::array<std::size_t, 3>{1, 2, 0});
  }
  SUBCASE("ultrametric fixture") {
    const SpaceClass cls = classify(ultra4());
    CHECK(cls.level == Level::Ultrametric);
    CHECK(!cls.violation);
  }
  SUBCASE("one point is vacuously ultrametric") {
    CHECK(classify(space_of({"p"}, {{0}})).level == Level::Ultrametric);
  }
}

TEST_CASE("distance_set is ascending and contains zero") {
  CHECK(distance_set(hamming()) ==
        std::vector<Rat>{rat(0), rat(1), rat(2), rat(3)});
  CHECK(distance_set(ultra4()) == std::vector<Rat>{rat(0), rat(1), rat(2)});
  CHECK(distance_set(space_of({"p"}, {{0}})) == std::vector<Rat>{rat(0)});
}

TEST_CASE("set_distance and diameter") {
  const FiniteSpace h = hamming();
  CHECK(set_distance(h, h.part("A"), h.part("B")) == rat(1));
  CHECK(set_distance(h, 0, h.part("B")) == rat(1));
  CHECK(set_distance(h, h.part("A"), h.part("A")) == rat(0));  // overlap
  CHECK(diameter(h, h.part("A")) == rat(2));

  const std::vector<std::size_t> one{2};
  CHECK(diameter(h, one) == rat(0));

  const std::vector<std::size_t> none;
  CHECK(thrown_code([&] { set_distance(h, none, h.part("B")); }) ==
        Errc::EmptySet);
  const std::vector<std::size_t> out{99};
  CHECK(thrown_code([&] { diameter(h, out); }) == Errc::UnknownPoint);
}

TEST_CASE("closed balls") {
  const FiniteSpace u = ultra4();
  const Ball b1 = closed_ball(u, 0, rat(1));
  CHECK(b1.members == std::vector<std::size_t>{0, 2});  // a1 and b1
  CHECK(closed_ball(u, 0, rat(0)).members == std::vector<std::size_t>{0});
  CHECK(closed_ball(u, 0, rat(2)).members.size() == 4);
  CHECK(thrown_code([&] { closed_ball(u, 9, rat(1)); }) == Errc::UnknownPoint);
  CHECK_THROWS_AS(closed_ball(u, 0, rat(-1)), std::invalid_argument);
}

TEST_CASE("ball partition on an ultrametric") {
  const FiniteSpace u = ultra4();

  SUBCASE("radius 1 splits off the close pair") {
    const BallPartition p = ball_partition(u, rat(1));
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.blocks[0].members == std::vector<std::size_t>{0, 2});
    CHECK(p.blocks[1].members == std::vector<std::size_t>{1});
    CHECK(p.blocks[2].members == std::vector<std::size_t>{3});
    CHECK(p.representatives() == std::vector<std::size_t>{0, 1, 3});
  }
  SUBCASE("radius below every distance gives singletons") {
    CHECK(ball_partition(u, rat(1, 2)).blocks.size() == 4);
  }
  SUBCASE("radius at the diameter gives one block") {
    CHECK(ball_partition(u, rat(2)).blocks.size() == 1);
  }
  SUBCASE("merely metric spaces are refused") {
    CHECK(thrown_code([&] { ball_partition(hamming(), rat(1)); }) ==
          Errc::NotUltrametric);
  }
  SUBCASE("negative radius is malformed input") {
    CHECK_THROWS_AS(ball_partition(u, rat(-1)), std::invalid_argument);
  }
}

TEST_CASE("shift adds a constant off the diagonal") {
  const FiniteSpace u = ultra4();
  const FiniteSpace s = shift(u, rat(1, 2));
  CHECK(s.dist(0, 2) == rat(3, 2));
  CHECK(s.dist(0, 0) == rat(0));
  CHECK(s.points() == u.points());
  CHECK(classify(s).level == Level::Ultrametric);
  CHECK(thrown_code([&] { shift(u, rat(0)); }) == Errc::NonpositiveShift);
  CHECK(thrown_code([&] { shift(u, rat(-1)); }) == Errc::NonpositiveShift);
}

TEST_CASE("reciprocal is an involution") {
  const FiniteSpace h = hamming();
  const FiniteSpace r = reciprocal(h);
  CHECK(r.dist(0, 1) == rat(1, 2));
  CHECK(r.dist(0, 6) == rat(1, 3));
  CHECK(reciprocal(r) == h);
}

TEST_CASE("pushforward relabels, keeps distances and parts") {
  const FiniteSpace u = ultra4();
  std::map<std::string, std::string> f{
      {"a1", "x1"}, {"a2", "x2"}, {"b1", "y1"}, {"b2", "y2"}};
  const FiniteSpace p = pushforward(u, f);
  CHECK(p.label(0) == "x1");
  CHECK(p.dist(0, 2) == rat(1));
  CHECK(p.part("A") == u.part("A"));

  f["a2"] = "x1";  // image repeats
  CHECK(thrown_code([&] { pushforward(u, f); }) == Errc::NotBijective);
  f.erase("a2");
  CHECK(thrown_code([&] { pushforward(u, f); }) == Errc::NotBijective);
}

TEST_CASE("resolve_points") {
  const FiniteSpace u = ultra4();
  const std::vector<std::string> labels{"b2", "a1"};
  CHECK(resolve_points(u, labels) == std::vector<std::size_t>{3, 0});
  const std::vector<std::string> bad{"zz"};
  CHECK(thrown_code([&] { resolve_points(u, bad); }) == Errc::UnknownPoint);
}
