#include "doctest.h"

#include "proxigraph/rational.hpp"

using namespace proxigraph;

TEST_CASE("rational rendering") {
  CHECK(to_string(rat(3)) == "3");
  CHECK(to_string(rat(0)) == "0");
  CHECK(to_string(rat(3, 2)) == "3/2");
  CHECK(to_string(rat(2, 4)) == "1/2");
  CHECK(to_string(rat(-3, 6)) == "-1/2");
  CHECK(to_string(rat(4, -6)) == "-2/3");  // sign normalizes to the numerator
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7") == rat(7));
  CHECK(parse_rational("-2") == rat(-2));
  CHECK(parse_rational("3/2") == rat(3, 2));
  CHECK(parse_rational("6/4") == rat(3, 2));
  CHECK(parse_rational("-6/4") == rat(-3, 2));

  CHECK(!parse_rational(""));
  CHECK(!parse_rational("1.5"));
  CHECK(!parse_rational("x"));
  CHECK(!parse_rational("1/"));
  CHECK(!parse_rational("/2"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1 / 2"));
}

TEST_CASE("parse and render round trip") {
  for (const char* text : {"0", "1", "3/2", "22/7", "-5/3"}) {
    auto r = parse_rational(text);
    REQUIRE(r);
    CHECK(to_string(*r) == text);
  }
}

TEST_CASE("exact arithmetic") {
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(1) + rat(1, 200) == rat(201, 200));
  CHECK(rat(3, 2) < rat(2));
}
