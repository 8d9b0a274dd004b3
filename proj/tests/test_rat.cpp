#include "doctest.h"
#include "nsmb/rat.hpp"

using nsmb::Rat;

TEST_CASE("rational parsing accepts fractions, decimals and integers") {
  CHECK(Rat::parse("3/10") == Rat(3, 10));
  CHECK(Rat::parse("0.3") == Rat(3, 10));
  CHECK(Rat::parse("1") == Rat(1));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK(Rat::parse("7/10") == Rat(7, 10));
  CHECK(Rat::parse("2/4") == Rat(1, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS(Rat::parse(""));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("1/"));
}

TEST_CASE("rationals normalize and print canonically") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-1, -2) == Rat(1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(1, 2).str() == "1/2");
  CHECK(Rat(3).str() == "3");
  CHECK(Rat(6, 3).str() == "2");
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("ordering is exact and total") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(2, 3) > Rat(1, 2));
  CHECK(Rat(7, 10) > Rat(1, 2));
  CHECK(Rat(1, 2) <= Rat(2, 4));
  // Large denominators: comparisons must not overflow 64 bits.
  Rat a(1'000'000'006, 2'000'000'011);
  Rat b(1'000'000'007, 2'000'000'013);
  CHECK(b < a);
  CHECK(a != b);
}

TEST_CASE("midpoint lies strictly between distinct endpoints") {
  Rat m = midpoint(Rat(1, 5), Rat(7, 10));
  CHECK(m == Rat(9, 20));
  CHECK(Rat(1, 5) < m);
  CHECK(m < Rat(7, 10));
  CHECK(midpoint(Rat(0), Rat(1)) == Rat(1, 2));
}

TEST_CASE("in_unit detects the closed unit interval") {
  CHECK(Rat(0).in_unit());
  CHECK(Rat(1).in_unit());
  CHECK(Rat(3, 10).in_unit());
  CHECK_FALSE(Rat(11, 10).in_unit());
  CHECK_FALSE(Rat(-1, 10).in_unit());
}
