#include "doctest.h"

#include "alphadom/error.hpp"
#include "alphadom/rational.hpp"

#include "helpers.hpp"

using alphadom::Alpha;
using alphadom::Errc;
using alphadom::Rational;

TEST_CASE("rational normalizes to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(4, 4).num() == 1);
  CHECK(Rational(4, 4).den() == 1);
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("rational rejects zero denominator") {
  CHECK(testutil::code_of([] { Rational(1, 0); }) == Errc::BadArgument);
}

TEST_CASE("rational comparisons are exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) > Rational(1, 3));
  CHECK(Rational(2, 6) >= Rational(1, 3));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  CHECK(Rational(-1, 1) < Rational(0, 1));
  CHECK_FALSE(Rational(1, 3) < Rational(1, 3));
  // 1/3 against 333333333/1000000000: floating point would call these equal
  // in ratio-of-big-int settings; cross-multiplication must not.
  CHECK(Rational(333333333, 1000000000) < Rational(1, 3));
  CHECK(Rational(333333334, 1000000000) > Rational(1, 3));
}

TEST_CASE("rational subtraction is exact") {
  CHECK(Rational(1, 1) - Rational(1, 2) == Rational(1, 2));
  CHECK(Rational(0, 1) - Rational(1, 1) == Rational(-1, 1));
  CHECK(Rational(4, 4) - Rational(1, 4) == Rational(3, 4));
}

TEST_CASE("alpha accepts p/q in (0, 1]") {
  CHECK(Alpha(1, 2).str() == "1/2");
  CHECK(Alpha(2, 4).str() == "1/2");
  CHECK(Alpha(1, 1).str() == "1/1");
  CHECK(Alpha::parse("19/20").value() == Rational(19, 20));
}

TEST_CASE("alpha rejects out-of-range values") {
  CHECK(testutil::code_of([] { Alpha(3, 2); }) == Errc::BadAlpha);
  CHECK(testutil::code_of([] { Alpha(0, 5); }) == Errc::BadAlpha);
  CHECK(testutil::code_of([] { Alpha(-1, 2); }) == Errc::BadAlpha);
}

TEST_CASE("alpha parse rejects decimals with a hint") {
  try {
    Alpha::parse("0.5");
    FAIL("expected BadAlpha");
  } catch (const alphadom::Error& e) {
    CHECK(e.code() == Errc::BadAlpha);
    CHECK(std::string(e.what()).find("not a decimal") != std::string::npos);
  }
}

TEST_CASE("alpha parse rejects malformed fractions") {
  for (const char* bad : {"", "1", "/2", "1/", "a/b", "1/2x", "x1/2", "1//2"}) {
    CAPTURE(bad);
    CHECK(testutil::code_of([bad] { Alpha::parse(bad); }) == Errc::BadAlpha);
  }
}
