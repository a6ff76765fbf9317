#include <doctest.h>

#include "leibniz/scalar.hpp"
#include "rng.hpp"

using namespace leibniz;

TEST_CASE("normalization") {
  CHECK(GaussianRational::from_fraction(2, 4) == frac(1, 2));
  CHECK(GaussianRational::from_fraction(2, 4).str() == "1/2");
  CHECK(GaussianRational::from_fraction(0, 1, 3, -6) == ifrac(-1, 2));
  CHECK(GaussianRational::from_fraction(0, 1, 3, -6).str() == "-1/2*i");
  CHECK(GaussianRational::from_fraction(0, 5).str() == "0");
  CHECK(GaussianRational::from_fraction(0, 5).re().get_den() == 1);
  CHECK_THROWS_AS(GaussianRational::from_fraction(1, 0), Error);
  CHECK_THROWS_AS(GaussianRational::from_fraction(1, 2, 1, 0), Error);
}

TEST_CASE("field arithmetic on known values") {
  Scalar one_plus_i = frac(1) + ifrac(1);
  Scalar one_minus_i = frac(1) - ifrac(1);
  CHECK(one_plus_i * one_minus_i == frac(2));
  CHECK(ifrac(1, 2) * ifrac(1, 2) == frac(-1, 4));
  CHECK(ifrac(2) * ifrac(1, 2) == frac(-1));
  CHECK((frac(3, 4) / frac(3, 4)).is_one());
  CHECK_THROWS_AS(frac(1) / frac(0), Error);
  CHECK_THROWS_AS(frac(0).inverse(), Error);
}

TEST_CASE("scalar parsing") {
  CHECK(GaussianRational::parse("-1/3*i") == ifrac(-1, 3));
  CHECK(GaussianRational::parse("1/2+3/4*i") == frac(1, 2) + ifrac(3, 4));
  CHECK(GaussianRational::parse("1/2-3/4*i") == frac(1, 2) - ifrac(3, 4));
  CHECK(GaussianRational::parse(" 2 / 4 ") == frac(1, 2));
  CHECK(GaussianRational::parse("0") == frac(0));
  CHECK(GaussianRational::parse("-7") == frac(-7));
  CHECK(GaussianRational::parse("1*i") == ifrac(1));

  CHECK_THROWS_AS(GaussianRational::parse(""), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("abc"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1+2"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1*j"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1 2"), ParseError);

  try {
    GaussianRational::parse("3/4x");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
}

TEST_CASE("canonical format") {
  CHECK(frac(0).str() == "0");
  CHECK(frac(-3, 6).str() == "-1/2");
  CHECK((frac(2) + ifrac(-1)).str() == "2-1*i");
  CHECK((frac(-1, 2) + ifrac(3, 4)).str() == "-1/2+3/4*i");
  CHECK(ifrac(5).str() == "5*i");
}

TEST_CASE("field axioms hold on random triples") {
  testsupport::Rng rng(12345);
  for (int t = 0; t < 1000; ++t) {
    Scalar a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("parse then format is the identity") {
  testsupport::Rng rng(777);
  for (int t = 0; t < 500; ++t) {
    Scalar a = rng.gaussian(30, 17);
    CHECK(GaussianRational::parse(a.str()) == a);
  }
  for (int t = 0; t < 200; ++t) {
    Scalar a = rng.rational(50, 23);
    CHECK(GaussianRational::parse(a.str()) == a);
  }
}
