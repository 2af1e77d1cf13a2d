#include <doctest.h>

#include <stdexcept>

#include "hyperseries/rational.hpp"

using hyperseries::BigInt;
using hyperseries::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(4).to_string() == "4/1");
  CHECK(Rational(4).to_short_string() == "4");
}

TEST_CASE("parse accepts integers and p/q") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
  CHECK(Rational::parse("+3/9") == Rational(BigInt(1), BigInt(3)));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(BigInt(1), BigInt(3));
  const Rational b(BigInt(1), BigInt(6));
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(BigInt(1), BigInt(18)));
  CHECK(a / b == Rational(2));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(a.to_integer(), std::domain_error);
  CHECK_FALSE(a < b);
}

TEST_CASE("factorial and binomial") {
  CHECK(hyperseries::factorial(0) == 1);
  CHECK(hyperseries::factorial(20) == BigInt("2432902008176640000"));
  CHECK(hyperseries::binomial(6, 3) == 20);
  CHECK(hyperseries::binomial(3, 5) == 0);
  CHECK(hyperseries::binomial(3, -1) == 0);
}
