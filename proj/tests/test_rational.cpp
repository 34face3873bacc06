#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "phigroup/rational.hpp"

using phigroup::BigInt;
using phigroup::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces and fixes the sign") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
  CHECK(Rational(BigInt(10), BigInt(5)).str() == "2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("72/5") == Rational(BigInt(72), BigInt(5)));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("7.4") == Rational(BigInt(37), BigInt(5)));
  CHECK(Rational::parse("11.25").str() == "45/4");
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("floor and printing") {
  CHECK(Rational(BigInt(45), BigInt(4)).floor() == 11);
  CHECK(Rational(BigInt(-1), BigInt(2)).floor() == -1);
  CHECK(Rational(5).floor() == 5);
  std::ostringstream os;
  os << Rational(BigInt(1134), BigInt(55));
  CHECK(os.str() == "1134/55");
  CHECK(Rational(BigInt(15), BigInt(2)).to_double() == doctest::Approx(7.5));
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("ordering agrees with 128-bit cross multiplication") {
  auto gen = oracle::rng(20240601);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 5000; ++i) {
    const long long a = num(gen), b = den(gen), c = num(gen), d = den(gen);
    const Rational x{BigInt(a), BigInt(b)}, y{BigInt(c), BigInt(d)};
    const __int128 lhs = static_cast<__int128>(a) * d, rhs = static_cast<__int128>(c) * b;
    CHECK((x < y) == (lhs < rhs));
    CHECK((x == y) == (lhs == rhs));
  }
}

TEST_CASE("field identities on random values") {
  auto gen = oracle::rng(77);
  std::uniform_int_distribution<long long> num(-5000, 5000), den(1, 5000);
  for (int i = 0; i < 2000; ++i) {
    const Rational x(BigInt(num(gen)), BigInt(den(gen)));
    Rational y(BigInt(num(gen)), BigInt(den(gen)));
    if (y == 0) y = 1;
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(x * y.reciprocal() == x / y);
    CHECK(-(-x) == x);
    CHECK(boost::multiprecision::gcd(x.numerator(), x.denominator()) == 1);
    CHECK(x.denominator() > 0);
  }
}

}
