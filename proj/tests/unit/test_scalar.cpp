#include <doctest.h>

#include <random>

#include "qmsa/scalar.hpp"

using namespace qmsa;

namespace {

Scalar q(int e) { return Scalar::q_power(e); }

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-8, 8), num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Scalar s;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    s += Scalar::monomial(expo(rng), Rational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("addition examples") {
  CHECK((q(-1) - q(1)) + (q(1) - q(-1)) == Scalar::zero());
  CHECK(q(-2) + Scalar::zero() == q(-2));
  // exponent-wise rational addition
  CHECK((q(-1) - Rational(3) * q(1)) + Rational(2) * q(1) == q(-1) - q(1));
}

TEST_CASE("multiplication examples") {
  CHECK((q(-1) - q(1)) * (q(-1) + q(1)) == q(-2) - q(2));
  CHECK(q(-1) * q(3) == q(2));
  CHECK((q(-1) - Rational(3) * q(1)) * q(1) == Scalar::one() - Rational(3) * q(2));
}

TEST_CASE("eval examples") {
  CHECK((q(-1) - q(1)).eval(1) == 0);
  CHECK((q(-1) - Rational(3) * q(1)).eval(1) == -2);
  CHECK(q(-2).eval(2) == Rational(1, 4));
  CHECK_THROWS_AS(q(1).eval(0), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::one().eval(0), std::invalid_argument);
}

TEST_CASE("ring laws on random scalars") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("eval is a ring morphism") {
  std::mt19937_64 rng(8);
  const Rational points[] = {Rational(1), Rational(2), Rational(1, 3)};
  for (int t = 0; t < 100; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    for (const Rational& q0 : points) {
      CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
      CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
    }
  }
}

TEST_CASE("canonical form") {
  // equal iff the term maps coincide; zero coefficients are never stored
  const Scalar s = q(2) - q(2);
  CHECK(s.is_zero());
  CHECK(s.terms().empty());
  CHECK(Scalar::monomial(3, 0).is_zero());
  CHECK(q(0) == Scalar::one());
  CHECK(q(1) != q(-1));
}

TEST_CASE("text form") {
  CHECK(Scalar::zero().str() == "0");
  CHECK(Scalar::one().str() == "1");
  CHECK((q(-1) - Rational(3) * q(1)).str() == "q^-1 - 3*q");
  CHECK((q(-1) - q(1)).str() == "q^-1 - q");
  CHECK(Scalar::monomial(2, Rational(2, 3)).str() == "2/3*q^2");
  CHECK((-Scalar::one()).str() == "-1");
}

TEST_CASE("exact division") {
  const Scalar num = q(-2) - q(2);
  const Scalar den = q(-1) - q(1);
  auto r = divide_exact(num, den);
  REQUIRE(r.has_value());
  CHECK(*r == q(-1) + q(1));
  CHECK(!divide_exact(q(1) + Scalar::one(), q(-1) - q(1)).has_value());
  CHECK(!divide_exact(Scalar::one(), Scalar::zero()).has_value());
  CHECK(divide_exact(Scalar::zero(), den)->is_zero());

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    if (b.is_zero()) b = Scalar::one();
    const auto quo = divide_exact(a * b, b);
    REQUIRE(quo.has_value());
    CHECK(*quo == a);
  }
}

TEST_CASE("rational parsing") {
  CHECK(*parse_rational("2/3") == Rational(2, 3));
  CHECK(*parse_rational("-5") == Rational(-5));
  CHECK(*parse_rational("+7/2") == Rational(7, 2));
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("2x").has_value());
}

}  // TEST_SUITE
