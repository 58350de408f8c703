#include <doctest.h>

#include <random>

#include "qmsa/exprcontext.hpp"

using namespace qmsa;

namespace {

Scalar q(int e) { return Scalar::q_power(e); }

struct Fixture {
  ManinAlgebra A{manin_shape(4, 2)};
  Grassmannian gr{A};
  MinkowskiSpace mink{gr};
  AmbientResolver ambient{mink};
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_SUITE("textio") {

TEST_CASE("parse examples") {
  const auto& f = fx();
  CHECK(lower_element(parse("a[1,1]*a[2,2] - q^-1*a[1,2]*a[2,1]"), f.ambient) ==
        f.gr.at(1, 2).expansion);
  CHECK(lower_element(parse("1"), f.ambient) == Element::unit());
  // the discrepant line parses and lowers to its certified nonzero residue
  const Element p11 = lower_element(
      parse("D[5,6]*D[5,6] - (q^-1 - 3*q)*D[5,5]*D[6,6]"), f.ambient);
  CHECK(!p11.is_zero());
  CHECK(p11 == f.A.multiply(f.gr.at(5, 6).expansion, f.gr.at(5, 6).expansion) -
                   (q(-1) - Rational(3) * q(1)) *
                       f.A.multiply(f.gr.at(5, 5).expansion, f.gr.at(6, 6).expansion));
}

TEST_CASE("generalized minor and localized atoms") {
  const auto& f = fx();
  CHECK(lower_element(parse("D[1,2;3,4]"), f.ambient) ==
        f.gr.generalized_minor(1, 2, 3, 4));
  const LocalizedElement u32 = lower(parse("u[3,2]"), f.ambient);
  CHECK(u32 == f.mink.value(MinkGen{false, 3, 2}));
  const LocalizedElement via_dinv = lower(parse("D[1,3]*Dinv"), f.ambient);
  CHECK(f.mink.ring().equal(via_dinv, u32));
  CHECK(lower(parse("nu[5,1]"), f.ambient) == f.mink.value(MinkGen{true, 5, 1}));
}

TEST_CASE("print examples") {
  const auto& f = fx();
  CHECK(print(Element::zero()) == "0");
  const Element x = f.A.normal_form(Word{gen(2, 2), gen(1, 1)});
  CHECK(print(x) == "a[1,1]*a[2,2] - (q^-1 - q)*a[1,2]*a[2,1]");
  // printing is a fixed point on canonical text
  const std::string s = print(x);
  CHECK(print(lower_element(parse(s), f.ambient)) == s);
}

TEST_CASE("parse o print is the identity on random canonical elements") {
  const auto& f = fx();
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> idx(1, 6), len(1, 4), coeff(-3, 3), expo(-3, 3);
  int nontrivial = 0;
  for (int t = 0; t < 500; ++t) {
    Element x;
    for (int terms = 1 + (t % 3); terms > 0; --terms) {
      Word w;
      for (int i = len(rng); i > 0; --i) w.push_back(gen(idx(rng), idx(rng)));
      const Rational c(coeff(rng));
      x += Scalar::monomial(expo(rng), c) * f.A.normal_form(w);
    }
    if (x.is_zero()) continue;
    ++nontrivial;
    CHECK(lower_element(parse(print(x)), f.ambient) == x);
  }
  CHECK(nontrivial > 400);
}

TEST_CASE("equivalent spellings normalize to the canonical print") {
  const auto& f = fx();
  const std::string canonical = print(f.gr.at(1, 2).expansion);
  for (const std::string s : {"a[1,1]*a[2,2] - q^-1*a[1,2]*a[2,1]",
                              "a[1,1] * a[2,2]-q^-1 * a[1,2]*a[2,1]",
                              "D[1,2]", "D[1,2;1,2]"}) {
    CHECK(print(lower_element(parse(s), f.ambient)) == canonical);
  }
}

TEST_CASE("localized printing round-trips") {
  const auto& f = fx();
  const LocalizedElement u31 = f.mink.value(MinkGen{false, 3, 1});
  const std::string s = print(u31, "a", "Dinv");
  CHECK(s.find("Dinv") != std::string::npos);
  CHECK(lower(parse(s), f.ambient) == u31);
}

TEST_CASE("tensor parse and print") {
  const auto& f = fx();
  const TensorElement t =
      lower_tensor(parse("a[1,1] (x) a[1,1] + q^-1*a[1,2] (x) a[2,1]"), f.ambient,
                   f.ambient);
  TensorElement expect;
  expect += TensorElement::term(Word{gen(1, 1)}, Word{gen(1, 1)}, Scalar::one());
  expect += TensorElement::term(Word{gen(1, 2)}, Word{gen(2, 1)}, q(-1));
  CHECK(t == expect);
  const std::string s = print(expect, "a", "a");
  CHECK(lower_tensor(parse(s), f.ambient, f.ambient) == expect);
}

TEST_CASE("errors carry positions and index validation bites") {
  const auto& f = fx();
  CHECK_THROWS_AS(parse("a[1,1] +"), ParseError);
  CHECK_THROWS_AS(parse("a[1,1] ** a[2,2]"), ParseError);
  CHECK_THROWS_AS(parse("(a[1,1]"), ParseError);
  try {
    parse("a[1,1] + @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  // out-of-range generator and invalid minor shapes
  CHECK_THROWS_AS(lower_element(parse("a[7,1]"), f.ambient), std::invalid_argument);
  CHECK_THROWS_AS(lower_element(parse("D[3,3]"), f.ambient), std::invalid_argument);
  CHECK_THROWS_AS(lower_element(parse("D[5,5;3,4]"), f.ambient), std::invalid_argument);
  CHECK_THROWS_AS(lower_element(parse("u[5,1]"), f.ambient), std::invalid_argument);
  // atoms with denominators are rejected where an Element is required
  CHECK_THROWS_AS(lower_element(parse("Dinv"), f.ambient), std::invalid_argument);
  // negative powers only on q
  CHECK_THROWS_AS(parse("a[1,1]^-1"), ParseError);
}

TEST_CASE("GL_q(2) context") {
  static const ManinAlgebra gl2(manin_shape(2, 0));
  static const Element det =
      gl2.multiply(gl2.gen_elem(1, 1), gl2.gen_elem(2, 2)) -
      q(-1) * gl2.multiply(gl2.gen_elem(1, 2), gl2.gen_elem(2, 1));
  static const LocalizedRing ring(gl2, det, "det_q");
  const GL2Resolver res(gl2, ring);
  CHECK(lower_element(parse("g[1,1]*g[2,2] - q^-1*g[1,2]*g[2,1]"), res) == det);
  // det * Detinv = 1 (the determinant is central)
  const LocalizedElement one = lower(parse("(g[1,1]*g[2,2] - q^-1*g[1,2]*g[2,1])*Detinv"), res);
  CHECK(one == ring.unit());
  const LocalizedElement dinv = lower(parse("Detinv"), res);
  const std::string s = print(dinv, "g", "Detinv");
  CHECK(lower(parse(s), res) == dinv);
  CHECK_THROWS_AS(lower_element(parse("g[3,1]"), res), std::invalid_argument);
  CHECK_THROWS_AS(lower_element(parse("a[1,1]"), res), std::invalid_argument);
}

TEST_CASE("scalar-only expressions") {
  const auto& f = fx();
  CHECK(lower_element(parse("q^-1 - 3*q"), f.ambient) ==
        (q(-1) - Rational(3) * q(1)) * Element::unit());
  CHECK(lower_element(parse("2/3"), f.ambient) ==
        Scalar::of(Rational(2, 3)) * Element::unit());
  CHECK(lower_element(parse("(q^-1 - q)^2*a[1,1]"), f.ambient) ==
        (q(-1) - q(1)) * (q(-1) - q(1)) * Element::generator(gen(1, 1)));
}

}  // TEST_SUITE
