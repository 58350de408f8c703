#include <doctest.h>

#include <random>

#include "qmsa/algebra.hpp"
#include "qmsa/classical.hpp"

using namespace qmsa;

TEST_SUITE("classical") {

TEST_CASE("supercommutative normal form") {
  const ClassicalAlgebra cl(manin_shape(4, 2));
  // two odd letters anticommute
  CHECK(cl.normal_form(Word{gen(5, 2), gen(5, 1)}) ==
        ClassicalElement::term(Word{gen(5, 1), gen(5, 2)}, -1));
  // odd squares vanish, even letters commute freely
  CHECK(cl.normal_form(Word{gen(1, 5), gen(2, 2), gen(1, 5)}).is_zero());
  CHECK(cl.normal_form(Word{gen(2, 2), gen(1, 1)}) ==
        ClassicalElement::term(Word{gen(1, 1), gen(2, 2)}, 1));
}

TEST_CASE("classical Pluecker lines") {
  const ClassicalAlgebra cl(manin_shape(4, 2));
  const ClassicalElement d55 = cl.multiply(cl.gen_elem(5, 1), cl.gen_elem(5, 2));
  const ClassicalElement d66 = cl.multiply(cl.gen_elem(6, 1), cl.gen_elem(6, 2));
  const ClassicalElement d56 = cl.minor(5, 6);
  // a_nn^2 = 0 and a_56 a_56 = -2 a_55 a_66
  CHECK(cl.multiply(d55, d55).is_zero());
  CHECK((cl.multiply(d56, d56) + Rational(2) * cl.multiply(d55, d66)).is_zero());
  // the plain Pluecker relation
  const ClassicalElement p = cl.multiply(cl.minor(1, 2), cl.minor(3, 4)) -
                             cl.multiply(cl.minor(1, 3), cl.minor(2, 4)) +
                             cl.multiply(cl.minor(1, 4), cl.minor(2, 3));
  CHECK(p.is_zero());
}

TEST_CASE("q=1 specialization matches the classical engine") {
  const ManinAlgebra A(manin_shape(4, 2));
  const ClassicalAlgebra cl(manin_shape(4, 2));
  // D_56 at q=1 equals the classical minor (odd letters reordered by sign)
  const Element d56q = A.multiply(A.gen_elem(5, 1), A.gen_elem(6, 2)) -
                       Scalar::q_power(-1) *
                           A.multiply(A.gen_elem(5, 2), A.gen_elem(6, 1));
  CHECK(equals_specialized(d56q.specialize(1), cl.minor(5, 6)));

  // random words agree between the two engines at q = 1
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> idx(1, 6), len(1, 5);
  for (int t = 0; t < 200; ++t) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(gen(idx(rng), idx(rng)));
    CHECK(equals_specialized(A.normal_form(w).specialize(1), cl.normal_form(w)));
  }
}

TEST_CASE("classical coaction tensor") {
  const ClassicalAlgebra s_cl(manin_shape(4, 2, 2));
  const ClassicalAlgebra gl2_cl(manin_shape(2, 0));
  const ClassicalTensorAlgebra ct(s_cl, gl2_cl);
  const ClassicalElement det =
      gl2_cl.multiply(gl2_cl.gen_elem(1, 1), gl2_cl.gen_elem(2, 2)) -
      gl2_cl.multiply(gl2_cl.gen_elem(1, 2), gl2_cl.gen_elem(2, 1));
  // delta(d_34) = d_34 (x) det
  const ClassicalElement d34 = s_cl.minor(3, 4);
  CHECK(ct.coaction(d34) == ct.tensor(d34, det));
}

}  // TEST_SUITE
