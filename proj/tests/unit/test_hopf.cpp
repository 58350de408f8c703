#include <doctest.h>

#include "qmsa/hopf.hpp"

using namespace qmsa;

namespace {

Scalar q(int e) { return Scalar::q_power(e); }

const HopfGL2& hopf() {
  static const HopfGL2 h;
  return h;
}

const Cleaving& cleaving() {
  static const Cleaving c(hopf());
  return c;
}

}  // namespace

TEST_SUITE("hopf-galois") {

TEST_CASE("antipode on generators") {
  const auto& h = hopf();
  const auto& ring = h.ring();
  // S(g11) g11 + S(g12) g21 = 1
  const LocalizedElement lhs = ring.add(
      ring.mul(h.antipode_gen(gen(1, 1)),
               LocalizedElement{h.algebra().gen_elem(1, 1), 0}),
      ring.mul(h.antipode_gen(gen(1, 2)),
               LocalizedElement{h.algebra().gen_elem(2, 1), 0}));
  CHECK(ring.equal(lhs, ring.unit()));
  // S(det) = det^-1
  const LocalizedElement sdet = h.antipode(h.det());
  CHECK(sdet.denom_pow == 1);
  CHECK(sdet.num == Element::unit());
}

TEST_CASE("determinant is grouplike and central") {
  const auto& h = hopf();
  const TensorAlgebra T(h.algebra(), h.algebra());
  CHECK(h.delta().apply(h.det()) == T.tensor(h.det(), h.det()));
  CHECK(counit(h.det()) == Scalar::one());
  for (GenId g : h.algebra().shape().generators())
    CHECK(h.algebra().multiply(h.det(), Element::generator(g)) ==
          h.algebra().multiply(Element::generator(g), h.det()));
}

TEST_CASE("hopf axiom suite") {
  const auto v = hopf().verify_hopf_axioms();
  CHECK(v.size() == 39);
  CHECK(all_pass(v));
}

TEST_CASE("cleaving convolution identities") {
  const auto& c = cleaving();
  const auto& ring = c.s_ring();
  // (j*h)(g11) = 1 and (h*j)(g11) = 1
  const Element g11 = Element::generator(gen(1, 1));
  CHECK(ring.equal(c.convolve_jh(g11), ring.unit()));
  CHECK(ring.equal(c.convolve_hj(g11), ring.unit()));
  // off-diagonal counit: (j*h)(g12) = 0, classically too
  const Element g12 = Element::generator(gen(1, 2));
  const LocalizedElement z = c.convolve_jh(g12);
  CHECK(z.is_zero());
  CHECK(ring.specialize(z, 1).is_zero());
  // (h*j)(g12) = 0
  CHECK(c.convolve_hj(g12).is_zero());
}

TEST_CASE("convolution is eps-unital on the determinant") {
  const auto& c = cleaving();
  const auto& ring = c.s_ring();
  const LocalizedElement want{counit(hopf().det()) * Element::unit(), 0};
  CHECK(ring.equal(c.convolve_jh(hopf().det()), want));
  CHECK(ring.equal(c.convolve_hj(hopf().det()), want));
}

TEST_CASE("cleaving suite") {
  const auto v = cleaving().verify_cleaving(20240901, 20);
  CHECK(v.size() == 1 + 5 + 20 + 4);
  CHECK(all_pass(v));
}

TEST_CASE("coinvariant generation suite") {
  const auto v = cleaving().verify_coinvariant_generation();
  CHECK(v.size() == 16);
  CHECK(all_pass(v));
}

TEST_CASE("q=1: everything still passes under specialization") {
  const QMode q1{Rational(1)};
  CHECK(all_pass(hopf().verify_hopf_axioms(q1)));
  CHECK(all_pass(cleaving().verify_coinvariant_generation(q1)));
}

}  // TEST_SUITE
