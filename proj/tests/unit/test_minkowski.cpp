#include <doctest.h>

#include "qmsa/minkowski.hpp"

using namespace qmsa;

namespace {

Scalar q(int e) { return Scalar::q_power(e); }

struct Fixture {
  ManinAlgebra A{manin_shape(4, 2)};
  Grassmannian gr{A};
  MinkowskiSpace mink{gr};
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_SUITE("minkowski") {

TEST_CASE("twist table") {
  const auto& m = fx().mink;
  CHECK(m.twist_of(1, 2) == 0);
  CHECK(m.twist_of(1, 3) == 1);
  CHECK(m.twist_of(1, 5) == 1);
  CHECK(m.twist_of(3, 4) == 2);
  CHECK(m.twist_of(5, 6) == 2);
  // every entry is certified and lies in {0,1,2}; it equals the sum of the
  // letter twists of the expansion words
  for (const Minor& g : fx().gr.generators()) {
    const auto c = m.twist_of(g.r, g.s);
    REQUIRE(c.has_value());
    CHECK(*c >= 0);
    CHECK(*c <= 2);
    for (const auto& [w, coeff] : g.expansion.terms())
      CHECK(m.ring().word_twist(w) == *c);
  }
  CHECK(all_pass(m.build_twist_table()));
}

TEST_CASE("generators") {
  const auto& f = fx();
  CHECK(f.mink.generators().size() == 8);
  // u_32 = D_13 Dinv, u_31 = -q^-1 D_23 Dinv
  const LocalizedElement u32 = f.mink.value(MinkGen{false, 3, 2});
  CHECK(u32.denom_pow == 1);
  CHECK(u32.num == f.gr.at(1, 3).expansion);
  const LocalizedElement u31 = f.mink.value(MinkGen{false, 3, 1});
  CHECK(u31.num == -q(-1) * f.gr.at(2, 3).expansion);
  // nu are odd: their squares vanish after clearing
  const LocalizedElement nu52 = f.mink.value(MinkGen{true, 5, 2});
  CHECK(f.mink.ring().mul(nu52, nu52).is_zero());
}

TEST_CASE("u31*u32 normalizes over Dinv^2") {
  const auto& f = fx();
  const LocalizedElement prod = f.mink.ring().mul(f.mink.value(MinkGen{false, 3, 1}),
                                                  f.mink.value(MinkGen{false, 3, 2}));
  CHECK(prod.denom_pow == 2);
  CHECK(!prod.is_zero());
}

TEST_CASE("all 28 commutation instances hold") {
  const auto v = fx().mink.verify_minkowski_cr();
  CHECK(v.size() == 28);
  CHECK(all_pass(v));
}

TEST_CASE("spec'd commutation examples") {
  const auto& f = fx();
  const auto& ring = f.mink.ring();
  const auto U = [&](int i, int j) { return f.mink.value(MinkGen{false, i, j}); };
  const auto Nu = [&](int k, int l) { return f.mink.value(MinkGen{true, k, l}); };
  // u_32 u_31 = q^-1 u_31 u_32
  CHECK(ring.residue(ring.mul(U(3, 2), U(3, 1)),
                     ring.scale(q(-1), ring.mul(U(3, 1), U(3, 2))))
            .is_zero());
  // nu_51 nu_62 = -nu_62 nu_51
  CHECK(ring.residue(ring.mul(Nu(5, 1), Nu(6, 2)),
                     ring.scale(-Scalar::one(), ring.mul(Nu(6, 2), Nu(5, 1))))
            .is_zero());
  // u_32 u_41 - u_41 u_32 = (q^-1 - q) u_42 u_31
  const LocalizedElement lhs = ring.add(
      ring.mul(U(3, 2), U(4, 1)), ring.neg(ring.mul(U(4, 1), U(3, 2))));
  CHECK(ring.residue(lhs, ring.scale(q(-1) - q(1), ring.mul(U(4, 2), U(3, 1))))
            .is_zero());
}

TEST_CASE("beta isomorphism suite") {
  const auto v = fx().mink.verify_beta_iso();
  CHECK(v.size() == 64 + 4 + 28 + 1);
  CHECK(all_pass(v));
}

TEST_CASE("classical big cell at q=1") {
  const auto v = fx().mink.verify_classical_bigcell();
  CHECK(v.size() == 8);
  CHECK(all_pass(v));
}

}  // TEST_SUITE
