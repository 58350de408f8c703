#include "qmsa/hopf.hpp"

#include <random>

#include "qmsa/textio.hpp"

namespace qmsa {

namespace {

std::string g_label(GenId g) {
  return "g[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

Scalar eps_word(const Word& w) {
  for (GenId g : w)
    if (g.row != g.col) return Scalar::zero();
  return Scalar::one();
}

}  // namespace

HopfGL2::HopfGL2()
    : alg_(manin_shape(2, 0)),
      det_(quantum_determinant(alg_)),
      ring_(alg_, det_, "det_q"),
      delta_(coproduct_map(alg_)) {
  // S(g11) = D^-1 g22, S(g12) = -q D^-1 g12, S(g21) = -q^-1 D^-1 g21,
  // S(g22) = D^-1 g11; det_q is central, so the D^-1 may sit on the right.
  s_.emplace(gen(1, 1), ring_.make(alg_.gen_elem(2, 2), 1));
  s_.emplace(gen(1, 2), ring_.make(-Scalar::q_power(1) * alg_.gen_elem(1, 2), 1));
  s_.emplace(gen(2, 1), ring_.make(-Scalar::q_power(-1) * alg_.gen_elem(2, 1), 1));
  s_.emplace(gen(2, 2), ring_.make(alg_.gen_elem(1, 1), 1));
}

LocalizedElement HopfGL2::antipode_gen(GenId g) const { return s_.at(g); }

LocalizedElement HopfGL2::antipode(const Element& x) const {
  LocalizedElement out{Element::zero(), 0};
  for (const auto& [w, c] : x.terms()) {
    LocalizedElement acc = ring_.unit();
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = ring_.mul(acc, s_.at(*it));
    out = ring_.add(out, ring_.scale(c, acc));
  }
  return out;
}

std::vector<RelationInstance> HopfGL2::verify_hopf_axioms(const QMode& qm) const {
  std::vector<RelationInstance> out;
  const TensorAlgebra T(alg_, alg_);
  const auto gens = alg_.shape().generators();

  for (GenId g : gens) {
    const Element ge = Element::generator(g);
    const TensorElement dg = delta_.apply(ge);

    out.push_back(run_instance("hopf-axioms", "hopf.coassoc[" + g_label(g) + "]",
                               "(Delta (x) id)Delta", "(id (x) Delta)Delta", [&] {
      const auto l = apply_delta_left(dg, delta_);
      const auto r = apply_delta_right(dg, delta_);
      const bool pass = l == r;
      return std::make_pair(pass ? std::string("0") : std::string("triple tensors differ"),
                            pass);
    }));

    out.push_back(run_instance("hopf-axioms", "hopf.counit[" + g_label(g) + "]",
                               "(eps (x) id)Delta | (id (x) eps)Delta", g_label(g), [&] {
      const Element residue =
          qm.view((collapse_left(dg) - ge) + (collapse_right(dg) - ge));
      return std::make_pair(print(residue, "g"), residue.is_zero());
    }));

    for (const bool left : {true, false}) {
      const std::string id = std::string("hopf.antipode-") + (left ? "left" : "right") +
                             "[" + g_label(g) + "]";
      const std::string lhs = left ? "m(S (x) id)Delta" : "m(id (x) S)Delta";
      out.push_back(run_instance("hopf-axioms", id, lhs, "eps*1", [&] {
        LocalizedElement acc{Element::zero(), 0};
        for (const auto& [wp, c] : dg.terms()) {
          const LocalizedElement prod =
              left ? ring_.mul(antipode(Element::term(wp.first, Scalar::one())),
                               LocalizedElement{Element::term(wp.second, Scalar::one()), 0})
                   : ring_.mul(LocalizedElement{Element::term(wp.first, Scalar::one()), 0},
                               antipode(Element::term(wp.second, Scalar::one())));
          acc = ring_.add(acc, ring_.scale(c, prod));
        }
        const LocalizedElement want{eps_word(Word{g}) * Element::unit(), 0};
        const Element residue = qm.view(ring_.residue(acc, want));
        return std::make_pair(print(residue, "g"), residue.is_zero());
      }));
    }

    out.push_back(run_instance("hopf-axioms", "hopf.det-central[" + g_label(g) + "]",
                               "det_q*" + g_label(g), g_label(g) + "*det_q", [&] {
      const Element residue =
          qm.view(alg_.multiply(det_, ge) - alg_.multiply(ge, det_));
      return std::make_pair(print(residue, "g"), residue.is_zero());
    }));
  }

  out.push_back(run_instance("hopf-axioms", "hopf.det-grouplike", "Delta(det_q)",
                             "det_q (x) det_q", [&] {
    TensorElement residue = delta_.apply(det_) - T.tensor(det_, det_);
    if (qm.q0) residue = residue.specialize(*qm.q0);
    return std::make_pair(print(residue, "g", "g"), residue.is_zero());
  }));

  out.push_back(run_instance("hopf-axioms", "hopf.eps-det", "eps(det_q)", "1", [&] {
    const Scalar residue = counit(det_) - Scalar::one();
    return std::make_pair(residue.str(), residue.is_zero());
  }));

  out.push_back(run_instance("hopf-axioms", "hopf.antipode-det", "m(S (x) id)Delta(det_q)",
                             "1", [&] {
    // Delta(det_q) = det_q (x) det_q, so this is S(det_q)*det_q.
    const LocalizedElement lhs = ring_.mul(antipode(det_), LocalizedElement{det_, 0});
    const Element residue = qm.view(ring_.residue(lhs, ring_.unit()));
    return std::make_pair(print(residue, "g"), residue.is_zero());
  }));

  // S is anti-multiplicative by construction on words; check the defining
  // identity S(xy) = S(y)S(x) against the normal forms (all generators are
  // even here).
  for (GenId x : gens)
    for (GenId y : gens) {
      out.push_back(run_instance("hopf-axioms",
                                 "hopf.antimult[" + g_label(x) + "|" + g_label(y) + "]",
                                 "S(" + g_label(x) + "*" + g_label(y) + ")",
                                 "S(" + g_label(y) + ")*S(" + g_label(x) + ")", [&] {
        const LocalizedElement lhs = antipode(alg_.straighten_pair(x, y));
        const LocalizedElement rhs = ring_.mul(s_.at(y), s_.at(x));
        const Element residue = qm.view(ring_.residue(lhs, rhs));
        return std::make_pair(print(residue, "g"), residue.is_zero());
      }));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Cleaving
// ---------------------------------------------------------------------------

Cleaving::Cleaving(const HopfGL2& hopf)
    : hopf_(&hopf),
      s_alg_(manin_shape(4, 2, 2)),
      s_ring_(s_alg_,
              s_alg_.multiply(s_alg_.gen_elem(1, 1), s_alg_.gen_elem(2, 2)) -
                  Scalar::q_power(-1) *
                      s_alg_.multiply(s_alg_.gen_elem(1, 2), s_alg_.gen_elem(2, 1)),
              "D_12[S]") {
  // h = j o S on generators; D^-1 commutes with the upper 2x2 block.
  h_.emplace(gen(1, 1), s_ring_.make(s_alg_.gen_elem(2, 2), 1));
  h_.emplace(gen(1, 2), s_ring_.make(-Scalar::q_power(1) * s_alg_.gen_elem(1, 2), 1));
  h_.emplace(gen(2, 1), s_ring_.make(-Scalar::q_power(-1) * s_alg_.gen_elem(2, 1), 1));
  h_.emplace(gen(2, 2), s_ring_.make(s_alg_.gen_elem(1, 1), 1));
}

Element Cleaving::j_apply(const Element& x) const {
  // j(g_ij) = a_ij: words map letterwise; the normal form carries over.
  Element out;
  for (const auto& [w, c] : x.terms()) out += c * s_alg_.normal_form(w);
  return out;
}

LocalizedElement Cleaving::h_word(const Word& w) const {
  LocalizedElement acc = s_ring_.unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = s_ring_.mul(acc, h_.at(*it));
  return acc;
}

LocalizedElement Cleaving::convolve_jh(const Element& x) const {
  const TensorElement dx = hopf_->delta().apply(x);
  LocalizedElement acc{Element::zero(), 0};
  for (const auto& [wp, c] : dx.terms()) {
    const LocalizedElement term = s_ring_.mul(
        LocalizedElement{j_apply(Element::term(wp.first, Scalar::one())), 0},
        h_word(wp.second));
    acc = s_ring_.add(acc, s_ring_.scale(c, term));
  }
  return acc;
}

LocalizedElement Cleaving::convolve_hj(const Element& x) const {
  const TensorElement dx = hopf_->delta().apply(x);
  LocalizedElement acc{Element::zero(), 0};
  for (const auto& [wp, c] : dx.terms()) {
    const LocalizedElement term = s_ring_.mul(
        h_word(wp.first),
        LocalizedElement{j_apply(Element::term(wp.second, Scalar::one())), 0});
    acc = s_ring_.add(acc, s_ring_.scale(c, term));
  }
  return acc;
}

std::vector<RelationInstance> Cleaving::verify_cleaving(std::uint64_t seed, int samples,
                                                        const QMode& qm) const {
  std::vector<RelationInstance> out;
  const ManinAlgebra& H = hopf_->algebra();
  const auto gens = H.shape().generators();

  out.push_back(run_instance("cleaving", "cleaving.morphism[j]",
                             "j(x*y) for all generator pairs", "j(x)*j(y)", [&] {
    GenMap j(H, s_alg_);
    for (GenId g : gens) j.set_image(g, s_alg_.gen_elem(g.row, g.col));
    const auto bad = verify_morphism(j);
    if (bad.empty()) return std::make_pair(std::string("0"), true);
    return std::make_pair(std::to_string(bad.size()) + " generator pairs fail", false);
  }));

  const auto conv_check = [&](const std::string& id, const Element& x,
                              const std::string& xtext) {
    return run_instance("cleaving", id, "(j*h)(" + xtext + ") | (h*j)(" + xtext + ")",
                        "eps(" + xtext + ")*1", [&] {
      const LocalizedElement want{counit(x) * Element::unit(), 0};
      const Element r1 = s_ring_.residue(convolve_jh(x), want);
      const Element r2 = s_ring_.residue(convolve_hj(x), want);
      const Element residue = qm.view(r1 + r2);
      const bool pass = qm.view(r1).is_zero() && qm.view(r2).is_zero();
      return std::make_pair(print(residue), pass);
    });
  };

  for (GenId g : gens)
    out.push_back(conv_check("cleaving.conv[" + g_label(g) + "]",
                             Element::generator(g), g_label(g)));
  out.push_back(conv_check("cleaving.conv[det_q]", hopf_->det(), "det_q"));

  // Random degree-2 samples x = g_ab * g_cd.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(1, 2);
  for (int k = 0; k < samples; ++k) {
    const int a = idx(rng), b = idx(rng), c = idx(rng), d = idx(rng);
    const Element x = H.multiply(H.gen_elem(a, b), H.gen_elem(c, d));
    const std::string xt = "g[" + std::to_string(a) + "," + std::to_string(b) + "]*g[" +
                           std::to_string(c) + "," + std::to_string(d) + "]";
    out.push_back(conv_check("cleaving.conv-sample[" + std::to_string(k) + "]", x, xt));
  }

  // Comodule map: delta_q o j = (j (x) id) o Delta on generators.
  const TensorGenMap delta_q = coaction_map(s_alg_, H);
  const TensorAlgebra T(s_alg_, H);
  for (GenId g : gens) {
    out.push_back(run_instance("cleaving", "cleaving.comodule[" + g_label(g) + "]",
                               "delta_q(j(" + g_label(g) + "))",
                               "((j (x) id)Delta)(" + g_label(g) + ")", [&] {
      const TensorElement lhs = delta_q.apply(j_apply(Element::generator(g)));
      TensorElement rhs;
      const TensorElement dg = hopf_->delta().apply(Element::generator(g));
      for (const auto& [wp, c] : dg.terms())
        rhs += c * T.tensor(j_apply(Element::term(wp.first, Scalar::one())),
                            Element::term(wp.second, Scalar::one()));
      TensorElement residue = lhs - rhs;
      if (qm.q0) residue = residue.specialize(*qm.q0);
      return std::make_pair(print(residue, "a", "g"), residue.is_zero());
    }));
  }
  return out;
}

std::vector<RelationInstance> Cleaving::verify_coinvariant_generation(const QMode& qm) const {
  std::vector<RelationInstance> out;
  const ManinAlgebra& H = hopf_->algebra();
  const TensorGenMap delta_q = coaction_map(s_alg_, H);
  const TensorAlgebra T(s_alg_, H);
  const Element det = quantum_determinant(H);

  const auto minor_in = [&](int r, int s) {
    return s_alg_.multiply(s_alg_.gen_elem(r, 1), s_alg_.gen_elem(s, 2)) -
           Scalar::q_power(-1) *
               s_alg_.multiply(s_alg_.gen_elem(r, 2), s_alg_.gen_elem(s, 1));
  };

  // delta_q extended to the localization sends x*Dinv to
  // delta_q(x)*(Dinv (x) det^-1); the coinvariance claim
  // delta_q(n*Dinv) = n*Dinv (x) 1 clears (all right legs even) to
  // delta_q(n) = n (x) det_q.
  struct GenSpec {
    std::string label;
    Scalar c;
    int r, s;
  };
  std::vector<GenSpec> specs;
  for (int i = 3; i <= 4; ++i) {
    specs.push_back({"u[" + std::to_string(i) + ",1]", -Scalar::q_power(-1), 2, i});
    specs.push_back({"u[" + std::to_string(i) + ",2]", Scalar::one(), 1, i});
  }
  for (int k = 5; k <= 6; ++k) {
    specs.push_back({"nu[" + std::to_string(k) + ",1]", -Scalar::q_power(-1), 2, k});
    specs.push_back({"nu[" + std::to_string(k) + ",2]", Scalar::one(), 1, k});
  }

  for (const auto& sp : specs) {
    out.push_back(run_instance("coinvariant-generation", "coinv-gen[" + sp.label + "]",
                               "delta_q(" + sp.label + ")", sp.label + " (x) 1", [&] {
      const Element n = sp.c * minor_in(sp.r, sp.s);
      TensorElement residue = delta_q.apply(n) - T.tensor(n, det);
      if (qm.q0) residue = residue.specialize(*qm.q0);
      return std::make_pair(print(residue, "a", "g"), residue.is_zero());
    }));
  }

  // Classical analogue on the independent engine.
  const ClassicalAlgebra s_cl(manin_shape(4, 2, 2));
  const ClassicalAlgebra gl2_cl(manin_shape(2, 0));
  const ClassicalTensorAlgebra ct(s_cl, gl2_cl);
  const ClassicalElement det_cl =
      gl2_cl.multiply(gl2_cl.gen_elem(1, 1), gl2_cl.gen_elem(2, 2)) -
      gl2_cl.multiply(gl2_cl.gen_elem(1, 2), gl2_cl.gen_elem(2, 1));
  for (const auto& sp : specs) {
    out.push_back(run_instance("coinvariant-generation",
                               "coinv-gen-q1[" + sp.label + "]",
                               "delta(" + sp.label + " at q=1)", sp.label + " (x) 1", [&] {
      const ClassicalElement n = sp.c.eval(1) * s_cl.minor(sp.r, sp.s);
      const ClassicalTensorElement residue = ct.coaction(n) - ct.tensor(n, det_cl);
      TensorElement printable;
      for (const auto& [wp, c] : residue.terms())
        printable.add_term({wp.first, wp.second}, Scalar::of(c));
      return std::make_pair(print(printable, "a", "g"), residue.is_zero());
    }));
  }
  return out;
}

}  // namespace qmsa
