#include "qmsa/coaction.hpp"

#include <stdexcept>

#include "qmsa/textio.hpp"

namespace qmsa {

namespace {

Scalar one_plus_qm2() { return Scalar::one() + Scalar::q_power(-2); }

// Normalized two-letter left-leg word a_{r1 c1} a_{r2 c2}.
Element pair_word(const ManinAlgebra& alg, int r1, int c1, int r2, int c2) {
  return alg.multiply(alg.gen_elem(r1, c1), alg.gen_elem(r2, c2));
}

// Items 2 and 3 of the coaction proposition share one shape; item 3's
// Delta(D_56) is the (i,m) = (5,6) instance.
TensorElement odd_row_rhs(const Grassmannian& gr, const TensorAlgebra& T, int i, int m) {
  const ManinAlgebra& A = gr.ambient();
  TensorElement rhs;
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 6; ++l) {
      if (l == k) continue;
      if (k < l) {
        rhs += T.tensor(pair_word(A, i, k, m, l), gr.at(k, l).expansion);
      } else {
        rhs -= T.tensor(Scalar::q_power(-1) * pair_word(A, i, k, m, l),
                        gr.at(l, k).expansion);
      }
    }
  rhs += T.tensor(pair_word(A, i, 5, m, 6) +
                      Scalar::q_power(-1) * pair_word(A, i, 6, m, 5),
                  gr.at(5, 6).expansion);
  for (int k = 5; k <= 6; ++k)
    rhs += T.tensor(one_plus_qm2() * pair_word(A, i, k, m, k),
                    gr.at(k, k).expansion);
  for (int k = 5; k <= 6; ++k)
    for (int l = 1; l <= 4; ++l)
      rhs += T.tensor(Scalar::q_power(-1) * pair_word(A, i, k, m, l),
                      gr.at(l, k).expansion);
  return rhs;
}

TensorElement claimed_rhs(const Grassmannian& gr, const TensorAlgebra& T,
                          const Minor& g) {
  const ManinAlgebra& A = gr.ambient();
  if (g.r == g.s) {
    // Delta(D_nn) = sum_{k<l} a_nk a_nl (x) D_kl + sum_{k>=5} a_nk^2 (x) D_kk.
    const int n = g.r;
    TensorElement rhs;
    for (int k = 1; k <= 6; ++k)
      for (int l = k + 1; l <= 6; ++l)
        rhs += T.tensor(pair_word(A, n, k, n, l), gr.at(k, l).expansion);
    for (int k = 5; k <= 6; ++k)
      rhs += T.tensor(pair_word(A, n, k, n, k), gr.at(k, k).expansion);
    return rhs;
  }
  if (g.s >= 5) return odd_row_rhs(gr, T, g.r, g.s);

  // Item 1, even rows i < j <= 4:
  //   Delta(D_ij) = sum_{P, k<l} D_ij^{kl} (x) D_kl
  //               - (a_i5 a_j6 + q^-1 a_i6 a_j5) (x) D_56
  //               - (1+q^-2) sum_{k>=5} a_ik a_jk (x) D_kk,
  // with P the condition min(k,l) <= 4.
  const int i = g.r, j = g.s;
  TensorElement rhs;
  for (int k = 1; k <= 6; ++k)
    for (int l = k + 1; l <= 6; ++l) {
      if (k >= 5) continue;  // min(k,l) <= 4
      rhs += T.tensor(gr.generalized_minor(i, j, k, l), gr.at(k, l).expansion);
    }
  rhs -= T.tensor(pair_word(A, i, 5, j, 6) +
                      Scalar::q_power(-1) * pair_word(A, i, 6, j, 5),
                  gr.at(5, 6).expansion);
  for (int k = 5; k <= 6; ++k)
    rhs -= T.tensor(one_plus_qm2() * pair_word(A, i, k, j, k),
                    gr.at(k, k).expansion);
  return rhs;
}

}  // namespace

std::vector<RelationInstance> verify_coaction(const Grassmannian& gr,
                                              const QMode& qm) {
  const ManinAlgebra& A = gr.ambient();
  const TensorAlgebra T(A, A);
  const TensorGenMap delta = coproduct_map(A);

  std::vector<RelationInstance> out;
  for (const Minor& g : gr.generators()) {
    const TensorElement rhs = claimed_rhs(gr, T, g);
    out.push_back(run_instance("coaction", "coaction[" + g.label() + "]",
                               "Delta(" + g.label() + ")", "claimed RHS", [&] {
      const TensorElement lhs = delta.apply(g.expansion);
      TensorElement residue = lhs - rhs;
      if (qm.q0) residue = residue.specialize(*qm.q0);
      return std::make_pair(print(residue, "a", "a"), residue.is_zero());
    }));
    out.push_back(run_instance("coaction", "coaction-counit[" + g.label() + "]",
                               "(id (x) eps)(claimed RHS)", g.label(), [&] {
      const Element collapsed = collapse_right(rhs);
      const Element residue = qm.view(collapsed - g.expansion);
      return std::make_pair(print(residue), residue.is_zero());
    }));
  }
  return out;
}

TensorGenMap coaction_map(const ManinAlgebra& s_algebra, const ManinAlgebra& gl2) {
  if (s_algebra.shape().max_col() != 2)
    throw std::invalid_argument("coaction_map: C_q[S] must have columns {1,2}");
  TensorGenMap d(s_algebra, TensorAlgebra(s_algebra, gl2));
  for (GenId g : s_algebra.shape().generators()) {
    TensorElement im;
    for (int k = 1; k <= 2; ++k)
      im += TensorElement::term(Word{gen(g.row, k)}, Word{gen(k, g.col)},
                                Scalar::one());
    d.set_image(g, std::move(im));
  }
  return d;
}

Element quantum_determinant(const ManinAlgebra& gl2) {
  return gl2.multiply(gl2.gen_elem(1, 1), gl2.gen_elem(2, 2)) -
         Scalar::q_power(-1) *
             gl2.multiply(gl2.gen_elem(1, 2), gl2.gen_elem(2, 1));
}

std::vector<RelationInstance> coinvariance_check(const ManinAlgebra& s_algebra,
                                                 const ManinAlgebra& gl2,
                                                 const QMode& qm) {
  const TensorAlgebra T(s_algebra, gl2);
  const TensorGenMap delta = coaction_map(s_algebra, gl2);
  const Element det = quantum_determinant(gl2);

  const auto minor_in = [&](int r, int s) {
    return s_algebra.multiply(s_algebra.gen_elem(r, 1), s_algebra.gen_elem(s, 2)) -
           Scalar::q_power(-1) * s_algebra.multiply(s_algebra.gen_elem(r, 2),
                                                    s_algebra.gen_elem(s, 1));
  };

  std::vector<RelationInstance> out;
  for (int r = 1; r <= 6; ++r)
    for (int s = r + 1; s <= 6; ++s) {
      const std::string dl = "D[" + std::to_string(r) + "," + std::to_string(s) + "]";
      out.push_back(run_instance("coinvariants", "coinv[" + dl + "]",
                                 "delta_q(" + dl + ")", dl + " (x) det_q", [&] {
        TensorElement residue =
            delta.apply(minor_in(r, s)) - T.tensor(minor_in(r, s), det);
        if (qm.q0) residue = residue.specialize(*qm.q0);
        return std::make_pair(print(residue, "a", "g"), residue.is_zero());
      }));
    }

  // Classical analogue at q = 1 on the supercommutative engine.
  const ClassicalAlgebra s_cl(manin_shape(4, 2, 2));
  const ClassicalAlgebra gl2_cl(manin_shape(2, 0));
  const ClassicalTensorAlgebra ct(s_cl, gl2_cl);
  const ClassicalElement det_cl =
      gl2_cl.multiply(gl2_cl.gen_elem(1, 1), gl2_cl.gen_elem(2, 2)) -
      gl2_cl.multiply(gl2_cl.gen_elem(1, 2), gl2_cl.gen_elem(2, 1));
  for (int r = 1; r <= 6; ++r)
    for (int s = r + 1; s <= 6; ++s) {
      const std::string dl = "d[" + std::to_string(r) + "," + std::to_string(s) + "]";
      out.push_back(run_instance("coinvariants", "coinv-q1[" + dl + "]",
                                 "delta(" + dl + ")", dl + " (x) det", [&] {
        const ClassicalElement m = s_cl.minor(r, s);
        const ClassicalTensorElement residue = ct.coaction(m) - ct.tensor(m, det_cl);
        TensorElement printable;
        for (const auto& [wp, c] : residue.terms())
          printable.add_term({wp.first, wp.second}, Scalar::of(c));
        return std::make_pair(print(printable, "a", "g"), residue.is_zero());
      }));
    }

  out.push_back(run_instance("coinvariants", "coinv-morphism[delta_q]",
                             "delta_q(x*y)", "delta_q(x)*delta_q(y)", [&] {
    const auto bad = verify_morphism(delta);
    if (bad.empty()) return std::make_pair(std::string("0"), true);
    return std::make_pair(std::to_string(bad.size()) + " generator pairs fail", false);
  }));
  return out;
}

}  // namespace qmsa
