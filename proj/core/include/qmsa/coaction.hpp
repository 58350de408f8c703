#pragma once

#include "qmsa/minors.hpp"
#include "qmsa/tensor.hpp"

namespace qmsa {

/// Verifies that the comultiplication restricted to Gr_q lands in
/// ambient (x) Gr_q: for each of the 17 generators, Delta of the expansion
/// equals the explicit right-hand side whose right legs are Gr_q
/// generators. Also checks the (id (x) eps) collapse of each claimed RHS.
std::vector<RelationInstance> verify_coaction(const Grassmannian& gr,
                                              const QMode& qm = {});

/// delta_q : C_q[S] -> C_q[S] (x) GL_q(2), a_ij -> sum_k a_ik (x) g_kj.
/// Checks delta_q(D_rs) = D_rs (x) det_q for all 15 pairs r < s, the q = 1
/// classical analogue on the independent engine, and that delta_q is an
/// algebra morphism.
std::vector<RelationInstance> coinvariance_check(const ManinAlgebra& s_algebra,
                                                 const ManinAlgebra& gl2,
                                                 const QMode& qm = {});

/// The coaction map itself, shared with the Hopf-Galois suites.
TensorGenMap coaction_map(const ManinAlgebra& s_algebra, const ManinAlgebra& gl2);

/// det_q = g_11 g_22 - q^-1 g_12 g_21 in GL_q(2).
Element quantum_determinant(const ManinAlgebra& gl2);

}  // namespace qmsa
