#pragma once

#include <map>

#include "qmsa/classical.hpp"
#include "qmsa/relation.hpp"

namespace qmsa {

/// A 2x2 quantum minor D_rs^{kl} with its expansion in the ambient algebra.
struct Minor {
  int r = 0, s = 0;  // rows, r <= s
  int ck = 1, cl = 2;  // columns
  Element expansion;
  int parity = 0;

  std::string label() const;  // "D[r,s]" (columns (1,2) implied)
};

/// The quantum super Grassmannian Gr_q(2|0,4|2): the 17 quantum minors
/// inside M_q(4|2), with the straightening order used by the closure audit
/// (even D_ij first, then D_56, D_55, D_66, then the odd D_in; every
/// descending product under this order is covered by a listed relation).
class Grassmannian {
 public:
  explicit Grassmannian(const ManinAlgebra& ambient);

  const ManinAlgebra& ambient() const { return *ambient_; }

  /// All 17 generators in straightening order.
  const std::vector<Minor>& generators() const { return gens_; }
  const Minor& at(int r, int s) const;
  int order_of(int r, int s) const;

  /// D_rs with columns (1,2); the equal-row minors exist only for rows 5,6.
  Element build_minor(int r, int s) const;
  /// D_rs^{kl} = a_rk a_sl - q^-1 a_rl a_sk for r < s, k < l.
  Element generalized_minor(int r, int s, int k, int l) const;

  /// Quantum determinant of the upper 2x2 block (= D_12).
  Element top_determinant() const { return at(1, 2).expansion; }

 private:
  const ManinAlgebra* ambient_;
  std::vector<Minor> gens_;
  std::map<std::pair<int, int>, int> index_;
};

/// Commutation-relation suites over the full index ranges. Instance ids
/// name the family and the indices.
std::vector<RelationInstance> verify_cr_suites(const Grassmannian& gr,
                                               const QMode& qm = {});

/// The 48 quantum super Pluecker instances.
std::vector<RelationInstance> verify_plucker_suite(const Grassmannian& gr,
                                                   const QMode& qm = {});

/// The q = 1 counterparts of the 48 Pluecker instances, computed with the
/// independent supercommutative engine and cross-checked against the
/// specialized quantum residues.
std::vector<RelationInstance> verify_classical_suite(const Grassmannian& gr);

/// Coverage audit: for every ordered pair (G, H) of generators, finds the
/// listed relation mentioning the product H*G, or classifies the product as
/// already ordered. Uncovered descending products fail.
std::vector<RelationInstance> straightening_closure(const Grassmannian& gr,
                                                    const QMode& qm = {});

}  // namespace qmsa
