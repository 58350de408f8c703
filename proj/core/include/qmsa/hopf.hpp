#pragma once

#include "qmsa/coaction.hpp"
#include "qmsa/localized.hpp"

namespace qmsa {

/// GL_q(2) as M_q(2|0) with the central quantum determinant inverted, plus
/// the Hopf structure maps. The antipode is given on generators (read off
/// from the convolution inverse of the cleaving map) and extended
/// anti-multiplicatively; the axiom suite validates it.
class HopfGL2 {
 public:
  HopfGL2();

  const ManinAlgebra& algebra() const { return alg_; }
  const LocalizedRing& ring() const { return ring_; }
  const Element& det() const { return det_; }
  const TensorGenMap& delta() const { return delta_; }

  LocalizedElement antipode_gen(GenId g) const;
  /// Linear extension; anti-multiplicative on words.
  LocalizedElement antipode(const Element& x) const;

  std::vector<RelationInstance> verify_hopf_axioms(const QMode& qm = {}) const;

 private:
  ManinAlgebra alg_;
  Element det_;
  LocalizedRing ring_;
  TensorGenMap delta_;
  std::map<GenId, LocalizedElement> s_;
};

/// The cleaving data of the trivial extension: j : GL_q(2) -> C_q[S] on
/// generators g_ij -> a_ij, with convolution inverse h = j o S extended
/// anti-multiplicatively, both landing in the localization of C_q[S] at the
/// upper quantum determinant.
class Cleaving {
 public:
  explicit Cleaving(const HopfGL2& hopf);

  const HopfGL2& hopf() const { return *hopf_; }
  const ManinAlgebra& s_algebra() const { return s_alg_; }
  const LocalizedRing& s_ring() const { return s_ring_; }

  Element j_apply(const Element& x) const;  // multiplicative
  LocalizedElement h_word(const Word& w) const;  // anti-multiplicative

  /// (f star g)(x) = m o (f (x) g) o Delta(x). Both legs are even maps, so
  /// no Koszul signs arise.
  LocalizedElement convolve_jh(const Element& x) const;
  LocalizedElement convolve_hj(const Element& x) const;

  std::vector<RelationInstance> verify_cleaving(std::uint64_t seed, int samples,
                                                const QMode& qm = {}) const;
  std::vector<RelationInstance> verify_coinvariant_generation(const QMode& qm = {}) const;

 private:
  const HopfGL2* hopf_;
  ManinAlgebra s_alg_;
  LocalizedRing s_ring_;
  std::map<GenId, LocalizedElement> h_;
};

}  // namespace qmsa
