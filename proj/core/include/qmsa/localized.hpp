#pragma once

#include <optional>
#include <string>

#include "qmsa/algebra.hpp"

namespace qmsa {

/// numerator * d^{-denom_pow}, the right-denominator form of the Ore
/// localization at a q-normal element d.
struct LocalizedElement {
  Element num;
  int denom_pow = 0;

  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const LocalizedElement&, const LocalizedElement&) = default;
};

/// Localization of (a subalgebra of) a Manin algebra at a q-normal element
/// d. At construction the ring certifies, by normal-form checks, a twist
/// exponent c(g) for each generator with d*g = q^{-c(g)} g*d; words made of
/// twistable letters can then be moved past d^{-1} letter by letter. All
/// state is immutable after construction.
class LocalizedRing {
 public:
  LocalizedRing(const ManinAlgebra& alg, Element d, std::string name);

  const ManinAlgebra& algebra() const { return *alg_; }
  const Element& denominator() const { return d_; }
  const std::string& name() const { return name_; }

  /// The certified exponent c(g), or nullopt when d does not q-commute
  /// with g (such letters may not appear in localized numerators).
  std::optional<int> letter_twist(GenId g) const;
  std::optional<int> word_twist(const Word& w) const;

  LocalizedElement make(Element num, int denom_pow = 0) const;
  LocalizedElement unit() const { return make(Element::unit()); }
  /// d^{-k}
  LocalizedElement denom_inverse(int k = 1) const { return make(Element::unit(), k); }

  /// Product in right-denominator form; throws when a numerator word is
  /// not twistable.
  LocalizedElement mul(const LocalizedElement& a, const LocalizedElement& b) const;
  LocalizedElement mul(const LocalizedElement& a, const LocalizedElement& b,
                       const LocalizedElement& c) const {
    return mul(mul(a, b), c);
  }

  LocalizedElement add(LocalizedElement a, LocalizedElement b) const;
  LocalizedElement scale(const Scalar& c, LocalizedElement x) const;
  LocalizedElement neg(LocalizedElement x) const;

  /// x * d^{k - x.denom_pow} for k >= x.denom_pow: the numerator of x seen
  /// at denominator power k.
  Element cleared_numerator(const LocalizedElement& x, int k) const;

  /// a - b after clearing to the common denominator power.
  Element residue(const LocalizedElement& a, const LocalizedElement& b) const;
  bool equal(const LocalizedElement& a, const LocalizedElement& b) const {
    return residue(a, b).is_zero();
  }

  /// Normal form of d^k (k >= 0).
  const Element& denom_power(int k) const;

  LocalizedElement specialize(const LocalizedElement& x, const Rational& q0) const {
    return LocalizedElement{x.num.specialize(q0), x.denom_pow};
  }

 private:
  /// Detects num == s * d^j; used to keep denominator powers minimal.
  std::optional<std::pair<Scalar, int>> as_denom_multiple(const Element& num) const;
  LocalizedElement reduce(LocalizedElement x) const;

  const ManinAlgebra* alg_;
  Element d_;
  std::string name_;
  std::map<GenId, int> letter_twist_;
  std::vector<Element> d_powers_;  // d^0 .. d^kMaxCachedPower
};

}  // namespace qmsa
