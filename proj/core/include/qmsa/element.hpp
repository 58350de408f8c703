#pragma once

#include <map>
#include <optional>

#include "qmsa/scalar.hpp"
#include "qmsa/shape.hpp"

namespace qmsa {

/// A finite C_q-linear combination of words. The engine keeps every stored
/// word in normal order; ordinary linear-algebra operations live here and
/// multiplication (which needs the relation table) lives on ManinAlgebra.
class Element {
 public:
  Element() = default;

  static Element zero() { return Element{}; }
  /// The unit 1 (empty word).
  static Element unit() { return term(Word{}, Scalar::one()); }
  static Element term(Word w, Scalar c);
  static Element generator(GenId g) { return term(Word{g}, Scalar::one()); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, const Element& x);

  friend bool operator==(const Element& a, const Element& b) = default;

  /// Evaluates every coefficient at q = q0; words are unchanged.
  Element specialize(const Rational& q0) const;

  /// The common parity of all words, or nullopt if inhomogeneous.
  /// Zero is homogeneous of either parity; we report 0.
  std::optional<int> parity(const AlgebraShape& shape) const;

 private:
  std::map<Word, Scalar> terms_;
};

}  // namespace qmsa
