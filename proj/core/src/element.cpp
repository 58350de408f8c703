#include "qmsa/element.hpp"

namespace qmsa {

Element Element::term(Word w, Scalar c) {
  Element e;
  if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
  return e;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Element operator*(const Scalar& c, const Element& x) {
  Element out;
  if (c.is_zero()) return out;
  for (const auto& [w, xc] : x.terms_) {
    Scalar p = c * xc;
    if (!p.is_zero()) out.terms_.emplace(w, std::move(p));
  }
  return out;
}

Element Element::specialize(const Rational& q0) const {
  Element out;
  for (const auto& [w, c] : terms_) out.add_term(w, Scalar::of(c.eval(q0)));
  return out;
}

std::optional<int> Element::parity(const AlgebraShape& shape) const {
  if (terms_.empty()) return 0;
  int p = word_parity(terms_.begin()->first, shape);
  for (const auto& [w, c] : terms_)
    if (word_parity(w, shape) != p) return std::nullopt;
  return p;
}

}  // namespace qmsa
