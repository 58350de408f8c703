#include "qmsa/classical.hpp"

namespace qmsa {

ClassicalElement ClassicalElement::unit() { return term(Word{}, 1); }

ClassicalElement ClassicalElement::term(Word w, Rational c) {
  ClassicalElement e;
  if (c != 0) e.terms_.emplace(std::move(w), std::move(c));
  return e;
}

void ClassicalElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassicalElement ClassicalElement::operator-() const {
  ClassicalElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

ClassicalElement& ClassicalElement::operator-=(const ClassicalElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

ClassicalElement operator*(const Rational& c, const ClassicalElement& x) {
  ClassicalElement out;
  if (c == 0) return out;
  for (const auto& [w, xc] : x.terms_) out.terms_.emplace(w, c * xc);
  return out;
}

ClassicalElement ClassicalAlgebra::normal_form(Word w, Rational c) const {
  // Insertion sort; each adjacent transposition of two odd letters flips
  // the sign.
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && w[j] < w[j - 1]) {
      if (shape_.parity(w[j]) == 1 && shape_.parity(w[j - 1]) == 1) sign = -sign;
      std::swap(w[j], w[j - 1]);
      --j;
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1] && shape_.parity(w[i]) == 1) return {};
  return ClassicalElement::term(std::move(w), sign > 0 ? c : Rational(-c));
}

ClassicalElement ClassicalAlgebra::multiply(const ClassicalElement& x,
                                            const ClassicalElement& y) const {
  ClassicalElement out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      Word w;
      w.reserve(wx.size() + wy.size());
      w.insert(w.end(), wx.begin(), wx.end());
      w.insert(w.end(), wy.begin(), wy.end());
      out += normal_form(std::move(w), cx * cy);
    }
  return out;
}

ClassicalElement ClassicalAlgebra::minor(int r, int s) const {
  return multiply(gen_elem(r, 1), gen_elem(s, 2)) -
         multiply(gen_elem(r, 2), gen_elem(s, 1));
}

ClassicalTensorElement ClassicalTensorElement::unit() {
  ClassicalTensorElement t;
  t.add_term({Word{}, Word{}}, 1);
  return t;
}

void ClassicalTensorElement::add_term(const WordPair& wp, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(wp);
  if (it == terms_.end()) {
    terms_.emplace(wp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassicalTensorElement& ClassicalTensorElement::operator+=(const ClassicalTensorElement& rhs) {
  for (const auto& [wp, c] : rhs.terms_) add_term(wp, c);
  return *this;
}

ClassicalTensorElement& ClassicalTensorElement::operator-=(const ClassicalTensorElement& rhs) {
  for (const auto& [wp, c] : rhs.terms_) add_term(wp, -c);
  return *this;
}

ClassicalTensorElement operator*(const Rational& c, const ClassicalTensorElement& x) {
  ClassicalTensorElement out;
  if (c == 0) return out;
  for (const auto& [wp, xc] : x.terms()) out.add_term(wp, c * xc);
  return out;
}

ClassicalTensorElement ClassicalTensorAlgebra::tensor(const ClassicalElement& x,
                                                      const ClassicalElement& y) const {
  ClassicalTensorElement out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) out.add_term({wx, wy}, cx * cy);
  return out;
}

ClassicalTensorElement ClassicalTensorAlgebra::multiply(const ClassicalTensorElement& a,
                                                        const ClassicalTensorElement& b) const {
  ClassicalTensorElement out;
  for (const auto& [wa, ca] : a.terms()) {
    const int right_par = word_parity(wa.second, right_->shape());
    for (const auto& [wb, cb] : b.terms()) {
      const int left_par = word_parity(wb.first, left_->shape());
      Rational c = ca * cb;
      if (right_par && left_par) c = -c;

      Word lw = wa.first;
      lw.insert(lw.end(), wb.first.begin(), wb.first.end());
      Word rw = wa.second;
      rw.insert(rw.end(), wb.second.begin(), wb.second.end());
      const ClassicalElement ln = left_->normal_form(std::move(lw));
      const ClassicalElement rn = right_->normal_form(std::move(rw));
      for (const auto& [u, cu] : ln.terms())
        for (const auto& [v, cv] : rn.terms())
          out.add_term({u, v}, c * cu * cv);
    }
  }
  return out;
}

bool equals_specialized(const Element& at_q0, const ClassicalElement& classical) {
  if (at_q0.terms().size() != classical.terms().size()) return false;
  for (const auto& [w, s] : at_q0.terms()) {
    auto it = classical.terms().find(w);
    if (it == classical.terms().end()) return false;
    if (!(s == Scalar::of(it->second))) return false;
  }
  return true;
}

ClassicalTensorElement ClassicalTensorAlgebra::coaction(const ClassicalElement& x) const {
  ClassicalTensorElement out;
  for (const auto& [w, c] : x.terms()) {
    ClassicalTensorElement acc = ClassicalTensorElement::unit();
    for (GenId g : w) {
      ClassicalTensorElement im;
      for (int k = 1; k <= 2; ++k)
        im.add_term({Word{gen(g.row, k)}, Word{gen(k, g.col)}}, 1);
      acc = multiply(acc, im);
    }
    out += c * acc;
  }
  return out;
}

}  // namespace qmsa
