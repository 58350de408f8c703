#include "qmsa/tensor.hpp"

#include <stdexcept>

namespace qmsa {

TensorElement TensorElement::term(Word left, Word right, Scalar c) {
  TensorElement t;
  if (!c.is_zero())
    t.terms_.emplace(WordPair{std::move(left), std::move(right)}, std::move(c));
  return t;
}

void TensorElement::add_term(const WordPair& wp, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(wp);
  if (it == terms_.end()) {
    terms_.emplace(wp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator-() const {
  TensorElement out;
  for (const auto& [wp, c] : terms_) out.terms_.emplace(wp, -c);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  for (const auto& [wp, c] : rhs.terms_) add_term(wp, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  for (const auto& [wp, c] : rhs.terms_) add_term(wp, -c);
  return *this;
}

TensorElement operator*(const Scalar& c, const TensorElement& x) {
  TensorElement out;
  if (c.is_zero()) return out;
  for (const auto& [wp, xc] : x.terms_) {
    Scalar p = c * xc;
    if (!p.is_zero()) out.terms_.emplace(wp, std::move(p));
  }
  return out;
}

TensorElement TensorElement::specialize(const Rational& q0) const {
  TensorElement out;
  for (const auto& [wp, c] : terms_) out.add_term(wp, Scalar::of(c.eval(q0)));
  return out;
}

TensorElement TensorAlgebra::tensor(const Element& x, const Element& y) const {
  TensorElement out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms())
      out.add_term(WordPair{wx, wy}, cx * cy);
  return out;
}

TensorElement TensorAlgebra::multiply(const TensorElement& a,
                                      const TensorElement& b) const {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms()) {
    const int right_par = word_parity(wa.second, right_->shape());
    for (const auto& [wb, cb] : b.terms()) {
      const int left_par = word_parity(wb.first, left_->shape());
      Scalar c = ca * cb;
      if (right_par && left_par) c = -c;

      Word lw = wa.first;
      lw.insert(lw.end(), wb.first.begin(), wb.first.end());
      Word rw = wa.second;
      rw.insert(rw.end(), wb.second.begin(), wb.second.end());
      const Element ln = left_->normal_form(std::move(lw));
      const Element rn = right_->normal_form(std::move(rw));
      for (const auto& [u, cu] : ln.terms())
        for (const auto& [v, cv] : rn.terms())
          out.add_term(WordPair{u, v}, c * cu * cv);
    }
  }
  return out;
}

void TensorGenMap::set_image(GenId g, TensorElement im) {
  images_[g] = std::move(im);
}

const TensorElement& TensorGenMap::image(GenId g) const {
  auto it = images_.find(g);
  if (it == images_.end())
    throw std::invalid_argument("TensorGenMap: no image for " + to_string(g));
  return it->second;
}

TensorElement TensorGenMap::apply(const Element& x) const {
  TensorElement out;
  for (const auto& [w, c] : x.terms()) {
    TensorElement acc = TensorElement::unit();
    for (GenId g : w) acc = target_.multiply(acc, image(g));
    out += c * acc;
  }
  return out;
}

TensorGenMap coproduct_map(const ManinAlgebra& alg) {
  if (alg.shape().column_limit)
    throw std::invalid_argument("coproduct needs the full column range");
  TensorGenMap d(alg, TensorAlgebra(alg, alg));
  const int n = alg.shape().dim();
  for (GenId g : alg.shape().generators()) {
    TensorElement im;
    for (int k = 1; k <= n; ++k)
      im += TensorElement::term(Word{gen(g.row, k)}, Word{gen(k, g.col)},
                                Scalar::one());
    d.set_image(g, std::move(im));
  }
  return d;
}

TensorElement coproduct(const Element& x, const ManinAlgebra& alg) {
  return coproduct_map(alg).apply(x);
}

Scalar counit(const Element& x) {
  Scalar out = Scalar::zero();
  for (const auto& [w, c] : x.terms()) {
    bool diagonal = true;
    for (GenId g : w)
      if (g.row != g.col) {
        diagonal = false;
        break;
      }
    if (diagonal) out += c;
  }
  return out;
}

namespace {
bool word_diagonal(const Word& w) {
  for (GenId g : w)
    if (g.row != g.col) return false;
  return true;
}
}  // namespace

Element collapse_left(const TensorElement& t) {
  Element out;
  for (const auto& [wp, c] : t.terms())
    if (word_diagonal(wp.first)) out.add_term(wp.second, c);
  return out;
}

Element collapse_right(const TensorElement& t) {
  Element out;
  for (const auto& [wp, c] : t.terms())
    if (word_diagonal(wp.second)) out.add_term(wp.first, c);
  return out;
}

void GenMap::set_image(GenId g, Element im) { images_[g] = std::move(im); }

const Element& GenMap::image(GenId g) const {
  auto it = images_.find(g);
  if (it == images_.end())
    throw std::invalid_argument("GenMap: no image for " + to_string(g));
  return it->second;
}

Element GenMap::apply(const Element& x) const {
  Element out;
  for (const auto& [w, c] : x.terms()) {
    Element acc = Element::unit();
    for (GenId g : w) acc = target_->multiply(acc, image(g));
    out += c * acc;
  }
  return out;
}

std::vector<MorphismResidue> verify_morphism(const GenMap& f) {
  std::vector<MorphismResidue> bad;
  const auto gens = f.source().shape().generators();
  for (GenId x : gens)
    for (GenId y : gens) {
      const Element lhs = f.apply(f.source().straighten_pair(x, y));
      const Element rhs =
          f.target().multiply(f.image(x), f.image(y));
      if (lhs != rhs) bad.push_back({x, y, lhs - rhs, {}});
    }
  return bad;
}

std::vector<MorphismResidue> verify_morphism(const TensorGenMap& f) {
  std::vector<MorphismResidue> bad;
  const auto gens = f.source().shape().generators();
  for (GenId x : gens)
    for (GenId y : gens) {
      const TensorElement lhs = f.apply(f.source().straighten_pair(x, y));
      const TensorElement rhs = f.target().multiply(f.image(x), f.image(y));
      if (!(lhs == rhs)) bad.push_back({x, y, {}, lhs - rhs});
    }
  return bad;
}

Tensor3Element apply_delta_left(const TensorElement& t,
                                const TensorGenMap& delta) {
  Tensor3Element out;
  for (const auto& [wp, c] : t.terms()) {
    const TensorElement dx = delta.apply(Element::term(wp.first, Scalar::one()));
    for (const auto& [uv, cc] : dx.terms()) {
      WordTriple key{uv.first, uv.second, wp.second};
      auto it = out.find(key);
      Scalar add = c * cc;
      if (it == out.end()) {
        if (!add.is_zero()) out.emplace(std::move(key), std::move(add));
      } else {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Tensor3Element apply_delta_right(const TensorElement& t,
                                 const TensorGenMap& delta) {
  Tensor3Element out;
  for (const auto& [wp, c] : t.terms()) {
    const TensorElement dy = delta.apply(Element::term(wp.second, Scalar::one()));
    for (const auto& [uv, cc] : dy.terms()) {
      WordTriple key{wp.first, uv.first, uv.second};
      auto it = out.find(key);
      Scalar add = c * cc;
      if (it == out.end()) {
        if (!add.is_zero()) out.emplace(std::move(key), std::move(add));
      } else {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace qmsa
