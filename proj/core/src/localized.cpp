#include "qmsa/localized.hpp"

#include <stdexcept>

namespace qmsa {

namespace {
constexpr int kMaxCachedPower = 8;
constexpr int kMaxTwistScan = 6;
}  // namespace

LocalizedRing::LocalizedRing(const ManinAlgebra& alg, Element d, std::string name)
    : alg_(&alg), d_(std::move(d)), name_(std::move(name)) {
  if (d_.is_zero())
    throw std::invalid_argument("LocalizedRing: denominator is zero");

  // Certify twist exponents: d*g == q^{-c} g*d checked in normal form.
  for (GenId g : alg_->shape().generators()) {
    const Element dg = alg_->multiply(d_, Element::generator(g));
    const Element gd = alg_->multiply(Element::generator(g), d_);
    for (int c = -kMaxTwistScan; c <= kMaxTwistScan; ++c) {
      if (dg == Scalar::q_power(-c) * gd) {
        letter_twist_.emplace(g, c);
        break;
      }
    }
  }

  d_powers_.reserve(kMaxCachedPower + 1);
  d_powers_.push_back(Element::unit());
  for (int k = 1; k <= kMaxCachedPower; ++k)
    d_powers_.push_back(alg_->multiply(d_powers_.back(), d_));
}

std::optional<int> LocalizedRing::letter_twist(GenId g) const {
  auto it = letter_twist_.find(g);
  if (it == letter_twist_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> LocalizedRing::word_twist(const Word& w) const {
  int total = 0;
  for (GenId g : w) {
    auto c = letter_twist(g);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

const Element& LocalizedRing::denom_power(int k) const {
  if (k < 0 || k > kMaxCachedPower)
    throw std::invalid_argument("LocalizedRing: denominator power out of range");
  return d_powers_[static_cast<std::size_t>(k)];
}

LocalizedElement LocalizedRing::make(Element num, int denom_pow) const {
  if (denom_pow < 0)
    throw std::invalid_argument("LocalizedRing: negative denominator power");
  return reduce(LocalizedElement{std::move(num), denom_pow});
}

std::optional<std::pair<Scalar, int>> LocalizedRing::as_denom_multiple(
    const Element& num) const {
  if (num.is_zero()) return std::nullopt;
  const std::size_t len = num.terms().begin()->first.size();
  const std::size_t dlen = d_.terms().begin()->first.size();
  if (dlen == 0 || len % dlen != 0) return std::nullopt;
  const int j = static_cast<int>(len / dlen);
  if (j > kMaxCachedPower) return std::nullopt;
  for (const auto& [w, c] : num.terms())
    if (w.size() != len) return std::nullopt;
  const Element& dj = denom_power(j);
  if (dj.is_zero()) return std::nullopt;
  const auto& [w0, c0] = *dj.terms().begin();
  auto it = num.terms().find(w0);
  if (it == num.terms().end()) return std::nullopt;
  auto s = divide_exact(it->second, c0);
  if (!s) return std::nullopt;
  if (num == *s * dj) return std::make_pair(*s, j);
  return std::nullopt;
}

LocalizedElement LocalizedRing::reduce(LocalizedElement x) const {
  if (x.num.is_zero()) return LocalizedElement{Element::zero(), 0};
  if (x.denom_pow == 0) return x;
  if (auto m = as_denom_multiple(x.num)) {
    const auto& [s, j] = *m;
    if (j <= x.denom_pow)
      return LocalizedElement{s * Element::unit(), x.denom_pow - j};
    return LocalizedElement{s * denom_power(j - x.denom_pow), 0};
  }
  return x;
}

LocalizedElement LocalizedRing::mul(const LocalizedElement& a,
                                    const LocalizedElement& b) const {
  // b = s * d^{j - kb}: fold the powers directly instead of twisting.
  if (auto m = as_denom_multiple(b.num)) {
    const auto& [s, j] = *m;
    const int net = j - a.denom_pow - b.denom_pow;
    if (net <= 0) return reduce(LocalizedElement{s * a.num, -net});
    return reduce(LocalizedElement{alg_->multiply(s * a.num, denom_power(net)), 0});
  }

  // d^{-ka} * w = q^{ka * t(w)} w * d^{-ka}; nothing to move when ka = 0.
  if (a.denom_pow == 0)
    return reduce(LocalizedElement{alg_->multiply(a.num, b.num), b.denom_pow});
  Element twisted;
  for (const auto& [w, c] : b.num.terms()) {
    auto t = word_twist(w);
    if (!t)
      throw std::domain_error("LocalizedRing(" + name_ +
                              "): numerator word is not twistable past the denominator");
    twisted.add_term(w, Scalar::q_power(a.denom_pow * *t) * c);
  }
  return reduce(LocalizedElement{alg_->multiply(a.num, twisted),
                                 a.denom_pow + b.denom_pow});
}

LocalizedElement LocalizedRing::add(LocalizedElement a, LocalizedElement b) const {
  const int k = std::max(a.denom_pow, b.denom_pow);
  Element num = cleared_numerator(a, k) + cleared_numerator(b, k);
  return reduce(LocalizedElement{std::move(num), k});
}

LocalizedElement LocalizedRing::scale(const Scalar& c, LocalizedElement x) const {
  x.num = c * x.num;
  return reduce(std::move(x));
}

LocalizedElement LocalizedRing::neg(LocalizedElement x) const {
  x.num = -x.num;
  return x;
}

Element LocalizedRing::cleared_numerator(const LocalizedElement& x, int k) const {
  if (k < x.denom_pow)
    throw std::invalid_argument("LocalizedRing: cannot clear below the denominator power");
  if (k == x.denom_pow) return x.num;
  return alg_->multiply(x.num, denom_power(k - x.denom_pow));
}

Element LocalizedRing::residue(const LocalizedElement& a,
                               const LocalizedElement& b) const {
  const int k = std::max(a.denom_pow, b.denom_pow);
  return cleared_numerator(a, k) - cleared_numerator(b, k);
}

}  // namespace qmsa
