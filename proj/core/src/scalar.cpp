#include "qmsa/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qmsa {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](Integer& out) -> bool {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    return true;
  };
  Integer num;
  if (!digits(num)) return std::nullopt;
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den) || den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

Scalar Scalar::monomial(int exponent, Rational coeff) {
  Scalar s;
  if (coeff != 0) s.terms_.emplace(exponent, std::move(coeff));
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

Rational Scalar::eval(const Rational& q0) const {
  if (q0 == 0) throw std::invalid_argument("Scalar::eval: q0 must be nonzero");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    const Rational base = e >= 0 ? q0 : Rational(1) / q0;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
    acc += c * p;
  }
  return acc;
}

std::optional<Scalar> divide_exact(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Scalar::zero();
  // Shift both to ordinary polynomials with nonzero constant term and
  // divide by ascending powers.
  const int sa = a.terms().begin()->first;
  const int sb = b.terms().begin()->first;
  const int deg_a = a.terms().rbegin()->first - sa;
  const int deg_b = b.terms().rbegin()->first - sb;
  if (deg_b > deg_a) return std::nullopt;

  std::map<int, Rational> rem;
  for (const auto& [e, c] : a.terms()) rem.emplace(e - sa, c);
  const Rational b0 = b.terms().begin()->second;

  Scalar quot;
  while (!rem.empty()) {
    const int e = rem.begin()->first;
    if (e > deg_a - deg_b) return std::nullopt;
    const Rational c = rem.begin()->second / b0;
    quot += Scalar::monomial(e + sa - sb, c);
    for (const auto& [eb, cb] : b.terms()) {
      const int k = e + (eb - sb);
      auto it = rem.find(k);
      if (it == rem.end()) {
        rem.emplace(k, -c * cb);
      } else {
        it->second -= c * cb;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quot;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qmsa
