#pragma once

#include <map>
#include <string>

#include "qmsa/rational.hpp"

namespace qmsa {

/// An element of the coefficient ring C_q: a Laurent polynomial in q with
/// rational coefficients, kept in canonical sparse form (no zero terms).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero() { return Scalar{}; }
  static Scalar one() { return monomial(0, 1); }
  /// q^e
  static Scalar q_power(int e) { return monomial(e, 1); }
  /// c * q^e
  static Scalar monomial(int exponent, Rational coeff);
  static Scalar of(Rational c) { return monomial(0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  const std::map<int, Rational>& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;
  friend auto operator<=>(const Scalar& a, const Scalar& b) = default;

  /// Exact value at q = q0. Rejects q0 = 0 (negative exponents undefined).
  Rational eval(const Rational& q0) const;

  /// Canonical text form, e.g. "q^-1 - 3*q", "1", "0", "2/3*q^2".
  std::string str() const;

 private:
  std::map<int, Rational> terms_;  // exponent -> nonzero coefficient
};

inline Scalar operator*(const Rational& c, const Scalar& s) {
  return Scalar::of(c) * s;
}

/// Exact quotient a/b in the Laurent ring, or nullopt when b does not
/// divide a (or b = 0).
std::optional<Scalar> divide_exact(const Scalar& a, const Scalar& b);

}  // namespace qmsa
