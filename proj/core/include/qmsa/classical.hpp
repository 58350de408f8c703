#pragma once

#include <map>
#include <utility>

#include "qmsa/element.hpp"
#include "qmsa/rational.hpp"
#include "qmsa/shape.hpp"

namespace qmsa {

/// Supercommutative (q = 1) specialization engine. This is a separate,
/// much simpler rewriter: letters reorder with a Koszul sign and odd
/// letters square to zero. The classical suites use it as a route that is
/// independent of the q-straightening code.
class ClassicalElement {
 public:
  ClassicalElement() = default;

  static ClassicalElement zero() { return {}; }
  static ClassicalElement unit();
  static ClassicalElement term(Word w, Rational c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }

  void add_term(const Word& w, const Rational& c);

  ClassicalElement operator-() const;
  ClassicalElement& operator+=(const ClassicalElement& rhs);
  ClassicalElement& operator-=(const ClassicalElement& rhs);
  friend ClassicalElement operator+(ClassicalElement a, const ClassicalElement& b) { return a += b; }
  friend ClassicalElement operator-(ClassicalElement a, const ClassicalElement& b) { return a -= b; }
  friend ClassicalElement operator*(const Rational& c, const ClassicalElement& x);

  friend bool operator==(const ClassicalElement&, const ClassicalElement&) = default;

 private:
  std::map<Word, Rational> terms_;
};

class ClassicalAlgebra {
 public:
  explicit ClassicalAlgebra(AlgebraShape shape) : shape_(shape) {}

  const AlgebraShape& shape() const { return shape_; }

  /// Sorts the word, tracking the sign of odd-odd transpositions; words
  /// with a repeated odd letter vanish.
  ClassicalElement normal_form(Word w, Rational c = 1) const;
  ClassicalElement multiply(const ClassicalElement& x, const ClassicalElement& y) const;

  ClassicalElement gen_elem(int row, int col) const {
    return normal_form(Word{gen(row, col)});
  }
  /// d_rs = a_r1 a_s2 - a_r2 a_s1 (columns 1,2).
  ClassicalElement minor(int r, int s) const;

 private:
  AlgebraShape shape_;
};

/// Tensor square of classical algebras with Koszul multiplication, for the
/// q = 1 coaction checks.
class ClassicalTensorElement {
 public:
  using WordPair = std::pair<Word, Word>;

  ClassicalTensorElement() = default;
  static ClassicalTensorElement unit();

  bool is_zero() const { return terms_.empty(); }
  const std::map<WordPair, Rational>& terms() const { return terms_; }

  void add_term(const WordPair& wp, const Rational& c);

  ClassicalTensorElement& operator+=(const ClassicalTensorElement& rhs);
  ClassicalTensorElement& operator-=(const ClassicalTensorElement& rhs);
  friend ClassicalTensorElement operator-(ClassicalTensorElement a, const ClassicalTensorElement& b) { return a -= b; }
  friend ClassicalTensorElement operator*(const Rational& c, const ClassicalTensorElement& x);

  friend bool operator==(const ClassicalTensorElement&, const ClassicalTensorElement&) = default;

 private:
  std::map<WordPair, Rational> terms_;
};

class ClassicalTensorAlgebra {
 public:
  ClassicalTensorAlgebra(const ClassicalAlgebra& left, const ClassicalAlgebra& right)
      : left_(&left), right_(&right) {}

  ClassicalTensorElement tensor(const ClassicalElement& x, const ClassicalElement& y) const;
  ClassicalTensorElement multiply(const ClassicalTensorElement& a,
                                  const ClassicalTensorElement& b) const;

  /// The coaction a_ij -> sum_{k=1,2} a_ik (x) g_kj applied to x.
  ClassicalTensorElement coaction(const ClassicalElement& x) const;

 private:
  const ClassicalAlgebra* left_;
  const ClassicalAlgebra* right_;
};

/// True when a q-engine element whose coefficients are constants (e.g.
/// after specialize(1)) agrees term by term with a classical element.
bool equals_specialized(const Element& at_q0, const ClassicalElement& classical);

}  // namespace qmsa
