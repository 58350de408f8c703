#pragma once

#include <map>
#include <tuple>

#include "qmsa/algebra.hpp"

namespace qmsa {

using WordPair = std::pair<Word, Word>;

/// An element of a Z2-graded tensor square A (x) B. The two legs may live
/// over different shapes (coactions such as C_q[S] (x) GL_q(2)); both legs
/// of every stored term are in normal order.
class TensorElement {
 public:
  TensorElement() = default;

  static TensorElement zero() { return TensorElement{}; }
  static TensorElement unit() {
    return term(Word{}, Word{}, Scalar::one());
  }
  static TensorElement term(Word left, Word right, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<WordPair, Scalar>& terms() const { return terms_; }

  void add_term(const WordPair& wp, const Scalar& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  friend TensorElement operator*(const Scalar& c, const TensorElement& x);

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  TensorElement specialize(const Rational& q0) const;

 private:
  std::map<WordPair, Scalar> terms_;
};

/// The Koszul tensor square: multiplication obeys
///   (x (x) y) (x' (x) y') = (-1)^{|y||x'|} (x x' (x) y y')
/// for homogeneous legs, with each leg normalized in its own algebra.
class TensorAlgebra {
 public:
  TensorAlgebra(const ManinAlgebra& left, const ManinAlgebra& right)
      : left_(&left), right_(&right) {}

  const ManinAlgebra& left() const { return *left_; }
  const ManinAlgebra& right() const { return *right_; }

  /// The pure tensor x (x) y (no sign; signs arise in multiplication).
  TensorElement tensor(const Element& x, const Element& y) const;

  TensorElement multiply(const TensorElement& a, const TensorElement& b) const;

 private:
  const ManinAlgebra* left_;
  const ManinAlgebra* right_;
};

/// An algebra map into a tensor square, given on generators and extended
/// multiplicatively. Houses the coproduct and the coactions.
class TensorGenMap {
 public:
  TensorGenMap(const ManinAlgebra& source, TensorAlgebra target)
      : source_(&source), target_(target) {}

  void set_image(GenId g, TensorElement im);
  const TensorElement& image(GenId g) const;

  const ManinAlgebra& source() const { return *source_; }
  const TensorAlgebra& target() const { return target_; }

  TensorElement apply(const Element& x) const;

 private:
  const ManinAlgebra* source_;
  TensorAlgebra target_;
  std::map<GenId, TensorElement> images_;
};

/// The comultiplication of M_q(m|n): Delta(a_ij) = sum_k a_ik (x) a_kj,
/// extended as an algebra morphism into the Koszul tensor square. Requires
/// the full column range.
TensorGenMap coproduct_map(const ManinAlgebra& alg);
TensorElement coproduct(const Element& x, const ManinAlgebra& alg);

/// The counit: eps(a_ij) = delta_ij, extended multiplicatively + linearly.
Scalar counit(const Element& x);

/// Leg collapses (eps (x) id) and (id (x) eps).
Element collapse_left(const TensorElement& t);
Element collapse_right(const TensorElement& t);

/// An algebra map between Manin algebras, given on generators.
class GenMap {
 public:
  GenMap(const ManinAlgebra& source, const ManinAlgebra& target)
      : source_(&source), target_(&target) {}

  void set_image(GenId g, Element im);
  const Element& image(GenId g) const;

  const ManinAlgebra& source() const { return *source_; }
  const ManinAlgebra& target() const { return *target_; }

  Element apply(const Element& x) const;

 private:
  const ManinAlgebra* source_;
  const ManinAlgebra* target_;
  std::map<GenId, Element> images_;
};

/// Morphism certificates: f is well defined iff f(xy) = f(x)f(y) for every
/// ordered generator pair (the ideal is quadratic, so pairs see every
/// relation, including odd squares). Returns the failing pairs.
struct MorphismResidue {
  GenId x, y;
  // Exactly one of the two residues is populated, depending on the target.
  Element residue;
  TensorElement tensor_residue;
};
std::vector<MorphismResidue> verify_morphism(const GenMap& f);
std::vector<MorphismResidue> verify_morphism(const TensorGenMap& f);

/// Triple tensors, used only for coassociativity checks.
using WordTriple = std::tuple<Word, Word, Word>;
using Tensor3Element = std::map<WordTriple, Scalar>;

Tensor3Element apply_delta_left(const TensorElement& t, const TensorGenMap& delta);
Tensor3Element apply_delta_right(const TensorElement& t, const TensorGenMap& delta);

}  // namespace qmsa
