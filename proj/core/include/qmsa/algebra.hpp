#pragma once

#include <utility>
#include <vector>

#include "qmsa/element.hpp"

namespace qmsa {

/// Position choice for the straightening rewrite. The two strategies must
/// agree on every input (empirical confluence; see the manin-properties
/// suite), so the choice only matters for testing.
enum class Strategy {
  kLeftmost,
  kRightmost,
};

/// Count of pair rewrites performed on the calling thread since the last
/// reset. Suites snapshot this around each instance.
unsigned long long rewrite_steps();
void reset_rewrite_steps();

/// The quantum matrix superalgebra M_q(r|s): words in the generators
/// modulo the Manin relations and the odd squares. Elements are kept in
/// normal form (words nondecreasing in (row, col), odd letters squarefree);
/// equality of elements is normal-form identity.
///
/// The relation table is oriented so the lexicographically larger adjacent
/// pair rewrites to smaller-leading words. It is memoized eagerly at
/// construction and read-only afterwards, so a shared algebra is safe to
/// use from concurrent workers.
class ManinAlgebra {
 public:
  explicit ManinAlgebra(AlgebraShape shape);

  const AlgebraShape& shape() const { return shape_; }

  /// Normal form of the product x*y of two generators: the single word xy
  /// when already ordered, zero for an odd square, otherwise the right-hand
  /// side of the oriented Manin relation.
  const Element& straighten_pair(GenId x, GenId y) const;

  /// Fixed point of the rewrite system on a raw linear combination of
  /// (not necessarily ordered) words. Deterministic for a fixed strategy.
  Element normal_form(const std::vector<std::pair<Word, Scalar>>& raw,
                      Strategy strategy = Strategy::kLeftmost) const;
  Element normal_form(Word w, Strategy strategy = Strategy::kLeftmost) const;

  /// Normal form of the product, bilinear over C_q.
  Element multiply(const Element& x, const Element& y) const;

  Element gen_elem(int row, int col) const;
  Element one() const { return Element::unit(); }

  int parity(GenId g) const { return shape_.parity(g); }

 private:
  Element compute_pair(GenId x, GenId y) const;
  std::size_t pair_index(GenId x, GenId y) const;

  AlgebraShape shape_;
  std::vector<Element> pair_table_;
};

}  // namespace qmsa
