#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmsa {

/// A generator a_{ij} of a quantum matrix superalgebra, identified by its
/// matrix position. Parity is a function of the position and the ambient
/// shape; it is never stored.
struct GenId {
  std::uint8_t row = 0;
  std::uint8_t col = 0;

  friend constexpr auto operator<=>(GenId a, GenId b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
  friend constexpr bool operator==(GenId, GenId) = default;
};

/// The shape of M_q(r|s): indices 1..r are even, r+1..r+s odd. A column
/// limit restricts to the rectangular algebra on columns 1..column_limit
/// (the coordinate ring of S uses columns {1,2}).
struct AlgebraShape {
  int even_count = 0;                // r
  int odd_count = 0;                 // s
  std::optional<int> column_limit;   // columns 1..column_limit when set

  int dim() const { return even_count + odd_count; }
  int max_col() const { return column_limit ? *column_limit : dim(); }

  /// Index parity p(i): 0 for 1 <= i <= r, 1 for r < i <= r+s.
  int index_parity(int i) const { return i <= even_count ? 0 : 1; }
  /// Generator parity pi(a_{ij}) = p(i) + p(j) mod 2.
  int parity(GenId g) const {
    return (index_parity(g.row) + index_parity(g.col)) & 1;
  }

  bool valid_row(int i) const { return i >= 1 && i <= dim(); }
  bool valid_col(int j) const { return j >= 1 && j <= max_col(); }
  bool valid(GenId g) const { return valid_row(g.row) && valid_col(g.col); }

  std::vector<GenId> generators() const;

  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
};

inline AlgebraShape manin_shape(int r, int s,
                                std::optional<int> column_limit = {}) {
  return AlgebraShape{r, s, column_limit};
}

/// A word in the generators. Normal order is nondecreasing in (row, col)
/// with odd letters squarefree.
using Word = std::vector<GenId>;

inline GenId gen(int row, int col) {
  return GenId{static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
}

int word_parity(const Word& w, const AlgebraShape& shape);

/// Pairs p < q with w[p] > w[q] under the row (resp. column) component.
/// Used by the termination measure: every rewrite strictly decreases
/// (length, row inversions, column inversions) lexicographically.
int row_inversions(const Word& w);
int col_inversions(const Word& w);

std::string to_string(GenId g);

}  // namespace qmsa
