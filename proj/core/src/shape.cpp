#include "qmsa/shape.hpp"

namespace qmsa {

std::vector<GenId> AlgebraShape::generators() const {
  std::vector<GenId> out;
  out.reserve(static_cast<std::size_t>(dim()) * max_col());
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= max_col(); ++j) out.push_back(gen(i, j));
  return out;
}

int word_parity(const Word& w, const AlgebraShape& shape) {
  int p = 0;
  for (GenId g : w) p ^= shape.parity(g);
  return p;
}

int row_inversions(const Word& w) {
  int n = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q)
      if (w[p].row > w[q].row) ++n;
  return n;
}

int col_inversions(const Word& w) {
  int n = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q)
      if (w[p].col > w[q].col) ++n;
  return n;
}

std::string to_string(GenId g) {
  return "a[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

}  // namespace qmsa
