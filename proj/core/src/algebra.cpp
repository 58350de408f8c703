#include "qmsa/algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace qmsa {

namespace {
thread_local unsigned long long g_rewrite_steps = 0;

Scalar q_minus_inverse_gap() {
  // q^-1 - q, the universal correction coefficient.
  return Scalar::q_power(-1) - Scalar::q_power(1);
}
}  // namespace

unsigned long long rewrite_steps() { return g_rewrite_steps; }
void reset_rewrite_steps() { g_rewrite_steps = 0; }

ManinAlgebra::ManinAlgebra(AlgebraShape shape) : shape_(shape) {
  if (shape_.even_count < 0 || shape_.odd_count < 0 || shape_.dim() < 1)
    throw std::invalid_argument("ManinAlgebra: need r >= 0, s >= 0, r+s >= 1");
  if (shape_.max_col() < 1 || shape_.max_col() > shape_.dim())
    throw std::invalid_argument("ManinAlgebra: column limit out of range");
  const auto gens = shape_.generators();
  pair_table_.resize(gens.size() * gens.size());
  for (GenId x : gens)
    for (GenId y : gens) pair_table_[pair_index(x, y)] = compute_pair(x, y);
}

std::size_t ManinAlgebra::pair_index(GenId x, GenId y) const {
  const std::size_t n = static_cast<std::size_t>(shape_.dim()) * shape_.max_col();
  const std::size_t ix = static_cast<std::size_t>(x.row - 1) * shape_.max_col() + (x.col - 1);
  const std::size_t iy = static_cast<std::size_t>(y.row - 1) * shape_.max_col() + (y.col - 1);
  return ix * n + iy;
}

Element ManinAlgebra::compute_pair(GenId x, GenId y) const {
  if (x < y) return Element::term(Word{x, y}, Scalar::one());
  if (x == y) {
    if (shape_.parity(x) == 1) return Element::zero();
    return Element::term(Word{x, x}, Scalar::one());
  }
  // x > y: orient the Manin relation so x*y rewrites to smaller-leading
  // words. Write y = a_{ij}, x = a_{kl} with (i,j) < (k,l).
  const int i = y.row, j = y.col, k = x.row, l = x.col;
  const int sign_pow = shape_.parity(x) * shape_.parity(y);
  const Scalar s = sign_pow ? -Scalar::one() : Scalar::one();
  const Word swapped{y, x};

  if (i == k) {
    // Same row, j < l: a_ij a_il = (-1)^pp q^((-1)^(p(i)+1)) a_il a_ij.
    const int e = shape_.index_parity(i) == 0 ? -1 : 1;
    return Element::term(swapped, s * Scalar::q_power(-e));
  }
  if (j == l) {
    const int e = shape_.index_parity(j) == 0 ? -1 : 1;
    return Element::term(swapped, s * Scalar::q_power(-e));
  }
  if (j > l) {
    // Anti-diagonal: the pair commutes up to sign.
    return Element::term(swapped, s);
  }
  // Diagonal (i < k, j < l). Requiring the two superspace coactions
  //   x_b x_c = (-1)^{p(b)p(c)} q^-1 x_c x_b (b < c), x_odd^2 = 0,
  // and the parity-flipped dual to be algebra maps forces
  //   a_kl a_ij = (-1)^{pi pi'} a_ij a_kl
  //             - (-1)^{p(i)p(k)+p(k)p(l)+p(i)p(l)} (q^-1 - q) a_il a_kj,
  // with the correction already in normal order. The sign on the correction
  // agrees with a Koszul prefactor only when at most one of the four indices
  // is odd per side; the difference is invisible at q = 1 and the diamond
  // property (checked exhaustively in degree 3 by the confluence suite)
  // holds for this orientation and fails for the naive one.
  Element out = Element::term(swapped, s);
  const int e2 = shape_.index_parity(i) * shape_.index_parity(k) +
                 shape_.index_parity(k) * shape_.index_parity(l) +
                 shape_.index_parity(i) * shape_.index_parity(l);
  Scalar coeff = -q_minus_inverse_gap();
  if (e2 & 1) coeff = -coeff;
  out += coeff * Element::term(Word{gen(i, l), gen(k, j)}, Scalar::one());
  return out;
}

const Element& ManinAlgebra::straighten_pair(GenId x, GenId y) const {
  assert(shape_.valid(x) && shape_.valid(y));
  return pair_table_[pair_index(x, y)];
}

Element ManinAlgebra::normal_form(
    const std::vector<std::pair<Word, Scalar>>& raw, Strategy strategy) const {
  Element result;
  std::vector<std::pair<Word, Scalar>> work(raw);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    // Odd squares are applied before any swap: an adjacent repeated odd
    // letter kills the whole term.
    bool dead = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1] && shape_.parity(w[p]) == 1) {
        dead = true;
        break;
      }
    }
    if (dead) {
      ++g_rewrite_steps;
      continue;
    }

    std::ptrdiff_t pos = -1;
    if (strategy == Strategy::kLeftmost) {
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) {
          pos = static_cast<std::ptrdiff_t>(p);
          break;
        }
    } else {
      for (std::size_t p = w.size(); p-- > 1;)
        if (w[p] < w[p - 1]) {
          pos = static_cast<std::ptrdiff_t>(p - 1);
          break;
        }
    }
    if (pos < 0) {
      result.add_term(w, c);
      continue;
    }

    ++g_rewrite_steps;
    const Element& rep = straighten_pair(w[pos], w[pos + 1]);
    for (const auto& [pw, pc] : rep.terms()) {
      Word nw;
      nw.reserve(w.size() - 2 + pw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), pw.begin(), pw.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(nw), c * pc);
    }
  }
  return result;
}

Element ManinAlgebra::normal_form(Word w, Strategy strategy) const {
  return normal_form({{std::move(w), Scalar::one()}}, strategy);
}

Element ManinAlgebra::multiply(const Element& x, const Element& y) const {
  std::vector<std::pair<Word, Scalar>> raw;
  raw.reserve(x.terms().size() * y.terms().size());
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      Word w;
      w.reserve(wx.size() + wy.size());
      w.insert(w.end(), wx.begin(), wx.end());
      w.insert(w.end(), wy.begin(), wy.end());
      raw.emplace_back(std::move(w), cx * cy);
    }
  return normal_form(raw);
}

Element ManinAlgebra::gen_elem(int row, int col) const {
  const GenId g = gen(row, col);
  if (!shape_.valid(g))
    throw std::invalid_argument("generator index out of range: " + to_string(g));
  return Element::generator(g);
}

}  // namespace qmsa
