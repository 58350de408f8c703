#include "qmsa/exprcontext.hpp"

namespace qmsa {

namespace {

[[noreturn]] void bad_atom(const ExprNode& node, const std::string& why) {
  std::string idx;
  for (std::size_t i = 0; i < node.indices.size(); ++i) {
    if (i) idx += ",";
    idx += std::to_string(node.indices[i]);
  }
  throw std::invalid_argument("atom " + node.name + "[" + idx + "]: " + why);
}

}  // namespace

LocalizedElement AmbientResolver::atom(const ExprNode& node) const {
  const ManinAlgebra& A = algebra();
  const Grassmannian& gr = mink_->grassmannian();

  if (node.name == "Dinv") {
    if (!node.indices.empty()) bad_atom(node, "takes no indices");
    return mink_->ring().denom_inverse();
  }
  if (node.name == "a") {
    if (node.indices.size() != 2 || node.semicolon_at >= 0)
      bad_atom(node, "expected a[row,col]");
    const int i = node.indices[0], j = node.indices[1];
    if (!A.shape().valid_row(i) || !A.shape().valid_col(j))
      bad_atom(node, "index out of range");
    return LocalizedElement{A.gen_elem(i, j), 0};
  }
  if (node.name == "D") {
    if (node.indices.size() == 2 && node.semicolon_at < 0) {
      const int r = node.indices[0], s = node.indices[1];
      if (r == s && r != 5 && r != 6)
        bad_atom(node, "equal-row minors exist only for rows 5,6");
      if (r > s || r < 1 || s > 6) bad_atom(node, "index out of range");
      return LocalizedElement{gr.build_minor(r, s), 0};
    }
    if (node.indices.size() == 4 && node.semicolon_at == 2) {
      const int r = node.indices[0], s = node.indices[1];
      const int k = node.indices[2], l = node.indices[3];
      if (!(r < s) || !(k < l) || r < 1 || s > 6 || k < 1 || l > 6)
        bad_atom(node, "expected D[r,s;k,l] with r<s, k<l in 1..6");
      return LocalizedElement{gr.generalized_minor(r, s, k, l), 0};
    }
    bad_atom(node, "expected D[r,s] or D[r,s;k,l]");
  }
  if (node.name == "u" || node.name == "nu") {
    if (node.indices.size() != 2 || node.semicolon_at >= 0)
      bad_atom(node, "expected two indices");
    const bool odd = node.name == "nu";
    const int r = node.indices[0], c = node.indices[1];
    if (c != 1 && c != 2) bad_atom(node, "column must be 1 or 2");
    if (!odd && (r != 3 && r != 4)) bad_atom(node, "u rows are 3,4");
    if (odd && (r != 5 && r != 6)) bad_atom(node, "nu rows are 5,6");
    return mink_->value(MinkGen{odd, r, c});
  }
  bad_atom(node, "unknown atom in the ambient context");
}

LocalizedElement GL2Resolver::atom(const ExprNode& node) const {
  if (node.name == "Detinv") {
    if (!node.indices.empty()) bad_atom(node, "takes no indices");
    return ring_->denom_inverse();
  }
  if (node.name == "g") {
    if (node.indices.size() != 2 || node.semicolon_at >= 0)
      bad_atom(node, "expected g[row,col]");
    const int i = node.indices[0], j = node.indices[1];
    if (i < 1 || i > 2 || j < 1 || j > 2) bad_atom(node, "index out of range");
    return LocalizedElement{gl2_->gen_elem(i, j), 0};
  }
  bad_atom(node, "unknown atom in the GL_q(2) context");
}

}  // namespace qmsa
