#include "qmsa/textio.hpp"

#include <cctype>
#include <sstream>

namespace qmsa {

namespace {

std::string print_word(const Word& w, const std::string& family) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (GenId g : w) {
    if (!first) os << "*";
    first = false;
    os << family << "[" << int(g.row) << "," << int(g.col) << "]";
  }
  return os.str();
}

// Splits a coefficient into (sign, magnitude text, needs_star). The sign of
// a multi-term coefficient is the sign of its lowest-exponent term.
struct CoeffText {
  bool negative = false;
  std::string text;  // empty means coefficient 1
};

CoeffText coeff_text(const Scalar& c) {
  CoeffText out;
  const auto& terms = c.terms();
  if (terms.size() == 1) {
    const auto& [e, r] = *terms.begin();
    out.negative = r < 0;
    const Rational mag = out.negative ? Rational(-r) : r;
    Scalar m = Scalar::monomial(e, mag);
    if (!m.is_one()) out.text = m.str();
    return out;
  }
  out.negative = terms.begin()->second < 0;
  const Scalar inner = out.negative ? -c : c;
  out.text = "(" + inner.str() + ")";
  return out;
}

void append_term(std::ostringstream& os, bool first, const CoeffText& ct,
                 const std::string& body) {
  if (first) {
    if (ct.negative) os << "-";
  } else {
    os << (ct.negative ? " - " : " + ");
  }
  if (ct.text.empty()) {
    os << body;
  } else if (body == "1") {
    os << ct.text;
  } else {
    os << ct.text << "*" << body;
  }
}

}  // namespace

std::string print(const Scalar& s) { return s.str(); }

std::string coefficient_prefix(const Scalar& c, bool& negative) {
  const CoeffText ct = coeff_text(c);
  negative = ct.negative;
  return ct.text.empty() ? std::string{} : ct.text + "*";
}

std::string print(const Element& x, const std::string& family) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    append_term(os, first, coeff_text(c), print_word(w, family));
    first = false;
  }
  return os.str();
}

std::string print(const TensorElement& t, const std::string& left_family,
                  const std::string& right_family) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [wp, c] : t.terms()) {
    const std::string body = print_word(wp.first, left_family) + " (x) " +
                             print_word(wp.second, right_family);
    append_term(os, first, coeff_text(c), body);
    first = false;
  }
  return os.str();
}

std::string print(const LocalizedElement& x, const std::string& family,
                  const std::string& inv_symbol) {
  if (x.is_zero()) return "0";
  if (x.denom_pow == 0) return print(x.num, family);
  std::ostringstream os;
  if (x.num.term_count() == 1) {
    os << print(x.num, family);
  } else {
    os << "(" << print(x.num, family) << ")";
  }
  os << "*" << inv_symbol;
  if (x.denom_pow != 1) os << "^" << x.denom_pow;
  return os.str();
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  kEnd, kNumber, kName, kPlus, kMinus, kStar, kSlash, kCaret,
  kLBracket, kRBracket, kComma, kSemicolon, kLParen, kRParen, kTensor,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { next(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

 private:
  void next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_ = Token{Tok::kEnd, "", i_};
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '(') {
      if (i_ + 2 < s_.size() && s_[i_ + 1] == 'x' && s_[i_ + 2] == ')') {
        tok_ = {Tok::kTensor, "(x)", i_};
        i_ += 3;
        return;
      }
      tok_ = {Tok::kLParen, "(", i_};
      ++i_;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Tok::kNumber, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Tok::kName, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    const auto simple = [&](Tok k) {
      tok_ = {k, std::string(1, c), i_};
      ++i_;
    };
    switch (c) {
      case '+': simple(Tok::kPlus); return;
      case '-': simple(Tok::kMinus); return;
      case '*': simple(Tok::kStar); return;
      case '/': simple(Tok::kSlash); return;
      case '^': simple(Tok::kCaret); return;
      case '[': simple(Tok::kLBracket); return;
      case ']': simple(Tok::kRBracket); return;
      case ',': simple(Tok::kComma); return;
      case ';': simple(Tok::kSemicolon); return;
      case ')': simple(Tok::kRParen); return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  ExprNode parse_input() {
    ExprNode e = parse_expr();
    if (lex_.peek().kind != Tok::kEnd)
      throw ParseError("trailing input", lex_.peek().pos);
    return e;
  }

 private:
  int parse_int() {
    bool neg = false;
    if (lex_.peek().kind == Tok::kMinus) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Tok::kNumber)
      throw ParseError("expected an integer", lex_.peek().pos);
    const Token t = lex_.take();
    int v = 0;
    for (char ch : t.text) {
      if (v > 100000) throw ParseError("integer too large", t.pos);
      v = v * 10 + (ch - '0');
    }
    return neg ? -v : v;
  }

  ExprNode parse_expr() {
    ExprNode sum;
    sum.kind = ExprNode::Kind::kSum;
    int sign = 1;
    if (lex_.peek().kind == Tok::kMinus) {
      lex_.take();
      sign = -1;
    }
    sum.children.push_back(parse_tensor_term());
    sum.signs.push_back(sign);
    while (lex_.peek().kind == Tok::kPlus || lex_.peek().kind == Tok::kMinus) {
      sign = lex_.take().kind == Tok::kPlus ? 1 : -1;
      sum.children.push_back(parse_tensor_term());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return sum.children[0];
    return sum;
  }

  ExprNode parse_tensor_term() {
    ExprNode left = parse_product();
    if (lex_.peek().kind != Tok::kTensor) return left;
    lex_.take();
    ExprNode node;
    node.kind = ExprNode::Kind::kTensor;
    node.children.push_back(std::move(left));
    node.children.push_back(parse_product());
    return node;
  }

  ExprNode parse_product() {
    ExprNode prod;
    prod.kind = ExprNode::Kind::kProduct;
    prod.children.push_back(parse_factor());
    while (lex_.peek().kind == Tok::kStar) {
      lex_.take();
      prod.children.push_back(parse_factor());
    }
    if (prod.children.size() == 1) return prod.children[0];
    return prod;
  }

  ExprNode parse_factor() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::kNumber: {
        lex_.take();
        ExprNode n;
        n.kind = ExprNode::Kind::kRational;
        Integer num(t.text);
        Integer den = 1;
        if (lex_.peek().kind == Tok::kSlash) {
          lex_.take();
          if (lex_.peek().kind != Tok::kNumber)
            throw ParseError("expected a denominator", lex_.peek().pos);
          den = Integer(lex_.take().text);
          if (den == 0) throw ParseError("zero denominator", t.pos);
        }
        n.value = Rational(num, den);
        return n;
      }
      case Tok::kLParen: {
        lex_.take();
        ExprNode inner = parse_expr();
        if (lex_.peek().kind != Tok::kRParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return maybe_power(std::move(inner));
      }
      case Tok::kName: {
        lex_.take();
        if (t.text == "q") {
          ExprNode n;
          n.kind = ExprNode::Kind::kQPower;
          n.exponent = 1;
          if (lex_.peek().kind == Tok::kCaret) {
            lex_.take();
            n.exponent = parse_int();
          }
          return n;
        }
        ExprNode n;
        n.kind = ExprNode::Kind::kAtom;
        n.name = t.text;
        if (lex_.peek().kind == Tok::kLBracket) {
          lex_.take();
          n.indices.push_back(parse_int());
          while (lex_.peek().kind == Tok::kComma || lex_.peek().kind == Tok::kSemicolon) {
            if (lex_.take().kind == Tok::kSemicolon) {
              if (n.semicolon_at >= 0)
                throw ParseError("only one ';' allowed in an index list", t.pos);
              n.semicolon_at = static_cast<int>(n.indices.size());
            }
            n.indices.push_back(parse_int());
          }
          if (lex_.peek().kind != Tok::kRBracket)
            throw ParseError("expected ']'", lex_.peek().pos);
          lex_.take();
        }
        return maybe_power(std::move(n));
      }
      default:
        throw ParseError("expected a factor", t.pos);
    }
  }

  ExprNode maybe_power(ExprNode base) {
    if (lex_.peek().kind != Tok::kCaret) return base;
    const std::size_t pos = lex_.peek().pos;
    lex_.take();
    const int e = parse_int();
    if (e < 0) throw ParseError("negative powers are only allowed on q", pos);
    ExprNode n;
    n.kind = ExprNode::Kind::kPower;
    n.exponent = e;
    n.children.push_back(std::move(base));
    return n;
  }

  Lexer lex_;
};

}  // namespace

ExprNode parse(const std::string& text) { return Parser(text).parse_input(); }

// ---------------------------------------------------------------------------
// Lowering
// ---------------------------------------------------------------------------

namespace {

LocalizedElement lower_scalar_mul(const LocalizedRing* ring, const ManinAlgebra& alg,
                                  const LocalizedElement& a, const LocalizedElement& b) {
  // Denominator-free products stay in the plain algebra; the ring (and its
  // twistability requirements) only enters once a Dinv/Detinv is involved.
  if (a.denom_pow == 0 && b.denom_pow == 0)
    return LocalizedElement{alg.multiply(a.num, b.num), 0};
  if (!ring)
    throw std::invalid_argument("localized atom used in a polynomial-only context");
  return ring->mul(a, b);
}

LocalizedElement unit_value() { return LocalizedElement{Element::unit(), 0}; }

LocalizedElement lower_node(const ExprNode& n, const AtomResolver& res) {
  const ManinAlgebra& alg = res.algebra();
  switch (n.kind) {
    case ExprNode::Kind::kRational:
      return LocalizedElement{Scalar::of(n.value) * Element::unit(), 0};
    case ExprNode::Kind::kQPower:
      return LocalizedElement{Scalar::q_power(n.exponent) * Element::unit(), 0};
    case ExprNode::Kind::kAtom:
      return res.atom(n);
    case ExprNode::Kind::kPower: {
      LocalizedElement base = lower_node(n.children[0], res);
      LocalizedElement acc = unit_value();
      for (int k = 0; k < n.exponent; ++k)
        acc = lower_scalar_mul(res.ring(), alg, acc, base);
      return acc;
    }
    case ExprNode::Kind::kProduct: {
      LocalizedElement acc = unit_value();
      for (const ExprNode& c : n.children)
        acc = lower_scalar_mul(res.ring(), alg, acc, lower_node(c, res));
      return acc;
    }
    case ExprNode::Kind::kSum: {
      LocalizedElement acc{Element::zero(), 0};
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        LocalizedElement v = lower_node(n.children[i], res);
        if (n.signs[i] < 0) v.num = -v.num;
        if (res.ring()) {
          acc = res.ring()->add(acc, v);
        } else {
          if (v.denom_pow != 0 || acc.denom_pow != 0)
            throw std::invalid_argument("localized atom used in a polynomial-only context");
          acc.num += v.num;
        }
      }
      return acc;
    }
    case ExprNode::Kind::kTensor:
      throw std::invalid_argument("tensor separator in a non-tensor context");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LocalizedElement lower(const ExprNode& ast, const AtomResolver& resolver) {
  return lower_node(ast, resolver);
}

Element lower_element(const ExprNode& ast, const AtomResolver& resolver) {
  LocalizedElement v = lower(ast, resolver);
  if (v.denom_pow != 0)
    throw std::invalid_argument("expression is not denominator-free");
  return v.num;
}

TensorElement lower_tensor(const ExprNode& ast, const AtomResolver& left,
                           const AtomResolver& right) {
  TensorAlgebra ta(left.algebra(), right.algebra());
  const auto lower_tterm = [&](const ExprNode& n, int sign) {
    Element l, r;
    if (n.kind == ExprNode::Kind::kTensor) {
      l = lower_element(n.children[0], left);
      r = lower_element(n.children[1], right);
    } else {
      l = lower_element(n, left);
      r = Element::unit();
    }
    if (sign < 0) l = -l;
    return ta.tensor(l, r);
  };
  if (ast.kind == ExprNode::Kind::kSum) {
    TensorElement out;
    for (std::size_t i = 0; i < ast.children.size(); ++i)
      out += lower_tterm(ast.children[i], ast.signs[i]);
    return out;
  }
  return lower_tterm(ast, 1);
}

}  // namespace qmsa
