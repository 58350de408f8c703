#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmsa/localized.hpp"
#include "qmsa/tensor.hpp"

namespace qmsa {

// ---------------------------------------------------------------------------
// Canonical printing. Words print in lexicographic order; a coefficient with
// several q-terms is parenthesized and its overall sign is pulled out front,
// e.g. "a[1,1]*a[2,2] - (q^-1 - q)*a[1,2]*a[2,1]".
// ---------------------------------------------------------------------------

std::string print(const Scalar& s);
/// Formats a coefficient for use in front of a product: sets `negative` and
/// returns "" (coefficient 1), "q^-2*", "(q^-1 - q)*", "3*", ...
std::string coefficient_prefix(const Scalar& c, bool& negative);
std::string print(const Element& x, const std::string& family = "a");
std::string print(const TensorElement& t, const std::string& left_family,
                  const std::string& right_family);
/// inv_symbol is "Dinv" or "Detinv" depending on the ring.
std::string print(const LocalizedElement& x, const std::string& family,
                  const std::string& inv_symbol);

// ---------------------------------------------------------------------------
// Parsing. Grammar:
//   expr    := ['-'] tterm (('+'|'-') tterm)*
//   tterm   := product ['(x)' product]
//   product := factor ('*' factor)*
//   factor  := rational | 'q' ['^' int] | atom ['^' uint] | '(' expr ')'
//   atom    := name '[' int (',' int)* [';' int (',' int)*] ']'
//            | 'Dinv' | 'Detinv'
// Whitespace insensitive; "(x)" is the tensor separator.
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ExprNode {
  enum class Kind { kSum, kProduct, kTensor, kPower, kRational, kQPower, kAtom };

  Kind kind = Kind::kRational;
  std::vector<ExprNode> children;
  std::vector<int> signs;          // kSum: +1/-1 per child
  Rational value = 0;              // kRational
  int exponent = 1;                // kQPower / kPower
  std::string name;                // kAtom
  std::vector<int> indices;        // kAtom
  int semicolon_at = -1;           // kAtom: index count before ';', -1 if none
};

ExprNode parse(const std::string& text);

// ---------------------------------------------------------------------------
// Lowering. Atom meanings depend on the active algebra; suites provide a
// resolver binding names (a, g, D, u, nu, Dinv, Detinv) to values.
// ---------------------------------------------------------------------------

class AtomResolver {
 public:
  virtual ~AtomResolver() = default;
  virtual const ManinAlgebra& algebra() const = 0;
  /// The ring used when localized atoms occur; may be null when every atom
  /// of the context is polynomial.
  virtual const LocalizedRing* ring() const { return nullptr; }
  virtual LocalizedElement atom(const ExprNode& node) const = 0;
};

/// Lowers an expression without tensor separators.
LocalizedElement lower(const ExprNode& ast, const AtomResolver& resolver);
/// As above but requires a denominator-free result.
Element lower_element(const ExprNode& ast, const AtomResolver& resolver);
/// Lowers a sum of "left (x) right" terms; plain terms are treated as
/// left (x) 1.
TensorElement lower_tensor(const ExprNode& ast, const AtomResolver& left,
                           const AtomResolver& right);

}  // namespace qmsa
