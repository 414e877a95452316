#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mero/polynomial.hpp"

namespace mero {

/// Numerator/denominator pair produced by Expr::as_rational. The two are not
/// reduced to lowest terms; only the division nodes are cleared.
struct RationalForm {
  Polynomial numerator;
  Polynomial denominator;
};

/// Immutable complex expression in the single variable z.
///
/// Grammar (whitespace-insensitive):
///
///     expr   := term (("+"|"-") term)*
///     term   := factor (("*"|"/") factor)*
///     factor := ("-")? power
///     power  := atom ("^" ["-"] integer)?
///     atom   := number | "pi" | "e" | "i" | "z" | ident "(" expr ")" | "(" expr ")"
///     ident  := "exp" | "sin" | "cos"
///
/// "^" binds tighter than unary minus, so -z^2 is -(z^2). Implicit
/// multiplication is a syntax error.
class Expr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Term;

  /// Throws ParseError carrying the byte offset and the expected-token set.
  static Expr parse(std::string_view source);

  static Expr variable();
  static Expr literal(cd value);
  /// Sum of signed terms; an empty list is the literal 0.
  static Expr sum(const std::vector<Term>& terms);

  /// Throws EvalError (pole_hit when a divisor has modulus < 1e-300,
  /// non_finite when the result overflows).
  cd operator()(cd z) const;

  /// Numerator/denominator polynomials when the tree uses only literals,
  /// constants, z, + - * / and integer powers; nullopt otherwise.
  std::optional<RationalForm> as_rational() const;

  /// Top-level additive decomposition: e == sum(additive_terms()).
  std::vector<Term> additive_terms() const;

  /// Fully parenthesized text that parses back to an equivalent tree.
  std::string to_string() const;

  /// Two Exprs share the same tree (cheap identity test).
  bool same_tree(const Expr& other) const noexcept { return root_ == other.root_; }

 private:
  explicit Expr(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

struct Expr::Term {
  double sign;  // +1 or -1
  Expr expr;
};

/// Maximum |n| accepted in z^n.
inline constexpr int kMaxExponent = 1024;
/// Maximum parenthesis / call nesting depth accepted by the parser.
inline constexpr int kMaxNesting = 256;
/// Divisors below this modulus are reported as pole hits.
inline constexpr double kPoleHitThreshold = 1e-300;

}  // namespace mero
