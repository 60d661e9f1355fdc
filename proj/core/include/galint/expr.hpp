#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "galint/error.hpp"
#include "galint/mpoly.hpp"

namespace galint {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Integer, ImaginaryUnit, Variable, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind;
  mpz_class value;    // Integer
  std::string name;   // Variable
  long exponent = 0;  // Pow
  std::vector<Expr> children;
  size_t offset = 0;  // byte offset of the node in the source text
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

inline constexpr long kMaxExponent = 64;

/// Grammar:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' '-'? integer)?
///   atom    := integer | 'i' | identifier | '(' sum ')'
/// Exponents are integer literals with |e| <= 64.
Expr parse_expr(std::string_view text);

// Identifiers in first-occurrence order.
std::vector<std::string> identifiers(const Expr& e);

// Lowering. Unknown identifiers raise InputError. to_poly accepts division
// by nonzero constants only; to_gauss requires a constant expression.
MPoly to_poly(const Expr& e, const std::vector<std::string>& vars);
MRatFn to_mratfn(const Expr& e, const std::vector<std::string>& vars);
RatFn to_ratfn(const Expr& e, const std::string& var);
GaussRat to_gauss(const Expr& e);

inline MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return to_poly(parse_expr(text), vars);
}
inline MRatFn parse_mratfn(std::string_view text, const std::vector<std::string>& vars) {
  return to_mratfn(parse_expr(text), vars);
}
inline RatFn parse_ratfn(std::string_view text, const std::string& var) {
  return to_ratfn(parse_expr(text), var);
}
inline GaussRat parse_gauss(std::string_view text) { return to_gauss(parse_expr(text)); }

}  // namespace galint
