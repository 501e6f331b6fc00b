#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "omega/bigint.hpp"

namespace omega::dio {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Literals are nonnegative; negation is a node.
struct Expr {
  enum class Kind { Literal, Variable, Neg, Add, Sub, Mul, Pow };

  Kind kind;
  BigInt value;       // Literal
  std::string name;   // Variable
  ExprPtr lhs;        // Neg operand, or left operand
  ExprPtr rhs;
  std::size_t pos = 0;  // source offset, for diagnostics
};

ExprPtr literal(BigInt value, std::size_t pos = 0);
ExprPtr variable(std::string name, std::size_t pos = 0);
ExprPtr neg(ExprPtr operand, std::size_t pos = 0);
ExprPtr add(ExprPtr a, ExprPtr b, std::size_t pos = 0);
ExprPtr sub(ExprPtr a, ExprPtr b, std::size_t pos = 0);
ExprPtr mul(ExprPtr a, ExprPtr b, std::size_t pos = 0);
ExprPtr pow(ExprPtr base, ExprPtr exponent, std::size_t pos = 0);

/// Same tree shape, operators, literals and names. Positions are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

/// Canonical text: binary + and - spaced, * and ^ tight, minimal
/// parentheses such that parsing the text gives back the same tree.
std::string to_string(const Expr& e);

/// Identifiers in order of first appearance (left to right).
std::vector<std::string> identifiers(const Expr& e);

bool is_constant(const Expr& e);

/// Replaces every variable named `from` with `to`.
ExprPtr rename(const ExprPtr& e, const std::string& from, const std::string& to);

}  // namespace omega::dio
