#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omega/dio/expr.hpp"

namespace omega::dio {

/// A family of equations D(params, unknowns) = 0. Unknowns range over the
/// positive integers.
struct Family {
  std::vector<std::string> params;
  std::vector<std::string> unknowns;
  ExprPtr expr;

  /// True when some exponent mentions a variable.
  bool exponential() const;

  bool has_param(std::string_view name) const;
  bool has_unknown(std::string_view name) const;

  /// Family file text: params line, unknowns line, expression line.
  std::string to_text() const;
};

/// Parses a bare expression. Exponents must be nonnegative constants or
/// built from variables and nonnegative literals with + * ^ only.
ExprPtr parse_expression(std::string_view text);

/// Parses either the family file format
///
///   params: k, N
///   unknowns: x1, x2
///   <expression, possibly over several lines>
///
/// or a bare expression, in which case identifiers of the form x<digits>
/// are unknowns (ordered by index) and every other identifier is a
/// parameter (in order of first appearance). Lines starting with '#' are
/// comments.
Family parse_family(std::string_view text);

Family load_family(const std::string& path);

}  // namespace omega::dio
