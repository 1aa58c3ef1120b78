#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quasihom/poly.hpp"

namespace quasihom {

/// Syntax or semantic error in an expression, with the 0-based character
/// offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using ParamMap = std::map<std::string, Rational, std::less<>>;

/// Parses and expands a polynomial expression in x, h, z.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' nat)?
///   base   := int | ident | '(' expr ')'
///
/// Identifiers are the coordinates or keys of `params`, which are substituted
/// exactly. Division is only by nonzero constants, so "3/2*z" and "D/2" both
/// work. Whitespace is ignored.
Poly parse_expr(std::string_view text, const ParamMap& params = {});

}  // namespace quasihom
