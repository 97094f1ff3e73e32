#pragma once

// Parser for class expressions in the special classes, e.g.
// "s2*s1-2*s3":
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor | '/' uint)*
//   factor := atom ('^' uint)?
//   atom   := 's' digit+ | uint | '(' expr ')'
//
// Whitespace between tokens is ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lgint/symclasses.hpp"

namespace lgint {

class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& what, std::size_t position);
    /// Zero-based offset into the input where parsing failed.
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Generators s_i must satisfy 1 <= i <= n.
ClassExpr parse_class_expr(std::string_view text, std::size_t n);

}  // namespace lgint
