#ifndef SIMULACRA_EXPRESSION_HPP
#define SIMULACRA_EXPRESSION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simulacra/cone.hpp"

namespace simulacra {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  /// Zero-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Cone expressions:
//
//   expr   := term ("+" term)*
//   term   := [count "*"] factor
//   factor := "L" int | "R" int | "H" int "(" ("R"|"C"|"H"|"O") ")"
//
// "R n" is the n-dimensional orthant. Whitespace is insignificant.

/// Raw factors in source order; nothing is canonicalized yet.
std::vector<Factor> parse_factors(std::string_view text);

/// parse_factors followed by Cone::canonicalize.
Cone parse_cone(std::string_view text);

/// Canonical text: factors in canonical order, repeats as "k*X", and all
/// L^1 factors gathered into a trailing "R k". The trivial cone is "R0".
std::string format_cone(const Cone& c);

/// Single factor, e.g. "L5", "H3(C)".
std::string format_factor(const Factor& f);

}  // namespace simulacra

#endif  // SIMULACRA_EXPRESSION_HPP
