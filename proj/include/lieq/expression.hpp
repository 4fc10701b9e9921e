#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieq/scalar.hpp"
#include "lieq/uea.hpp"

namespace lieq {

// Surface syntax shared by the CLI, algebra files and the Casimir catalog:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' unary) | ('/' integer))*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer | 'i' | symbol | generator | '(' expr ')'
//
// `*` is the noncommutative product and is never implicit. Exponents are
// integers; negative ones are only accepted on invertible scalar atoms such
// as `eps^-2`. Identifiers are [A-Za-z][A-Za-z0-9_]* and case-sensitive.

/// Parses an element over `algebra`. The result is not normalized.
Element parse_expression(const LieAlgebra& algebra, std::string_view text);

/// Parses a generator-free scalar over the given symbols.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& symbols);

/// Prints a scalar in the same grammar (alias of Scalar::to_string).
inline std::string print_scalar(const Scalar& s) { return s.to_string(); }

/// Prints an element; parse_expression(print_expression(e)) == e.
inline std::string print_expression(const LieAlgebra& algebra, const Element& e) { return to_string(algebra, e); }

}  // namespace lieq
