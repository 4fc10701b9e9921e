#pragma once

#include <string>
#include <string_view>

#include "lieq/contraction.hpp"
#include "lieq/report.hpp"

namespace lieq {

// Algebra file (JSON):
//   { "name": "...", "symbols": ["eps", ...], "generators": ["H", ...],
//     "brackets": [ { "a": "KGx", "b": "Px", "result": [ { "gen": "M", "coeff": "i" } ] } ] }
// Omitted pairs bracket to zero; `coeff` uses the scalar grammar.

LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& algebra);

/// Parses file contents; JSON syntax errors become ParseError with line/column.
LieAlgebra parse_algebra(std::string_view text);
/// Deterministic export (2-space indent, trailing newline).
std::string export_algebra(const LieAlgebra& algebra);

/// { "Px": 1, "M": 2, ... }
RescalingMap parse_rescaling(std::string_view text);
/// { "KPx": "KGx", ... }
Renaming parse_renaming(std::string_view text);

std::string read_file(const std::string& path);
/// A catalog name, or else a path to an algebra file.
LieAlgebra load_algebra(const std::string& name_or_path);

}  // namespace lieq
