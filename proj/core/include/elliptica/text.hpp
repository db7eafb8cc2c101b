#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "elliptica/quotient.hpp"

namespace elliptica {

// Terms joined by + / -; a term is an optional rational coefficient followed
// by *-separated powers name^e. Whitespace is ignored. Positions in errors
// are reported relative to `line` and `column_offset`.
Polynomial parse_polynomial(const ContextPtr& ctx, std::string_view text, int line = 1,
                            int column_offset = 0);
std::string format_polynomial(const Polynomial& p);

// Two directives, one per line:
//   vars: x1:2 x2:2
//   rels: x1^2 - x2^2 ; x1*x2
// Blank lines and lines starting with # are skipped.
Presentation parse_presentation(std::string_view text);
Presentation parse_presentation_file(const std::filesystem::path& path);
std::string format_presentation(const Presentation& p);

// "2,2:4,4" -> (2,2;4,4).
DegreeType parse_degree_type(std::string_view text);
std::string format_degree_type(const DegreeType& dt);  // "(2,2;4,4)"
std::string degree_type_literal(const DegreeType& dt);  // "2,2:4,4"

}  // namespace elliptica
