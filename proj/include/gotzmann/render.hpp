#pragma once

#include <string>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

// Triangle diagram of a set in three variables. Line k (top first) has d-k
// leading spaces and k+1 glyphs separated by spaces; glyph j on line k is
// x1^(k-j) x2^(d-k) x3^j, '#' when present and '.' when missing. So x2^d is
// on top, x1^d lower left and x3^d lower right. Throws DomainError if n != 3.
std::string render_triangle(const MonomialSet& V);

// The same layout as an SVG image: filled dots for members, open circles for
// missing monomials.
std::string render_svg(const MonomialSet& V);

}  // namespace gotzmann
