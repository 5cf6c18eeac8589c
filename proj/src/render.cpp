#include "gotzmann/render.hpp"

#include <sstream>

#include "gotzmann/errors.hpp"

namespace gotzmann {

namespace {

Monomial cell(unsigned d, unsigned k, unsigned j) { return Monomial{k - j, d - k, j}; }

void require_three(const MonomialSet& V) {
  if (V.n() != 3) throw DomainError("render: requires n = 3");
}

}  // namespace

std::string render_triangle(const MonomialSet& V) {
  require_three(V);
  const unsigned d = V.degree();
  std::string out;
  for (unsigned k = 0; k <= d; ++k) {
    out.append(d - k, ' ');
    for (unsigned j = 0; j <= k; ++j) {
      if (j) out += ' ';
      out += V.contains(cell(d, k, j)) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const MonomialSet& V) {
  require_three(V);
  const unsigned d = V.degree();
  constexpr int step = 20;
  constexpr int radius = 6;
  const int width = static_cast<int>(d + 1) * step + step;
  const int height = static_cast<int>(d + 1) * step + step;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (unsigned k = 0; k <= d; ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      // Text column of glyph j on line k is (d-k) + 2j; half a step per column.
      const int cx = step + static_cast<int>(d - k + 2 * j) * step / 2;
      const int cy = step + static_cast<int>(k) * step;
      const bool present = V.contains(cell(d, k, j));
      out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius
          << "\" fill=\"" << (present ? "black" : "white")
          << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gotzmann
