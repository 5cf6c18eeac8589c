#pragma once

// Fixed empty elements and the classification of Gotzmann sets in three
// variables.
//
// v is under u for i when both have the same degree and v_j <= u_j for every
// j != i. A monomial u of degree d is a fixed empty element of V for i when u
// and everything under u for i lie outside V.

#include <cstddef>
#include <optional>
#include <vector>

#include "gotzmann/kernels.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

struct FixedEmptyWitness {
  Monomial monomial;
  std::size_t direction = 0;     // 1-based variable index
  std::size_t checked_cover = 0; // size of the under-set confirmed absent
};

// Throws DomainError on width or degree mismatch.
bool is_under(const Monomial& v, const Monomial& u, std::size_t var);

// Every degree-deg(u) monomial under u for var, including u itself.
MonomialSet under_set(const Monomial& u, std::size_t var);

bool is_fixed_empty(const MonomialSet& V, const Monomial& u, std::size_t var);

// Witness for the smallest direction in which u is fixed empty.
std::optional<FixedEmptyWitness> fixed_empty_witness(const MonomialSet& V, const Monomial& u);

// Every missing monomial of M^d is fixed empty for some i, and
// |V| > C(d - deg(gcd V) - 1 + n - 1, n - 1). Throws DomainError on empty V.
bool fixed_empty_necessary(const MonomialSet& V);

// The fixed-empty characterization, which decides the Gotzmann property when
// n = 3. Throws DomainError for n != 3.
bool is_gotzmann_via_fixed_empty(const MonomialSet& V);

struct ClassCount {
  OrbitClass orbit;
  std::size_t members = 0;  // sets in M^d found in this orbit
};

// All Gotzmann V in M^d (n = 3) with |V| = a and gcd 1, one entry per orbit,
// sorted by canonical encoding.
std::vector<ClassCount> enumerate_classes(unsigned d, std::size_t a,
                                          const ScanOptions& options = {});

// The orbit member used for drawing: the canonical form with the variable
// order reversed, so that missing monomials gather toward the x1^d corner.
MonomialSet display_form(const MonomialSet& V);

struct MissingComponent {
  std::vector<Monomial> members;      // descending lex
  std::optional<std::size_t> corner;  // variable k when x_k^d is a member
};

struct MissingShape {
  std::vector<MissingComponent> components;
  std::size_t missing = 0;
  bool within_degree = true;  // missing <= d
  bool all_anchored = true;   // every component contains a corner
};

// Missing monomials of M^d grouped by single-unit exchange adjacency.
// Throws DomainError for n != 3.
MissingShape missing_shape_report(const MonomialSet& V);

}  // namespace gotzmann
