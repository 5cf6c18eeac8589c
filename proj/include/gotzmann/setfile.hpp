#pragma once

// Plain-text monomial set files:
//
//   # optional comment lines
//   n=3 d=2
//   2 0 0
//   1 1 0
//
// One exponent row per monomial; rows are written in descending lex order.

#include <cstddef>
#include <string>
#include <string_view>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

std::string serialize_set(const MonomialSet& V);

// Throws ParseError (with 1-based line and column) on a bad header, wrong
// arity, wrong degree sum, negative exponent or duplicate row.
MonomialSet parse_set(std::string_view text);

// Human syntax: "x1^2*x3", "1" for the unit monomial.
std::string format_monomial(const Monomial& m);
// Inverse of format_monomial for monomials in n variables; throws DomainError.
Monomial parse_monomial(std::string_view text, std::size_t n);

}  // namespace gotzmann
