#pragma once

// Macaulay binomial representations and the growth operators built on them.
//
// A positive integer h has a unique m-th binomial representation
//
//   h = C(h(m)+m, m) + C(h(m-1)+m-1, m-1) + ... + C(h(i)+i, i)
//
// with h(m) >= h(m-1) >= ... >= h(i) >= 0 and i >= 1. All arithmetic is exact.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gotzmann {

using Natural = boost::multiprecision::cpp_int;

// C(top, k); zero when top < k (including negative top).
Natural binomial(const Natural& top, std::size_t k);

struct BinomialTerm {
  Natural h;        // h(j)
  std::size_t j;    // lower binomial index

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

struct BinomialRep {
  std::size_t index = 0;            // m
  std::vector<BinomialTerm> terms;  // j = m, m-1, ..., i

  const Natural& first_h() const { return terms.front().h; }
  const Natural& last_h() const { return terms.back().h; }

  friend bool operator==(const BinomialRep&, const BinomialRep&) = default;
};

// Greedy construction. Throws DomainError for h = 0 or m = 0.
BinomialRep represent(const Natural& h, std::size_t m);

// Sum of C(h(j)+j, j) over the terms.
Natural evaluate(const BinomialRep& rep);

// h^<m>: each term C(h(j)+j, j) becomes C(h(j)+j+1, j).
Natural up(const Natural& h, std::size_t m);

// h_<<m>>: each term C(h(j)+j, j) becomes C(h(j)+j-1, j-1).
Natural down(const Natural& h, std::size_t m);

// h - C(alpha+m, m) where alpha is the largest alpha >= 0 with
// C(alpha+m, m) < h (alpha = 0 when h = 1).
Natural bar(const Natural& h, std::size_t m);

// Minimal shadow size of a set of `size` monomials in n variables:
// size^<n-1> for n >= 2, with 0 -> 0; every size for n = 1.
Natural growth_bound(const Natural& size, std::size_t n);

// True iff the (n-1)-th representation of a has all h(j) equal.
// Throws DomainError for a = 0 or n < 2.
bool is_lexnumber(const Natural& a, std::size_t n);

// All n-th lexnumbers in [1, limit], ascending.
std::vector<Natural> lexnumbers(std::size_t n, const Natural& limit);

}  // namespace gotzmann
