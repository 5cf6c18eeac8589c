#pragma once

// Monomials in n variables, equal-degree monomial sets, and the symmetric
// group action on them.
//
// Variable indices in this API are 1-based (x1 .. xn) to match the usual
// notation; raw exponent access through operator[] is 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gotzmann {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps);

  static Monomial one(std::size_t n);
  // x_var in n variables.
  static Monomial variable(std::size_t n, std::size_t var);

  std::size_t width() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent operator[](std::size_t k) const { return exps_[k]; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial times_variable(std::size_t var) const;
  // Exact quotient; throws DomainError if `divisor` does not divide *this.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

// Lexicographic order: u < v iff the leftmost nonzero entry of v - u is
// positive. Throws DomainError on mismatched width or degree.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

// Ordering used for set storage: lex-greatest first.
struct LexGreater {
  bool operator()(const Monomial& u, const Monomial& v) const {
    return lex_compare(u, v) > 0;
  }
};

// A duplicate-free set of degree-d monomials in n variables, stored in
// descending lex order (x1^d first when present).
class MonomialSet {
 public:
  MonomialSet(std::size_t n, unsigned d) : n_(n), d_(d) {}
  // Duplicates are merged; throws DomainError on a width or degree mismatch.
  MonomialSet(std::size_t n, unsigned d, std::vector<Monomial> elems);

  std::size_t n() const { return n_; }
  unsigned degree() const { return d_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Monomial& m) const;

  const std::vector<Monomial>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::size_t n_;
  unsigned d_;
  std::vector<Monomial> elems_;
};

// Image of position k (0-based) under the permutation, also 0-based.
using Permutation = std::vector<std::size_t>;

// C(d+n-1, n-1) = |M^d|.
std::uint64_t universe_size(std::size_t n, unsigned d);

// M^d in descending lex order; universe(n, 0) = {1}.
MonomialSet universe(std::size_t n, unsigned d);

// Degree-t monomials in x1 .. x_first, embedded in n variables.
MonomialSet universe_in_first(std::size_t n, std::size_t first, unsigned t);

// {x_i v : v in V, i in vars}. `vars` must be nonempty.
MonomialSet expand(const MonomialSet& V, std::span<const std::size_t> vars);
MonomialSet expand(const MonomialSet& V);

// uV.
MonomialSet multiply(const Monomial& u, const MonomialSet& V);

// Componentwise minimum; throws DomainError on the empty set.
Monomial gcd_of(const MonomialSet& V);

struct Factored {
  Monomial gcd;
  MonomialSet reduced;
};

// V = gcd * reduced with gcd(reduced) = 1.
Factored divide_out(const MonomialSet& V);

// The a lex-greatest monomials of M^d. Throws DomainError if a > |M^d|.
MonomialSet lex_segment(std::size_t n, unsigned d, std::uint64_t a);

bool is_strongly_stable(const MonomialSet& V);

// pi(x1^a1 ... xn^an) = x_pi(1)^a1 ... x_pi(n)^an.
Monomial apply_permutation(const Monomial& m, const Permutation& pi);
MonomialSet apply_permutation(const MonomialSet& V, const Permutation& pi);

// Drops variable `var`: the image of V under pi_var, as a set in n-1
// variables. Every element must carry the same exponent of x_var (so the
// images share a degree); throws DomainError otherwise or when n < 2.
MonomialSet project_out(const MonomialSet& V, std::size_t var);

// Orbit representative under permutation of the variables.
struct OrbitClass {
  MonomialSet representative;
  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

// Encoding order on sets of equal (n, d): compare element lists in storage
// order, where a lex-greater element counts as smaller, then shorter first.
// A lexsegment is the minimum among sets of its size.
std::strong_ordering encoding_compare(const MonomialSet& a, const MonomialSet& b);

inline bool operator<(const OrbitClass& a, const OrbitClass& b) {
  return encoding_compare(a.representative, b.representative) < 0;
}

constexpr std::size_t kMaxCanonicalVariables = 8;

// Smallest encoding over all n! images. Refuses n > 8.
OrbitClass canonical_form(const MonomialSet& V);

// True iff some permutation of V is strongly stable (n!-scan).
bool is_stable_up_to_permutation(const MonomialSet& V);

// All permutations of 0..n-1 in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace gotzmann
