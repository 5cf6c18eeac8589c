#pragma once

// Gotzmann sets: V in M^d with |MV| = |V|^<n-1>, i.e. the ideal generated by
// V has minimal Hilbert function growth in degree d+1.

#include <cstddef>
#include <optional>
#include <vector>

#include "gotzmann/kernels.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

struct GotzmannReport {
  std::size_t size = 0;
  std::optional<Monomial> gcd;  // absent for the empty set
  std::size_t reduced_size = 0;
  std::size_t shadow = 0;
  std::size_t bound = 0;
  bool is_gotzmann = true;
  bool is_strongly_stable = true;
  std::size_t persistence_checked = 0;
};

// The empty set is Gotzmann with shadow = bound = 0; for n = 1 every set is.
GotzmannReport is_gotzmann(const MonomialSet& V);

// The degree of any gcd-1 Gotzmann set of size a: the smallest d with
// a <= C(d+n-1, n-1). Throws DomainError for a = 0, or n = 1 with a > 1.
unsigned determined_degree(std::size_t n, const Natural& a);

// V_{0,i} holds the elements divisible by x_i * gcd(V); V_{d,i} the rest.
// A singleton goes entirely to V_{0,i}.
struct SplitPair {
  std::size_t var = 0;  // 1-based
  MonomialSet v0;
  MonomialSet vd;
};

// Throws DomainError on an empty V or a bad variable index.
SplitPair split(const MonomialSet& V, std::size_t var);

// Smallest var such that V_{d,var} is Gotzmann in the other n-1 variables,
// V_{0,var} is Gotzmann, |V_{d,var}| < |V|_<<n-1>> and
// x_var V_{d,var} is contained in (M \ x_var) V_{0,var}.
// Requires V Gotzmann, gcd(V) = 1 and V != M^d (DomainError otherwise);
// nullopt means no index qualifies.
std::optional<SplitPair> splitting_index(const MonomialSet& V);

// bar(|V|, n-1) <= |V_{d,i}| <= down(|V|, n-1) for every i. Vacuously true
// for the empty set and for n = 1.
bool vdi_bounds_hold(const MonomialSet& V);

struct PersistenceResult {
  std::size_t verified = 0;
  std::optional<unsigned> failing_degree;
  bool ok() const { return !failing_degree; }
};

// Starting from W = MV, checks |MW| = growth_bound(|W|) for `steps`
// successive degrees and stops at the first failure.
PersistenceResult persistence_check(const MonomialSet& V, std::size_t steps);

struct NonlexConstruction {
  MonomialSet set;
  std::size_t descent = 0;   // k: smallest index with a(k+1) > a(k)
  Monomial u_prime;          // u_{k+1} / x_{k+2}
  // u' x1^(d-d0) and u' x_{k+1}^(d-d0) are absent while
  // u' x1 x_{k+1}^(d-d0-1) is present, so V is not strongly stable.
  Monomial missing_first;
  Monomial missing_descent;
  Monomial present_mixed;
};

// Gotzmann set of size a with gcd 1 that is not strongly stable under any
// permutation. Requires n >= 3 and a not an n-th lexnumber.
NonlexConstruction build_nonlex(std::size_t n, const Natural& a);
MonomialSet construct_nonlex(std::size_t n, const Natural& a);

// All Gotzmann subsets of M^d (optionally of one size, optionally gcd 1), in
// ascending mask order. Refuses scans over the work budget.
std::vector<MonomialSet> gotzmann_subsets(std::size_t n, unsigned d,
                                          std::optional<std::size_t> size,
                                          bool gcd_one, const ScanOptions& options = {});

struct UniquenessResult {
  unsigned degree = 0;
  std::uint64_t subsets_checked = 0;
  std::vector<MonomialSet> gotzmann_sets;  // every gcd-1 Gotzmann set found
  // Canonically smallest class not equivalent to the lexsegment.
  std::optional<OrbitClass> counterexample;
  bool holds() const { return !counterexample; }
};

// Exhaustive check that every gcd-1 Gotzmann set of size a is a permuted
// lexsegment.
UniquenessResult lex_uniqueness(std::size_t n, const Natural& a,
                                const ScanOptions& options = {});
bool lex_uniqueness_holds(std::size_t n, const Natural& a,
                          const ScanOptions& options = {});

}  // namespace gotzmann
