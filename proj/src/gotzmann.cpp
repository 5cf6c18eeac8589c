#include "gotzmann/gotzmann.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gotzmann/errors.hpp"

namespace gotzmann {

namespace {

std::size_t to_size(const Natural& x) { return static_cast<std::size_t>(x); }

}  // namespace

GotzmannReport is_gotzmann(const MonomialSet& V) {
  GotzmannReport report;
  report.size = V.size();
  report.is_strongly_stable = is_strongly_stable(V);
  if (V.empty()) return report;
  const Factored f = divide_out(V);
  report.gcd = f.gcd;
  report.reduced_size = f.reduced.size();
  report.shadow = expand(V).size();
  report.bound = to_size(growth_bound(V.size(), V.n()));
  report.is_gotzmann = report.shadow == report.bound;
  return report;
}

unsigned determined_degree(std::size_t n, const Natural& a) {
  if (n == 0) throw DomainError("determined_degree: need at least one variable");
  if (a <= 0) throw DomainError("determined_degree: a must be positive");
  if (a == 1) return 0;
  if (n == 1) {
    throw DomainError("determined_degree: in one variable only a = 1 is possible");
  }
  unsigned d = 0;
  while (binomial(Natural(d) + n - 1, n - 1) < a) ++d;
  return d;
}

SplitPair split(const MonomialSet& V, std::size_t var) {
  if (V.empty()) throw DomainError("split: empty set");
  if (var < 1 || var > V.n()) throw DomainError("split: variable index out of range");
  if (V.size() == 1) return {var, V, MonomialSet(V.n(), V.degree())};
  const Monomial pivot = gcd_of(V).times_variable(var);
  std::vector<Monomial> v0;
  std::vector<Monomial> vd;
  for (const auto& v : V) (pivot.divides(v) ? v0 : vd).push_back(v);
  return {var, MonomialSet(V.n(), V.degree(), std::move(v0)),
          MonomialSet(V.n(), V.degree(), std::move(vd))};
}

namespace {

bool qualifies_for_splitting(const MonomialSet& V, const SplitPair& sp) {
  const std::size_t n = V.n();
  if (!is_gotzmann(project_out(sp.vd, sp.var)).is_gotzmann) return false;
  if (!is_gotzmann(sp.v0).is_gotzmann) return false;
  if (Natural(sp.vd.size()) >= down(V.size(), n - 1)) return false;
  std::vector<std::size_t> others;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k != sp.var) others.push_back(k);
  }
  const MonomialSet reach = expand(sp.v0, others);
  return std::all_of(sp.vd.begin(), sp.vd.end(), [&](const Monomial& v) {
    return reach.contains(v.times_variable(sp.var));
  });
}

}  // namespace

std::optional<SplitPair> splitting_index(const MonomialSet& V) {
  if (V.empty()) throw DomainError("splitting_index: empty set");
  if (V.size() == universe_size(V.n(), V.degree())) {
    throw DomainError("splitting_index: requires V != M^d");
  }
  if (gcd_of(V).degree() != 0) throw DomainError("splitting_index: requires gcd(V) = 1");
  if (!is_gotzmann(V).is_gotzmann) throw DomainError("splitting_index: requires a Gotzmann set");
  for (std::size_t var = 1; var <= V.n(); ++var) {
    SplitPair sp = split(V, var);
    if (qualifies_for_splitting(V, sp)) return sp;
  }
  return std::nullopt;
}

bool vdi_bounds_hold(const MonomialSet& V) {
  if (V.empty() || V.n() < 2) return true;
  const Natural low = bar(V.size(), V.n() - 1);
  const Natural high = down(V.size(), V.n() - 1);
  for (std::size_t var = 1; var <= V.n(); ++var) {
    const Natural vd = split(V, var).vd.size();
    if (vd < low || vd > high) return false;
  }
  return true;
}

PersistenceResult persistence_check(const MonomialSet& V, std::size_t steps) {
  PersistenceResult result;
  MonomialSet current = expand(V);
  for (std::size_t s = 0; s < steps; ++s) {
    MonomialSet next = expand(current);
    if (Natural(next.size()) != growth_bound(current.size(), V.n())) {
      result.failing_degree = next.degree();
      return result;
    }
    ++result.verified;
    current = std::move(next);
  }
  return result;
}

NonlexConstruction build_nonlex(std::size_t n, const Natural& a) {
  if (n < 3) throw DomainError("construct_nonlex: need n >= 3");
  if (a <= 0) throw DomainError("construct_nonlex: a must be positive");
  if (is_lexnumber(a, n)) {
    throw DomainError("construct_nonlex: a = " + a.str() + " is a lexnumber for n = " +
                      std::to_string(n));
  }
  const BinomialRep rep = represent(a, n - 1);
  // h[j] = a(j) for j = p .. n-1.
  std::map<std::size_t, unsigned> h;
  for (const auto& term : rep.terms) h[term.j] = static_cast<unsigned>(term.h);
  const std::size_t p = rep.terms.back().j;

  std::size_t k = p;
  while (k + 1 <= n - 1 && !(h[k + 1] > h[k])) ++k;
  if (k + 1 > n - 1) throw std::logic_error("construct_nonlex: no descent in representation");

  // u_j as exponent vectors (0-based coordinates).
  std::map<std::size_t, std::vector<int>> u;
  u[n - 1] = std::vector<int>(n, 0);
  u[n - 1][n - 1] = 1;
  for (std::size_t j = n - 2; j >= p; --j) {
    std::vector<int> next = u[j + 1];
    const int diff = static_cast<int>(h[j + 1]) - static_cast<int>(h[j]);
    // x_{j+1} sits at coordinate j, x_{j+2} at j+1.
    if (j != k) {
      next[j] += 1 + diff;
    } else {
      next[0] += 1;
      next[j] += diff;
    }
    next[j + 1] -= 1;
    if (std::any_of(next.begin(), next.end(), [](int e) { return e < 0; })) {
      throw std::logic_error("construct_nonlex: negative exponent in multiplier");
    }
    u[j] = std::move(next);
  }

  auto as_monomial = [](const std::vector<int>& e) {
    return Monomial(std::vector<Exponent>(e.begin(), e.end()));
  };
  const unsigned d = h[n - 1] + 1;
  std::vector<Monomial> elems;
  for (std::size_t j = p; j <= n - 1; ++j) {
    const Monomial uj = as_monomial(u[j]);
    for (const auto& m : universe_in_first(n, j + 1, h[j])) elems.push_back(uj * m);
  }
  MonomialSet set(n, d, std::move(elems));
  if (Natural(set.size()) != a) {
    throw std::logic_error("construct_nonlex: blocks overlap");
  }

  const Monomial u_prime = as_monomial(u[k + 1]) / Monomial::variable(n, k + 2);
  const unsigned span = d - u_prime.degree();
  std::vector<Exponent> first(u_prime.exponents().begin(), u_prime.exponents().end());
  std::vector<Exponent> descent = first;
  std::vector<Exponent> mixed = first;
  first[0] += span;
  descent[k] += span;
  mixed[0] += 1;
  mixed[k] += span - 1;
  return {std::move(set), k, u_prime, Monomial(std::move(first)), Monomial(std::move(descent)),
          Monomial(std::move(mixed))};
}

MonomialSet construct_nonlex(std::size_t n, const Natural& a) { return build_nonlex(n, a).set; }

std::vector<MonomialSet> gotzmann_subsets(std::size_t n, unsigned d,
                                          std::optional<std::size_t> size, bool gcd_one,
                                          const ScanOptions& options) {
  const ShadowTable table(n, d);
  const std::size_t bits = table.bits();
  const Natural count = size ? binomial(bits, *size) : Natural(1) << bits;
  require_within_budget(count * bits, options.budget, "Gotzmann subset scan");
  const SubsetSpace space = size ? SubsetSpace::of_size(bits, *size) : SubsetSpace::all(bits);
  const auto masks = select(
      space,
      [&](Mask m) { return (!gcd_one || table.gcd_is_one(m)) && table.is_gotzmann(m); },
      options.execution);
  std::vector<MonomialSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(table.decode(m));
  return out;
}

UniquenessResult lex_uniqueness(std::size_t n, const Natural& a, const ScanOptions& options) {
  if (n < 2) throw DomainError("lex_uniqueness: need n >= 2");
  UniquenessResult result;
  result.degree = determined_degree(n, a);
  const std::size_t size = to_size(a);
  const std::size_t bits = universe_size(n, result.degree);
  result.subsets_checked = static_cast<std::uint64_t>(binomial(bits, size));
  result.gotzmann_sets = gotzmann_subsets(n, result.degree, size, true, options);
  const OrbitClass lex = canonical_form(lex_segment(n, result.degree, size));
  for (const auto& V : result.gotzmann_sets) {
    OrbitClass c = canonical_form(V);
    if (c == lex) continue;
    if (!result.counterexample || c < *result.counterexample) result.counterexample = std::move(c);
  }
  return result;
}

bool lex_uniqueness_holds(std::size_t n, const Natural& a, const ScanOptions& options) {
  return lex_uniqueness(n, a, options).holds();
}

}  // namespace gotzmann
