#include "gotzmann/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gotzmann/errors.hpp"
#include "gotzmann/macaulay.hpp"

namespace gotzmann {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::vector<Exponent>(exps)) {}

Monomial Monomial::one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

Monomial Monomial::variable(std::size_t n, std::size_t var) {
  return one(n).times_variable(var);
}

bool Monomial::divides(const Monomial& other) const {
  if (width() != other.width()) return false;
  for (std::size_t k = 0; k < width(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (width() != other.width()) throw DomainError("monomial product: width mismatch");
  std::vector<Exponent> out(exps_);
  for (std::size_t k = 0; k < width(); ++k) out[k] += other.exps_[k];
  return Monomial(std::move(out));
}

Monomial Monomial::times_variable(std::size_t var) const {
  if (var < 1 || var > width()) throw DomainError("variable index out of range");
  Monomial out(*this);
  ++out.exps_[var - 1];
  ++out.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial quotient is not exact");
  std::vector<Exponent> out(exps_);
  for (std::size_t k = 0; k < width(); ++k) out[k] -= divisor.exps_[k];
  return Monomial(std::move(out));
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (u.width() != v.width()) throw DomainError("lex_compare: width mismatch");
  if (u.degree() != v.degree()) throw DomainError("lex_compare: degree mismatch");
  const auto a = u.exponents();
  const auto b = v.exponents();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool storage_less(const Monomial& u, const Monomial& v) {
  const auto a = u.exponents();
  const auto b = v.exponents();
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

MonomialSet::MonomialSet(std::size_t n, unsigned d, std::vector<Monomial> elems)
    : n_(n), d_(d), elems_(std::move(elems)) {
  for (const auto& m : elems_) {
    if (m.width() != n_) throw DomainError("monomial set: element has wrong width");
    if (m.degree() != d_) throw DomainError("monomial set: element has wrong degree");
  }
  std::sort(elems_.begin(), elems_.end(), storage_less);
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool MonomialSet::contains(const Monomial& m) const {
  if (m.width() != n_ || m.degree() != d_) return false;
  return std::binary_search(elems_.begin(), elems_.end(), m, storage_less);
}

std::uint64_t universe_size(std::size_t n, unsigned d) {
  if (n == 0) throw DomainError("universe: need at least one variable");
  const Natural size = binomial(Natural(d) + n - 1, n - 1);
  if (size > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError("universe: size does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(size);
}

namespace {

// Appends all exponent vectors with prefix `prefix` and the remaining
// coordinates summing to `remaining`, in descending lex order.
void fill_descending(std::size_t n, std::size_t first, unsigned remaining,
                     std::vector<Exponent>& prefix, std::vector<Monomial>& out) {
  const std::size_t k = prefix.size();
  if (k + 1 == n || k + 1 == first) {
    prefix.push_back(remaining);
    prefix.resize(n, 0);
    out.emplace_back(prefix);
    prefix.resize(k);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    prefix.push_back(e);
    fill_descending(n, first, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialSet universe(std::size_t n, unsigned d) { return universe_in_first(n, n, d); }

MonomialSet universe_in_first(std::size_t n, std::size_t first, unsigned t) {
  if (n == 0) throw DomainError("universe: need at least one variable");
  if (first < 1 || first > n) throw DomainError("universe: variable range out of bounds");
  std::vector<Monomial> elems;
  elems.reserve(universe_size(first, t));
  std::vector<Exponent> prefix;
  fill_descending(n, first, t, prefix, elems);
  return MonomialSet(n, t, std::move(elems));
}

MonomialSet expand(const MonomialSet& V, std::span<const std::size_t> vars) {
  if (vars.empty()) throw DomainError("expand: empty variable list");
  std::vector<Monomial> out;
  out.reserve(V.size() * vars.size());
  for (const auto& v : V) {
    for (std::size_t var : vars) out.push_back(v.times_variable(var));
  }
  return MonomialSet(V.n(), V.degree() + 1, std::move(out));
}

MonomialSet expand(const MonomialSet& V) {
  std::vector<std::size_t> vars(V.n());
  std::iota(vars.begin(), vars.end(), 1);
  return expand(V, vars);
}

MonomialSet multiply(const Monomial& u, const MonomialSet& V) {
  std::vector<Monomial> out;
  out.reserve(V.size());
  for (const auto& v : V) out.push_back(u * v);
  return MonomialSet(V.n(), V.degree() + u.degree(), std::move(out));
}

Monomial gcd_of(const MonomialSet& V) {
  if (V.empty()) throw DomainError("gcd_of: empty set");
  std::vector<Exponent> low(V.elements().front().exponents().begin(),
                            V.elements().front().exponents().end());
  for (const auto& v : V) {
    for (std::size_t k = 0; k < low.size(); ++k) low[k] = std::min(low[k], v[k]);
  }
  return Monomial(std::move(low));
}

Factored divide_out(const MonomialSet& V) {
  Monomial u = gcd_of(V);
  std::vector<Monomial> reduced;
  reduced.reserve(V.size());
  for (const auto& v : V) reduced.push_back(v / u);
  const unsigned d = V.degree() - u.degree();
  return {std::move(u), MonomialSet(V.n(), d, std::move(reduced))};
}

MonomialSet lex_segment(std::size_t n, unsigned d, std::uint64_t a) {
  if (a > universe_size(n, d)) throw DomainError("lex_segment: a exceeds |M^d|");
  std::vector<Monomial> all = universe(n, d).elements();
  all.resize(a);
  return MonomialSet(n, d, std::move(all));
}

bool is_strongly_stable(const MonomialSet& V) {
  for (const auto& u : V) {
    for (std::size_t j = 1; j < V.n(); ++j) {
      if (u[j] == 0) continue;
      std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
      --e[j];
      for (std::size_t i = 0; i < j; ++i) {
        ++e[i];
        if (!V.contains(Monomial(e))) return false;
        --e[i];
      }
    }
  }
  return true;
}

namespace {

void require_bijection(const Permutation& pi, std::size_t n) {
  if (pi.size() != n) throw DomainError("permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (std::size_t image : pi) {
    if (image >= n || seen[image]) throw DomainError("permutation is not a bijection");
    seen[image] = true;
  }
}

}  // namespace

Monomial apply_permutation(const Monomial& m, const Permutation& pi) {
  require_bijection(pi, m.width());
  std::vector<Exponent> out(m.width());
  for (std::size_t k = 0; k < m.width(); ++k) out[pi[k]] = m[k];
  return Monomial(std::move(out));
}

MonomialSet apply_permutation(const MonomialSet& V, const Permutation& pi) {
  require_bijection(pi, V.n());
  std::vector<Monomial> out;
  out.reserve(V.size());
  std::vector<Exponent> e(V.n());
  for (const auto& v : V) {
    for (std::size_t k = 0; k < V.n(); ++k) e[pi[k]] = v[k];
    out.emplace_back(e);
  }
  return MonomialSet(V.n(), V.degree(), std::move(out));
}

MonomialSet project_out(const MonomialSet& V, std::size_t var) {
  if (V.n() < 2) throw DomainError("project_out: need at least two variables");
  if (var < 1 || var > V.n()) throw DomainError("variable index out of range");
  const std::size_t k = var - 1;
  std::vector<Monomial> out;
  out.reserve(V.size());
  unsigned degree = V.degree();
  for (const auto& v : V) {
    std::vector<Exponent> e(v.exponents().begin(), v.exponents().end());
    if (out.empty()) {
      degree = V.degree() - e[k];
    } else if (V.degree() - e[k] != degree) {
      throw DomainError("project_out: elements differ in the dropped exponent");
    }
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
    out.emplace_back(std::move(e));
  }
  return MonomialSet(V.n() - 1, degree, std::move(out));
}

std::strong_ordering encoding_compare(const MonomialSet& a, const MonomialSet& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < common; ++k) {
    const auto c = lex_compare(a.elements()[k], b.elements()[k]);
    if (c != 0) return c > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

OrbitClass canonical_form(const MonomialSet& V) {
  if (V.n() > kMaxCanonicalVariables) {
    throw DomainError("canonical_form: refusing n > 8");
  }
  MonomialSet best = V;
  for (const auto& pi : all_permutations(V.n())) {
    MonomialSet image = apply_permutation(V, pi);
    if (encoding_compare(image, best) < 0) best = std::move(image);
  }
  return {std::move(best)};
}

bool is_stable_up_to_permutation(const MonomialSet& V) {
  if (V.n() > kMaxCanonicalVariables) {
    throw DomainError("is_stable_up_to_permutation: refusing n > 8");
  }
  for (const auto& pi : all_permutations(V.n())) {
    if (is_strongly_stable(apply_permutation(V, pi))) return true;
  }
  return false;
}

}  // namespace gotzmann
