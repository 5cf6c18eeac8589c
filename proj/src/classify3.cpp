#include "gotzmann/classify3.hpp"

#include <algorithm>
#include <map>

#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"

namespace gotzmann {

namespace {

void require_same_shape(const Monomial& v, const Monomial& u) {
  if (v.width() != u.width()) throw DomainError("is_under: width mismatch");
  if (v.degree() != u.degree()) throw DomainError("is_under: degree mismatch");
}

void require_var(std::size_t var, std::size_t n) {
  if (var < 1 || var > n) throw DomainError("variable index out of range");
}

}  // namespace

bool is_under(const Monomial& v, const Monomial& u, std::size_t var) {
  require_same_shape(v, u);
  require_var(var, u.width());
  for (std::size_t j = 0; j < u.width(); ++j) {
    if (j + 1 != var && v[j] > u[j]) return false;
  }
  return true;
}

MonomialSet under_set(const Monomial& u, std::size_t var) {
  require_var(var, u.width());
  const std::size_t n = u.width();
  const std::size_t free = var - 1;
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  // Odometer over 0 <= e_j <= u_j for j != var; the free coordinate takes the
  // remaining degree, which is at least u_var.
  while (true) {
    unsigned others = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != free) others += e[j];
    }
    e[free] = u.degree() - others;
    out.emplace_back(e);
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (j == free) continue;
      if (e[j] < u[j]) {
        ++e[j];
        break;
      }
      e[j] = 0;
    }
    if (j == n) break;
  }
  return MonomialSet(n, u.degree(), std::move(out));
}

bool is_fixed_empty(const MonomialSet& V, const Monomial& u, std::size_t var) {
  if (u.width() != V.n() || u.degree() != V.degree()) {
    throw DomainError("is_fixed_empty: monomial does not match the set's degree");
  }
  if (V.contains(u)) return false;
  const MonomialSet cover = under_set(u, var);
  return std::none_of(cover.begin(), cover.end(),
                      [&](const Monomial& v) { return V.contains(v); });
}

std::optional<FixedEmptyWitness> fixed_empty_witness(const MonomialSet& V, const Monomial& u) {
  for (std::size_t var = 1; var <= V.n(); ++var) {
    if (is_fixed_empty(V, u, var)) return FixedEmptyWitness{u, var, under_set(u, var).size()};
  }
  return std::nullopt;
}

bool fixed_empty_necessary(const MonomialSet& V) {
  if (V.empty()) throw DomainError("fixed_empty_necessary: empty set");
  const std::size_t n = V.n();
  for (const auto& m : universe(n, V.degree())) {
    if (V.contains(m)) continue;
    if (!fixed_empty_witness(V, m)) return false;
  }
  const long top = static_cast<long>(V.degree()) - static_cast<long>(gcd_of(V).degree()) - 1 +
                   static_cast<long>(n) - 1;
  return Natural(V.size()) > binomial(Natural(top), n - 1);
}

bool is_gotzmann_via_fixed_empty(const MonomialSet& V) {
  if (V.n() != 3) throw DomainError("is_gotzmann_via_fixed_empty: requires n = 3");
  return fixed_empty_necessary(V);
}

std::vector<ClassCount> enumerate_classes(unsigned d, std::size_t a, const ScanOptions& options) {
  std::map<OrbitClass, std::size_t> seen;
  for (const auto& V : gotzmann_subsets(3, d, a, true, options)) ++seen[canonical_form(V)];
  std::vector<ClassCount> out;
  out.reserve(seen.size());
  for (auto& [orbit, members] : seen) out.push_back({orbit, members});
  return out;
}

namespace {

bool exchange_adjacent(const Monomial& a, const Monomial& b) {
  unsigned distance = 0;
  for (std::size_t k = 0; k < a.width(); ++k) {
    distance += a[k] > b[k] ? a[k] - b[k] : b[k] - a[k];
  }
  return distance == 2;
}

std::optional<std::size_t> corner_of(const Monomial& m) {
  for (std::size_t k = 0; k < m.width(); ++k) {
    if (m[k] == m.degree()) return k + 1;
  }
  return std::nullopt;
}

}  // namespace

MonomialSet display_form(const MonomialSet& V) {
  Permutation reverse(V.n());
  for (std::size_t k = 0; k < V.n(); ++k) reverse[k] = V.n() - 1 - k;
  return apply_permutation(canonical_form(V).representative, reverse);
}

MissingShape missing_shape_report(const MonomialSet& V) {
  if (V.n() != 3) throw DomainError("missing_shape_report: requires n = 3");
  std::vector<Monomial> missing;
  for (const auto& m : universe(3, V.degree())) {
    if (!V.contains(m)) missing.push_back(m);
  }
  MissingShape shape;
  shape.missing = missing.size();
  shape.within_degree = missing.size() <= V.degree();

  std::vector<bool> visited(missing.size(), false);
  for (std::size_t start = 0; start < missing.size(); ++start) {
    if (visited[start]) continue;
    MissingComponent component;
    std::vector<std::size_t> stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      component.members.push_back(missing[at]);
      for (std::size_t k = 0; k < missing.size(); ++k) {
        if (!visited[k] && exchange_adjacent(missing[at], missing[k])) {
          visited[k] = true;
          stack.push_back(k);
        }
      }
    }
    component.members = MonomialSet(3, V.degree(), std::move(component.members)).elements();
    for (const auto& m : component.members) {
      if (auto c = corner_of(m)) {
        component.corner = c;
        break;
      }
    }
    shape.all_anchored = shape.all_anchored && component.corner.has_value();
    shape.components.push_back(std::move(component));
  }
  return shape;
}

}  // namespace gotzmann
