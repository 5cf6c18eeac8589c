#include "gotzmann/macaulay.hpp"

#include <string>

#include "gotzmann/errors.hpp"

namespace gotzmann {

Natural binomial(const Natural& top, std::size_t k) {
  if (top < k) return 0;
  Natural result = 1;
  // result = C(top - k + i, i) after step i; each division is exact.
  for (std::size_t i = 1; i <= k; ++i) {
    result *= top - k + i;
    result /= i;
  }
  return result;
}

namespace {

void require_positive(const Natural& h, std::size_t m, const char* op) {
  if (h <= 0) throw DomainError(std::string(op) + ": h must be positive");
  if (m == 0) throw DomainError(std::string(op) + ": index must be positive");
}

}  // namespace

BinomialRep represent(const Natural& h, std::size_t m) {
  require_positive(h, m, "represent");
  BinomialRep rep;
  rep.index = m;
  Natural remainder = h;
  // C(t+j, j) >= t+1, so t < remainder bounds the first search.
  Natural cap = h - 1;
  for (std::size_t j = m; j >= 1 && remainder > 0; --j) {
    // Largest t in [0, cap] with C(t+j, j) <= remainder; t = 0 always fits.
    Natural lo = 0;
    Natural hi = cap;
    while (lo < hi) {
      Natural mid = (lo + hi + 1) / 2;
      if (binomial(mid + j, j) <= remainder) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    remainder -= binomial(lo + j, j);
    rep.terms.push_back({lo, j});
    cap = lo;
  }
  if (remainder != 0) {
    throw std::logic_error("represent: greedy expansion left a remainder");
  }
  return rep;
}

Natural evaluate(const BinomialRep& rep) {
  Natural sum = 0;
  for (const auto& term : rep.terms) sum += binomial(term.h + term.j, term.j);
  return sum;
}

Natural up(const Natural& h, std::size_t m) {
  require_positive(h, m, "up");
  Natural sum = 0;
  for (const auto& term : represent(h, m).terms) {
    sum += binomial(term.h + term.j + 1, term.j);
  }
  return sum;
}

Natural down(const Natural& h, std::size_t m) {
  require_positive(h, m, "down");
  Natural sum = 0;
  for (const auto& term : represent(h, m).terms) {
    sum += binomial(term.h + term.j - 1, term.j - 1);
  }
  return sum;
}

Natural bar(const Natural& h, std::size_t m) {
  require_positive(h, m, "bar");
  if (h == 1) return 0;
  const BinomialRep rep = represent(h, m);
  const BinomialTerm& top = rep.terms.front();
  if (rep.terms.size() == 1) return binomial(top.h + m - 1, m - 1);
  return h - binomial(top.h + m, m);
}

Natural growth_bound(const Natural& size, std::size_t n) {
  if (n == 0) throw DomainError("growth_bound: need at least one variable");
  if (size == 0 || n == 1) return size;
  return up(size, n - 1);
}

bool is_lexnumber(const Natural& a, std::size_t n) {
  if (n < 2) throw DomainError("is_lexnumber: need n >= 2");
  if (a <= 0) throw DomainError("is_lexnumber: a must be positive");
  const BinomialRep rep = represent(a, n - 1);
  return rep.first_h() == rep.last_h();
}

std::vector<Natural> lexnumbers(std::size_t n, const Natural& limit) {
  if (n < 2) throw DomainError("lexnumbers: need n >= 2");
  std::vector<Natural> out;
  for (Natural a = 1; a <= limit; ++a) {
    if (is_lexnumber(a, n)) out.push_back(a);
  }
  return out;
}

}  // namespace gotzmann
