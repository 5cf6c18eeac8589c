#include <bit>
#include <limits>

#include "gotzmann/errors.hpp"
#include "gotzmann/kernels.hpp"

namespace gotzmann {

void require_within_budget(const Natural& work, std::uint64_t budget,
                           const std::string& what) {
  if (work > budget) {
    throw BudgetExceeded(what + ": estimated " + work.str() +
                         " elementary steps exceed the work budget of " +
                         std::to_string(budget));
  }
}

ShadowTable::ShadowTable(std::size_t n, unsigned d) : universe_(gotzmann::universe(n, d)) {
  if (universe_size(n, d + 1) > kMaxBits) {
    throw DomainError("shadow table: |M^(d+1)| exceeds 64 for n=" + std::to_string(n) +
                      " d=" + std::to_string(d));
  }
  const MonomialSet next = gotzmann::universe(n, d + 1);
  const auto& upper = next.elements();
  auto index_of = [&](const Monomial& m) {
    // Upper universe is sorted lex-descending; find by linear scan (tiny).
    for (std::size_t k = 0; k < upper.size(); ++k) {
      if (upper[k] == m) return k;
    }
    throw std::logic_error("shadow table: product missing from M^(d+1)");
  };
  shadow_.reserve(bits());
  for (const auto& v : universe_) {
    Mask s = 0;
    for (std::size_t var = 1; var <= n; ++var) s |= Mask{1} << index_of(v.times_variable(var));
    shadow_.push_back(s);
  }
  zero_in_.assign(n, 0);
  for (std::size_t k = 0; k < bits(); ++k) {
    for (std::size_t var = 0; var < n; ++var) {
      if (universe_.elements()[k][var] == 0) zero_in_[var] |= Mask{1} << k;
    }
  }
  bounds_.reserve(bits() + 1);
  for (std::size_t size = 0; size <= bits(); ++size) {
    bounds_.push_back(static_cast<std::size_t>(growth_bound(size, n)));
  }
}

Mask ShadowTable::full_mask() const {
  return bits() == 64 ? std::numeric_limits<Mask>::max() : (Mask{1} << bits()) - 1;
}

Mask ShadowTable::shadow(Mask v) const {
  Mask s = 0;
  while (v != 0) {
    s |= shadow_[static_cast<std::size_t>(std::countr_zero(v))];
    v &= v - 1;
  }
  return s;
}

std::size_t ShadowTable::shadow_size(Mask v) const {
  return static_cast<std::size_t>(std::popcount(shadow(v)));
}

bool ShadowTable::gcd_is_one(Mask v) const {
  for (Mask z : zero_in_) {
    if ((v & z) == 0) return false;
  }
  return true;
}

bool ShadowTable::is_gotzmann(Mask v) const {
  return shadow_size(v) == bound(static_cast<std::size_t>(std::popcount(v)));
}

Mask ShadowTable::encode(const MonomialSet& V) const {
  if (V.n() != n() || V.degree() != degree()) {
    throw DomainError("shadow table: set has the wrong shape");
  }
  Mask out = 0;
  std::size_t k = 0;
  // Both sequences are lex-descending.
  for (const auto& v : V) {
    while (!(universe_.elements()[k] == v)) ++k;
    out |= Mask{1} << k;
  }
  return out;
}

MonomialSet ShadowTable::decode(Mask v) const {
  std::vector<Monomial> elems;
  while (v != 0) {
    elems.push_back(universe_.elements()[static_cast<std::size_t>(std::countr_zero(v))]);
    v &= v - 1;
  }
  return MonomialSet(n(), degree(), std::move(elems));
}

SubsetSpace SubsetSpace::all(std::size_t bits) {
  if (bits >= 64) throw DomainError("subset space: universe too large for exhaustive scan");
  return SubsetSpace(Kind::all, bits, 0, std::uint64_t{1} << bits);
}

SubsetSpace SubsetSpace::of_size(std::size_t bits, std::size_t k) {
  if (bits > 64) throw DomainError("subset space: universe wider than 64");
  const Natural count = binomial(bits, k);
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError("subset space: too many subsets");
  }
  return SubsetSpace(Kind::of_size, bits, k, static_cast<std::uint64_t>(count));
}

SubsetSpace SubsetSpace::listed(std::vector<Mask> masks) {
  SubsetSpace space(Kind::listed, 64, 0, masks.size());
  space.listed_ = std::move(masks);
  return space;
}

Mask SubsetSpace::at(std::uint64_t rank) const {
  switch (kind_) {
    case Kind::all:
      return rank;
    case Kind::listed:
      return listed_[rank];
    case Kind::of_size: {
      // Combinatorial number system: rank = sum C(c_i, i), c_k > ... > c_1,
      // and increasing rank is increasing mask value.
      Mask out = 0;
      std::uint64_t rest = rank;
      std::size_t top = bits_;
      for (std::size_t i = k_; i >= 1; --i) {
        std::size_t c = i - 1;
        while (c + 1 < top && binomial(c + 1, i) <= rest) ++c;
        rest -= static_cast<std::uint64_t>(binomial(c, i));
        out |= Mask{1} << c;
        top = c;
      }
      return out;
    }
  }
  return 0;
}

Mask SubsetSpace::next(Mask current, std::uint64_t rank) const {
  switch (kind_) {
    case Kind::all:
      return current + 1;
    case Kind::listed:
      return listed_[rank + 1];
    case Kind::of_size: {
      // Gosper's hack.
      const Mask low = current & (~current + 1);
      const Mask ripple = current + low;
      return (((ripple ^ current) >> 2) / low) | ripple;
    }
  }
  return 0;
}

namespace serial {

std::vector<Mask> select(const SubsetSpace& space, const MaskPredicate& keep) {
  std::vector<Mask> out;
  const std::uint64_t count = space.count();
  if (count == 0) return out;
  Mask m = space.at(0);
  for (std::uint64_t rank = 0;; ++rank) {
    if (keep(m)) out.push_back(m);
    if (rank + 1 == count) break;
    m = space.next(m, rank);
  }
  return out;
}

}  // namespace serial

}  // namespace gotzmann
