#pragma once

// Bitmask kernels for exhaustive scans over subsets of M^d.
//
// Subsets are masks over the descending-lex enumeration of M^d (bit k is the
// k-th element, bit 0 = x1^d). Each kernel has a serial reference
// implementation and an OpenMP implementation that partitions the subset
// space into rank ranges; both return identical, ascending mask lists.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gotzmann/macaulay.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

using Mask = std::uint64_t;

enum class Execution { serial, parallel };

constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;
  Execution execution = Execution::parallel;
};

// Throws BudgetExceeded when `work` elementary steps exceed `budget`.
void require_within_budget(const Natural& work, std::uint64_t budget,
                           const std::string& what);

// Dense index of M^d and M^{d+1} with per-monomial shadow masks.
class ShadowTable {
 public:
  static constexpr std::size_t kMaxBits = 64;

  // Throws DomainError if |M^{d+1}| > 64.
  ShadowTable(std::size_t n, unsigned d);

  std::size_t n() const { return universe_.n(); }
  unsigned degree() const { return universe_.degree(); }
  std::size_t bits() const { return universe_.size(); }
  const MonomialSet& universe() const { return universe_; }
  Mask full_mask() const;

  Mask shadow(Mask v) const;
  std::size_t shadow_size(Mask v) const;
  // Minimal shadow size for `size` elements (growth_bound).
  std::size_t bound(std::size_t size) const { return bounds_[size]; }
  bool gcd_is_one(Mask v) const;
  bool is_gotzmann(Mask v) const;

  Mask encode(const MonomialSet& V) const;
  MonomialSet decode(Mask v) const;

 private:
  MonomialSet universe_;
  std::vector<Mask> shadow_;              // per element of M^d, bits over M^{d+1}
  std::vector<Mask> zero_in_;             // per variable: elements not involving it
  std::vector<std::size_t> bounds_;       // 0 .. bits()
};

// A totally ordered family of subsets of a `bits`-element universe.
class SubsetSpace {
 public:
  // All 2^bits masks in increasing value.
  static SubsetSpace all(std::size_t bits);
  // The C(bits, k) masks with k set bits, in increasing value.
  static SubsetSpace of_size(std::size_t bits, std::size_t k);
  // An explicit list, in the given order.
  static SubsetSpace listed(std::vector<Mask> masks);

  std::uint64_t count() const { return count_; }
  Mask at(std::uint64_t rank) const;
  // Successor of the mask at `rank`; only valid for rank + 1 < count().
  Mask next(Mask current, std::uint64_t rank) const;

 private:
  enum class Kind { all, of_size, listed };
  SubsetSpace(Kind kind, std::size_t bits, std::size_t k, std::uint64_t count)
      : kind_(kind), bits_(bits), k_(k), count_(count) {}

  Kind kind_;
  std::size_t bits_;
  std::size_t k_;
  std::uint64_t count_;
  std::vector<Mask> listed_;
};

// Must be safe to call concurrently.
using MaskPredicate = std::function<bool(Mask)>;

namespace serial {
std::vector<Mask> select(const SubsetSpace& space, const MaskPredicate& keep);
}  // namespace serial

namespace parallel {
std::vector<Mask> select(const SubsetSpace& space, const MaskPredicate& keep);
}  // namespace parallel

inline std::vector<Mask> select(const SubsetSpace& space, const MaskPredicate& keep,
                                Execution execution) {
  return execution == Execution::serial ? serial::select(space, keep)
                                        : parallel::select(space, keep);
}

}  // namespace gotzmann
