#pragma once

// Brute-force sweeps over subsets of M^d that check the growth bound, the
// operators and the structural lemmas against first principles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gotzmann/kernels.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

struct SampleSpec {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

struct SweepConfig {
  std::size_t n = 3;
  unsigned d = 0;
  std::optional<std::size_t> size_filter;
  bool gcd_one_only = false;
  std::uint64_t budget = kDefaultBudget;
  std::optional<SampleSpec> sample;
  Execution execution = Execution::parallel;
};

struct Violation {
  std::string property;
  std::optional<Mask> mask;  // bit index over descending-lex M^d
  std::size_t size = 0;
  std::size_t shadow = 0;
  std::size_t bound = 0;
  MonomialSet set;
};

struct SweepReport {
  std::uint64_t subsets_enumerated = 0;
  std::uint64_t instances_checked = 0;  // those passing the size/gcd filters
  std::vector<Violation> violations;
  std::string wall_notes;
  bool ok() const { return violations.empty(); }
};

// "mask=0x.. size=.. shadow=.. bound=.. property=.."
std::string format_violation(const Violation& v);
// Summary line, notes, then one line per violation.
std::string format_report(const SweepReport& report);

// Seeded mt19937_64 draws: uniform subsets, or uniform k-subsets when `size`
// is set.
std::vector<Mask> sample_masks(std::size_t bits, std::optional<std::size_t> size,
                               const SampleSpec& spec);

// |MV| >= |V|^<n-1> on every swept V.
SweepReport sweep_macaulay(const SweepConfig& cfg);

// up(a, n-1) = |M Lex(n, d, a)| for 0 <= a <= |M^d|.
SweepReport sweep_up_operator(std::size_t n, unsigned d);

// lex_uniqueness(n, a) agrees with is_lexnumber(a, n) for 1 <= a <= a_max,
// every Gotzmann set met along the way passes lemma_failures, and each
// non-lexnumber's construction shows up among the counterexamples.
SweepReport sweep_lex_uniqueness(std::size_t n, std::size_t a_max, const ScanOptions& options = {});

// Structural checks on a Gotzmann set: gcd reduction, V_{d,i} bounds,
// splitting index, degree formula and persistence. Returns failed labels.
std::vector<std::string> lemma_failures(const MonomialSet& V, std::size_t persistence_steps = 4);

// gcd-reduction invariance on every swept V and lemma_failures on every
// Gotzmann one; for n = 2 also that gcd-1 Gotzmann sets are empty or M^d.
SweepReport sweep_lemmas(const SweepConfig& cfg);

// For n = 3, the fixed-empty test agrees with the direct test on every
// nonempty swept V; for other n, only that Gotzmann sets pass it.
SweepReport sweep_fixed_empty(const SweepConfig& cfg);

}  // namespace gotzmann
