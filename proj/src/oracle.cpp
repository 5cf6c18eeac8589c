#include "gotzmann/oracle.hpp"

#include <bit>
#include <random>
#include <sstream>

#include "gotzmann/classify3.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/macaulay.hpp"

namespace gotzmann {

constexpr std::size_t kMaxSweepVariables = 5;
constexpr std::size_t kMaxSweepBits = 24;

std::string format_violation(const Violation& v) {
  std::ostringstream out;
  out << "mask=";
  if (v.mask) {
    out << "0x" << std::hex << *v.mask << std::dec;
  } else {
    out << '-';
  }
  out << " size=" << v.size << " shadow=" << v.shadow << " bound=" << v.bound
      << " property=" << v.property;
  return out.str();
}

std::string format_report(const SweepReport& report) {
  std::ostringstream out;
  out << "enumerated=" << report.subsets_enumerated << " checked=" << report.instances_checked
      << " violations=" << report.violations.size() << '\n';
  if (!report.wall_notes.empty()) out << "# " << report.wall_notes << '\n';
  for (const auto& v : report.violations) out << format_violation(v) << '\n';
  return out.str();
}

std::vector<Mask> sample_masks(std::size_t bits, std::optional<std::size_t> size,
                               const SampleSpec& spec) {
  if (bits > 64) throw DomainError("sample_masks: more than 64 bits");
  if (size && *size > bits) throw DomainError("sample_masks: size exceeds universe");
  std::mt19937_64 rng(spec.seed);
  const Mask full = bits == 64 ? ~Mask{0} : (Mask{1} << bits) - 1;
  std::vector<Mask> out;
  out.reserve(spec.count);
  std::vector<std::size_t> pool(bits);
  for (std::size_t s = 0; s < spec.count; ++s) {
    if (!size) {
      out.push_back(rng() & full);
      continue;
    }
    // Partial Fisher-Yates; modulo reduction keeps draws reproducible across
    // standard libraries.
    for (std::size_t k = 0; k < bits; ++k) pool[k] = k;
    Mask m = 0;
    for (std::size_t k = 0; k < *size; ++k) {
      const std::size_t pick = k + static_cast<std::size_t>(rng() % (bits - k));
      std::swap(pool[k], pool[pick]);
      m |= Mask{1} << pool[k];
    }
    out.push_back(m);
  }
  return out;
}

namespace {

struct Swept {
  ShadowTable table;
  std::vector<Mask> masks;
  std::uint64_t enumerated = 0;
};

Swept sweep_space(const SweepConfig& cfg, const char* what) {
  if (cfg.n == 0 || cfg.n > kMaxSweepVariables) {
    throw DomainError(std::string(what) + ": sweeps are limited to 1 <= n <= 5");
  }
  if (cfg.budget == 0) throw DomainError(std::string(what) + ": budget must be positive");
  ShadowTable table(cfg.n, cfg.d);
  const std::size_t bits = table.bits();
  if (bits > kMaxSweepBits) {
    throw DomainError(std::string(what) + ": sweeps are limited to |M^d| <= 24");
  }
  SubsetSpace space = cfg.sample
                          ? SubsetSpace::listed(sample_masks(bits, cfg.size_filter, *cfg.sample))
                      : cfg.size_filter ? SubsetSpace::of_size(bits, *cfg.size_filter)
                                        : SubsetSpace::all(bits);
  require_within_budget(Natural(space.count()) * bits, cfg.budget, what);
  const auto size = cfg.size_filter;
  const bool gcd_one = cfg.gcd_one_only;
  auto masks = select(
      space,
      [&](Mask m) {
        if (size && static_cast<std::size_t>(std::popcount(m)) != *size) return false;
        return !gcd_one || table.gcd_is_one(m);
      },
      cfg.execution);
  return {std::move(table), std::move(masks), space.count()};
}

Violation make_violation(const ShadowTable& table, Mask m, std::string property) {
  const std::size_t size = static_cast<std::size_t>(std::popcount(m));
  return {std::move(property), m, size, table.shadow_size(m), table.bound(size),
          table.decode(m)};
}

Violation make_violation(const MonomialSet& V, std::string property) {
  const std::size_t shadow = expand(V).size();
  const auto bound = static_cast<std::size_t>(growth_bound(V.size(), V.n()));
  return {std::move(property), std::nullopt, V.size(), shadow, bound, V};
}

std::string notes_for(const SweepConfig& cfg) {
  std::ostringstream out;
  out << "n=" << cfg.n << " d=" << cfg.d;
  if (cfg.size_filter) out << " size=" << *cfg.size_filter;
  if (cfg.gcd_one_only) out << " gcd=1";
  if (cfg.sample) out << " sample=" << cfg.sample->count << " seed=" << cfg.sample->seed;
  else out << " exhaustive";
  return out.str();
}

}  // namespace

SweepReport sweep_macaulay(const SweepConfig& cfg) {
  Swept swept = sweep_space(cfg, "sweep_macaulay");
  const ShadowTable& table = swept.table;
  SweepReport report;
  report.subsets_enumerated = swept.enumerated;
  report.instances_checked = swept.masks.size();
  report.wall_notes = notes_for(cfg);
  const auto bad = select(
      SubsetSpace::listed(swept.masks),
      [&](Mask m) {
        return table.shadow_size(m) < table.bound(static_cast<std::size_t>(std::popcount(m)));
      },
      cfg.execution);
  for (Mask m : bad) report.violations.push_back(make_violation(table, m, "macaulay"));
  return report;
}

SweepReport sweep_up_operator(std::size_t n, unsigned d) {
  if (n == 0) throw DomainError("sweep_up_operator: need at least one variable");
  SweepReport report;
  report.wall_notes = "n=" + std::to_string(n) + " d=" + std::to_string(d);
  const std::uint64_t total = universe_size(n, d);
  for (std::uint64_t a = 0; a <= total; ++a) {
    const MonomialSet lex = lex_segment(n, d, a);
    ++report.subsets_enumerated;
    ++report.instances_checked;
    if (Natural(expand(lex).size()) != growth_bound(a, n)) {
      report.violations.push_back(make_violation(lex, "up-operator"));
    }
  }
  return report;
}

std::vector<std::string> lemma_failures(const MonomialSet& V, std::size_t persistence_steps) {
  std::vector<std::string> failed;
  if (!V.empty() && !is_gotzmann(divide_out(V).reduced).is_gotzmann) failed.push_back("gcd-reduction");
  if (!vdi_bounds_hold(V)) failed.push_back("vdi-bounds");
  if (!V.empty() && gcd_of(V).degree() == 0) {
    if (V.size() != universe_size(V.n(), V.degree()) && !splitting_index(V)) {
      failed.push_back("splitting-index");
    }
    if (determined_degree(V.n(), V.size()) != V.degree()) failed.push_back("degree-formula");
  }
  if (!persistence_check(V, persistence_steps).ok()) failed.push_back("persistence");
  return failed;
}

SweepReport sweep_lex_uniqueness(std::size_t n, std::size_t a_max, const ScanOptions& options) {
  if (n < 2) throw DomainError("sweep_lex_uniqueness: need n >= 2");
  SweepReport report;
  report.wall_notes = "n=" + std::to_string(n) + " a<=" + std::to_string(a_max);
  for (std::size_t a = 1; a <= a_max; ++a) {
    const UniquenessResult result = lex_uniqueness(n, a, options);
    report.subsets_enumerated += result.subsets_checked;
    report.instances_checked += result.subsets_checked;
    const bool lexnumber = is_lexnumber(a, n);
    if (result.holds() != lexnumber) {
      report.violations.push_back(make_violation(
          result.counterexample ? result.counterexample->representative
                                : lex_segment(n, result.degree, a),
          "lex-uniqueness"));
    }
    for (const auto& V : result.gotzmann_sets) {
      for (auto& label : lemma_failures(V)) report.violations.push_back(make_violation(V, label));
    }
    if (!lexnumber && n >= 3) {
      const MonomialSet built = construct_nonlex(n, a);
      const OrbitClass target = canonical_form(built);
      bool found = false;
      for (const auto& V : result.gotzmann_sets) {
        if (canonical_form(V) == target) {
          found = true;
          break;
        }
      }
      if (!found) report.violations.push_back(make_violation(built, "construction-not-found"));
    }
  }
  return report;
}

SweepReport sweep_lemmas(const SweepConfig& cfg) {
  Swept swept = sweep_space(cfg, "sweep_lemmas");
  const ShadowTable& table = swept.table;
  SweepReport report;
  report.subsets_enumerated = swept.enumerated;
  report.instances_checked = swept.masks.size();
  report.wall_notes = notes_for(cfg);
  const std::size_t full = table.bits();
  const auto suspicious = select(
      SubsetSpace::listed(swept.masks),
      [&](Mask m) {
        if (m == 0) return false;
        const MonomialSet V = table.decode(m);
        if (is_gotzmann(divide_out(V).reduced).is_gotzmann != table.is_gotzmann(m)) return true;
        if (!table.is_gotzmann(m)) return false;
        if (cfg.n == 2 && table.gcd_is_one(m) && V.size() != full) return true;
        return !lemma_failures(V).empty();
      },
      cfg.execution);
  for (Mask m : suspicious) {
    const MonomialSet V = table.decode(m);
    if (is_gotzmann(divide_out(V).reduced).is_gotzmann != table.is_gotzmann(m)) {
      report.violations.push_back(make_violation(table, m, "gcd-reduction"));
    }
    if (!table.is_gotzmann(m)) continue;
    if (cfg.n == 2 && table.gcd_is_one(m) && V.size() != full) {
      report.violations.push_back(make_violation(table, m, "two-variable-classification"));
    }
    for (auto& label : lemma_failures(V)) {
      report.violations.push_back(make_violation(table, m, label));
    }
  }
  return report;
}

SweepReport sweep_fixed_empty(const SweepConfig& cfg) {
  Swept swept = sweep_space(cfg, "sweep_fixed_empty");
  const ShadowTable& table = swept.table;
  SweepReport report;
  report.subsets_enumerated = swept.enumerated;
  report.instances_checked = swept.masks.size();
  report.wall_notes = notes_for(cfg) + (cfg.n == 3 ? " equivalence" : " necessity");
  const bool equivalence = cfg.n == 3;
  const auto bad = select(
      SubsetSpace::listed(swept.masks),
      [&](Mask m) {
        if (m == 0) return false;
        const bool direct = table.is_gotzmann(m);
        if (!equivalence && !direct) return false;
        return fixed_empty_necessary(table.decode(m)) != direct;
      },
      cfg.execution);
  for (Mask m : bad) {
    report.violations.push_back(
        make_violation(table, m, equivalence ? "fixed-empty-equivalence" : "fixed-empty-necessity"));
  }
  return report;
}

}  // namespace gotzmann
