// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails. Time limits are wall-clock on the whole criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gotzmann/classify3.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/oracle.hpp"

using namespace gotzmann;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gotzmann");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::vector<unsigned> to_unsigned(const std::vector<Natural>& v) {
  std::vector<unsigned> out;
  for (const auto& x : v) out.push_back(static_cast<unsigned>(x));
  return out;
}

std::uint64_t field(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + "=");
  if (pos == std::string::npos) return 0;
  return std::stoull(text.substr(pos + key.size() + 1));
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Lexnumber test written out with machine integers: greedy representation
// a = sum C(h_j + j, j) for j = m, m-1, ..., then all h_j equal.
bool lexnumber_u64(std::uint64_t a, std::uint64_t m) {
  std::uint64_t first = 0;
  bool have = false;
  for (std::uint64_t j = m; j >= 1 && a > 0; --j) {
    std::uint64_t h = 0;
    while (choose(h + 1 + j, j) <= a && (!have || h + 1 <= first)) ++h;
    a -= choose(h + j, j);
    if (!have) {
      first = h;
      have = true;
    } else if (h != first) {
      return false;
    }
  }
  return a == 0;
}

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = o.pass && secs < limit_seconds;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%s; %.3fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", number,
              title.c_str(), o.detail.c_str(), secs, limit_seconds);
  std::fflush(stdout);
}

std::vector<MonomialSet> found_sets;  // Gotzmann sets met in criterion 7

}  // namespace

int main() {
  criterion(1, "lexnumber lists for n = 3 and n = 4", 1, [] {
    const std::string n3 =
        "1 2 3 5 6 9 10 14 15 20 21 27 28 35 36 44 45 54 55 65 66 77 78 90 91 104 105\n";
    const std::string n4 = "1 2 3 4 7 9 10 16 19 20 30 34 35 50 55 56 77 83 84 112\n";
    auto a = run_cli({"lexnumbers", "--n", "3", "--max", "105"});
    auto b = run_cli({"lexnumbers", "--n", "4", "--max", "112"});
    const bool ok = a.code == 0 && b.code == 0 && a.out == n3 && b.out == n4;
    return Outcome{ok, ok ? "27 and 20 values exact" : "got \"" + a.out + "\" / \"" + b.out + "\""};
  });

  criterion(2, "n = 5 list with 69, 70 present and 104 absent", 10, [] {
    const std::vector<unsigned> printed = {1, 2, 3, 4, 5, 9, 12, 14, 15, 25, 31, 34, 35, 55, 65, 104, 105};
    std::vector<unsigned> expected;
    for (auto x : printed) {
      if (x == 104) continue;
      if (x == 105) {
        expected.push_back(69);
        expected.push_back(70);
      }
      expected.push_back(x);
    }
    const auto got = to_unsigned(lexnumbers(5, 105));
    bool ok = got == expected;
    for (unsigned a = 1; a <= 105; ++a) ok = ok && lexnumber_u64(a, 4) == is_lexnumber(a, 5);
    // 69: the size-69 subsets of M^4 are the 70 complements of one monomial;
    // every Gotzmann one is a permuted lexsegment.
    const OrbitClass lex69 = canonical_form(lex_segment(5, 4, 69));
    bool unique69 = true;
    for (const auto& u : universe(5, 4)) {
      std::vector<Monomial> rest;
      for (const auto& m : universe(5, 4))
        if (!(m == u)) rest.push_back(m);
      const MonomialSet V(5, 4, rest);
      if (is_gotzmann(V).is_gotzmann && !(canonical_form(V) == lex69)) unique69 = false;
    }
    // 104: an explicit Gotzmann set that no permutation makes strongly stable.
    const MonomialSet w = construct_nonlex(5, 104);
    const bool witness104 =
        w.size() == 104 && is_gotzmann(w).is_gotzmann && !is_stable_up_to_permutation(w);
    ok = ok && unique69 && witness104;
    return Outcome{ok, "got " + join(got) + "; 69 unique=" + (unique69 ? "yes" : "no") +
                           "; 104 non-lex witness=" + (witness104 ? "yes" : "no")};
  });

  criterion(3, "d(n-1)+1 lexnumbers up to C(d+n-1, n-1)", 1, [] {
    int checked = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
      for (unsigned d = 0; d <= 8; ++d) {
        const auto count = lexnumbers(n, binomial(Natural(d + n - 1), n - 1)).size();
        if (count != d * (n - 1) + 1) {
          return Outcome{false, "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                    " count=" + std::to_string(count)};
        }
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " (n, d) pairs"};
  });

  criterion(4, "ten classes at d = 4, |V| = 11, first drawing matches golden", 30, [] {
    std::ifstream in(std::string(GOLDEN_DIR) + "/figure1.txt");
    std::stringstream golden;
    golden << in.rdbuf();
    auto r = run_cli({"classify3", "--d", "4", "--a", "11", "--render"});
    std::vector<std::string> blocks;
    std::istringstream lines(r.out);
    std::string line, header;
    std::getline(lines, header);
    while (std::getline(lines, line)) {
      if (line.rfind("# class", 0) == 0) {
        blocks.emplace_back();
      } else if (!blocks.empty()) {
        blocks.back() += line + "\n";
      }
    }
    int matches = 0;
    for (const auto& b : blocks) matches += b == golden.str();
    const bool ok = r.code == 0 && header == "classes=10" && blocks.size() == 10 && matches == 1 &&
                    !golden.str().empty();
    return Outcome{ok, header + ", golden matches " + std::to_string(matches) + " class"};
  });

  criterion(5, "growth lower bound, exhaustive and sampled", 60, [] {
    auto a = run_cli({"oracle", "macaulay", "--n", "3", "--d", "3", "--up-to"});
    auto b = run_cli({"oracle", "macaulay", "--n", "2", "--d", "5", "--up-to"});
    auto c = run_cli({"oracle", "macaulay", "--n", "3", "--d", "4", "--sample", "10000", "--seed", "42"});
    const std::uint64_t want_a = 2 + 8 + 64 + 1024, want_b = 2 + 4 + 8 + 16 + 32 + 64;
    const bool ok = a.code == 0 && b.code == 0 && c.code == 0 &&
                    field(a.out, "enumerated") == want_a && field(b.out, "enumerated") == want_b &&
                    field(c.out, "checked") == 10000 && field(a.out, "violations") == 0 &&
                    field(b.out, "violations") == 0 && field(c.out, "violations") == 0;
    return Outcome{ok, std::to_string(field(a.out, "checked") + field(b.out, "checked") +
                                      field(c.out, "checked")) +
                           " sets, " +
                           std::to_string(field(a.out, "violations") + field(b.out, "violations") +
                                          field(c.out, "violations")) +
                           " violations"};
  });

  criterion(6, "up operator equals lexsegment shadow for n <= 5, d <= 4", 10, [] {
    std::uint64_t checked = 0;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
      auto r = run_cli({"oracle", "up", "--n", std::to_string(n), "--d", "4", "--up-to"});
      ok = ok && r.code == 0 && field(r.out, "violations") == 0;
      checked += field(r.out, "checked");
    }
    std::uint64_t want = 0;
    for (std::size_t n = 1; n <= 5; ++n)
      for (unsigned d = 0; d <= 4; ++d) want += universe_size(n, d) + 1;
    ok = ok && checked == want;
    return Outcome{ok, std::to_string(checked) + " (n, d, a) cases including a = 0"};
  });

  const auto t7 = std::chrono::steady_clock::now();
  criterion(7, "lex uniqueness iff lexnumber, n = 3, a <= 15", 120, [] {
    std::uint64_t scanned = 0;
    for (unsigned a = 1; a <= 15; ++a) {
      const auto r = lex_uniqueness(3, a);
      scanned += r.subsets_checked;
      for (const auto& V : r.gotzmann_sets) found_sets.push_back(V);
      if (r.holds() != is_lexnumber(a, 3)) return Outcome{false, "mismatch at a=" + std::to_string(a)};
    }
    auto c = run_cli({"oracle", "lex-uniqueness", "--n", "3", "--max", "15"});
    const bool ok = c.code == 0;
    return Outcome{ok, std::to_string(scanned) + " subsets, " + std::to_string(found_sets.size()) +
                           " Gotzmann sets, cli exit " + std::to_string(c.code)};
  });

  criterion(8, "non-lexsegment construction for n = 3, 4 and a <= 30", 5, [] {
    int built = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
      for (unsigned a = 1; a <= 30; ++a) {
        if (is_lexnumber(a, n)) continue;
        const MonomialSet V = construct_nonlex(n, a);
        const bool ok = V.size() == a && gcd_of(V).degree() == 0 && is_gotzmann(V).is_gotzmann &&
                        !is_stable_up_to_permutation(V);
        if (!ok) return Outcome{false, "n=" + std::to_string(n) + " a=" + std::to_string(a)};
        ++built;
      }
    }
    return Outcome{true, std::to_string(built) + " constructions"};
  });

  criterion(9, "structural lemmas and persistence on every set from criterion 7", 120, [&] {
    std::size_t violations = 0;
    for (const auto& V : found_sets) violations += lemma_failures(V, 4).size();
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t7).count();
    const bool ok = !found_sets.empty() && violations == 0 && total < 120;
    return Outcome{ok, std::to_string(found_sets.size()) + " sets, " + std::to_string(violations) +
                           " violations, with criterion 7 " + std::to_string(total) + "s"};
  });

  criterion(10, "fixed-empty test agrees with the direct test in three variables", 60, [] {
    std::uint64_t checked = 0;
    bool ok = true;
    auto sweep = [&](SweepConfig cfg) {
      const auto r = sweep_fixed_empty(cfg);
      ok = ok && r.ok();
      checked += r.instances_checked;
      return r.instances_checked;
    };
    for (unsigned d = 0; d <= 3; ++d) sweep({3, d, std::nullopt, false, kDefaultBudget, std::nullopt, Execution::parallel});
    const auto sampled = sweep({3, 4, std::nullopt, false, kDefaultBudget, SampleSpec{10000, 42}, Execution::parallel});
    const auto eleven = sweep({3, 4, 11, false, kDefaultBudget, std::nullopt, Execution::parallel});
    ok = ok && sampled == 10000 && eleven == choose(15, 11);
    return Outcome{ok, std::to_string(checked) + " sets"};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
