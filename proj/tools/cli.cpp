#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gotzmann/classify3.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/oracle.hpp"
#include "gotzmann/render.hpp"
#include "gotzmann/setfile.hpp"

namespace gotzmann::cli {

namespace {

namespace fs = std::filesystem;

// Raised for unreadable files and malformed numbers; maps to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw InputError(std::string(what) + ": expected a nonnegative integer, got \"" + text + "\"");
  }
  return Natural(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GOTZMANN_BUDGET")) {
    return static_cast<std::uint64_t>(parse_natural(env, "GOTZMANN_BUDGET"));
  }
  return kDefaultBudget;
}

std::string format_rep(const BinomialRep& rep) {
  std::string out;
  for (const auto& term : rep.terms) {
    if (!out.empty()) out += '+';
    out += "C(" + Natural(term.h + term.j).str() + "," + std::to_string(term.j) + ")";
  }
  return out;
}

std::string join(const std::vector<Natural>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += v.str();
  }
  return out;
}

std::string format_report(const GotzmannReport& r) {
  std::ostringstream out;
  out << "size=" << r.size << '\n'
      << "gcd=" << (r.gcd ? format_monomial(*r.gcd) : "none") << '\n'
      << "reduced_size=" << r.reduced_size << '\n'
      << "shadow=" << r.shadow << '\n'
      << "bound=" << r.bound << '\n'
      << "is_gotzmann=" << (r.is_gotzmann ? "true" : "false") << '\n'
      << "is_strongly_stable=" << (r.is_strongly_stable ? "true" : "false") << '\n'
      << "persistence_checked=" << r.persistence_checked << '\n';
  return out.str();
}

int finish_sweep(const SweepReport& report, const std::string& dump_dir, std::ostream& out) {
  out << format_report(report);
  if (!dump_dir.empty() && !report.ok()) {
    fs::create_directories(dump_dir);
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      std::ostringstream name;
      name << "violation_" << std::setw(4) << std::setfill('0') << k + 1 << ".set";
      write_file(fs::path(dump_dir) / name.str(),
                 "# " + format_violation(report.violations[k]) + "\n" +
                     serialize_set(report.violations[k].set));
    }
  }
  return report.ok() ? kOk : kPropertyFailed;
}

struct SweepArgs {
  std::size_t n = 3;
  unsigned d = 0;
  bool up_to = false;
  std::optional<std::size_t> size;
  bool gcd_one = false;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> budget;
  std::string dump_dir;
};

void add_sweep_options(CLI::App* cmd, SweepArgs& a) {
  cmd->add_option("--n", a.n, "number of variables")->required();
  cmd->add_option("--d", a.d, "degree")->required();
  cmd->add_flag("--up-to", a.up_to, "sweep every degree 0..d");
  cmd->add_option("--size", a.size, "only sets of this size");
  cmd->add_flag("--gcd-one", a.gcd_one, "only sets with gcd 1");
  cmd->add_option("--sample", a.sample, "number of seeded random sets instead of all");
  cmd->add_option("--seed", a.seed, "sample seed");
  cmd->add_option("--budget", a.budget, "work bound in elementary steps");
  cmd->add_option("--dump-dir", a.dump_dir, "write each violation as a set file");
}

SweepReport merge_degrees(const SweepArgs& a,
                          SweepReport (*sweep)(const SweepConfig&), std::uint64_t budget) {
  SweepReport total;
  const unsigned first = a.up_to ? 0 : a.d;
  for (unsigned d = first; d <= a.d; ++d) {
    SweepConfig cfg;
    cfg.n = a.n;
    cfg.d = d;
    cfg.size_filter = a.size;
    cfg.gcd_one_only = a.gcd_one;
    cfg.budget = budget;
    if (a.sample) cfg.sample = SampleSpec{*a.sample, a.seed};
    SweepReport part = sweep(cfg);
    total.subsets_enumerated += part.subsets_enumerated;
    total.instances_checked += part.instances_checked;
    total.wall_notes += (total.wall_notes.empty() ? "" : "; ") + part.wall_notes;
    for (auto& v : part.violations) total.violations.push_back(std::move(v));
  }
  return total;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gotzmann monomial sets: binomial representations, growth tests, classification"};
  app.require_subcommand(1);

  // rep / up / down / bar
  std::string h_text;
  std::size_t index = 0;
  auto add_operator = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("H", h_text, "positive integer")->required();
    cmd->add_option("--index", index, "top binomial index")->required();
    return cmd;
  };
  auto* rep_cmd = add_operator("rep", "binomial representation of H");
  auto* up_cmd = add_operator("up", "H^<M>");
  auto* down_cmd = add_operator("down", "H_<<M>>");
  auto* bar_cmd = add_operator("bar", "H minus its largest binomial C(alpha+M, M) below H");

  std::size_t n = 0;
  std::string size_text;
  auto* degree_cmd = app.add_subcommand("degree", "degree of a gcd-1 Gotzmann set of the given size");
  degree_cmd->add_option("--n", n)->required();
  degree_cmd->add_option("--size", size_text)->required();

  std::string max_text;
  std::optional<unsigned> lex_degree;
  auto* lexnumbers_cmd = app.add_subcommand("lexnumbers", "list n-th lexnumbers");
  lexnumbers_cmd->add_option("--n", n)->required();
  auto* max_opt = lexnumbers_cmd->add_option("--max", max_text, "upper limit");
  auto* deg_opt = lexnumbers_cmd->add_option("--degree", lex_degree, "all sizes up to |M^D|");
  max_opt->excludes(deg_opt);

  unsigned d = 0;
  std::string a_text;
  std::string out_path;
  auto* lex_cmd = app.add_subcommand("lex", "write a lexsegment set");
  lex_cmd->add_option("--n", n)->required();
  lex_cmd->add_option("--d", d)->required();
  lex_cmd->add_option("--a", a_text)->required();
  lex_cmd->add_option("--out", out_path);

  std::string file;
  std::size_t persist = 0;
  std::string expect;
  auto* check_cmd = app.add_subcommand("check", "Gotzmann report for a set file");
  check_cmd->add_option("FILE", file)->required();
  check_cmd->add_option("--persist", persist, "extra degrees of persistence to verify");
  check_cmd->add_option("--expect", expect, "fail unless the verdict matches")
      ->check(CLI::IsMember({"gotzmann", "not-gotzmann"}));

  auto* construct_cmd = app.add_subcommand("construct", "non-lexsegment Gotzmann set of size A");
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--a", a_text)->required();
  construct_cmd->add_option("--out", out_path);

  bool render_flag = false;
  std::string out_dir;
  std::optional<std::uint64_t> budget_opt;
  auto* classify_cmd = app.add_subcommand("classify3", "orbit classes of gcd-1 Gotzmann sets, n = 3");
  classify_cmd->add_option("--d", d)->required();
  classify_cmd->add_option("--a", a_text)->required();
  classify_cmd->add_flag("--render", render_flag, "print each class as a triangle, missing monomials toward x1^d");
  classify_cmd->add_option("--out-dir", out_dir, "write set, text and SVG files per class");
  classify_cmd->add_option("--budget", budget_opt, "work bound in elementary steps");

  bool svg = false;
  auto* render_cmd = app.add_subcommand("render", "draw a three-variable set file");
  render_cmd->add_option("FILE", file)->required();
  render_cmd->add_flag("--svg", svg, "SVG instead of text");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force sweeps");
  oracle_cmd->require_subcommand(1);
  SweepArgs sweep_args;
  auto* o_macaulay = oracle_cmd->add_subcommand("macaulay", "|MV| >= |V|^<n-1>");
  add_sweep_options(o_macaulay, sweep_args);
  auto* o_lemmas = oracle_cmd->add_subcommand("lemmas", "structural lemmas on Gotzmann sets");
  add_sweep_options(o_lemmas, sweep_args);
  auto* o_fixed_empty = oracle_cmd->add_subcommand("fixed-empty", "fixed-empty characterization");
  add_sweep_options(o_fixed_empty, sweep_args);
  auto* o_up = oracle_cmd->add_subcommand("up", "up operator against lexsegment shadows");
  o_up->add_option("--n", sweep_args.n)->required();
  o_up->add_option("--d", sweep_args.d)->required();
  o_up->add_flag("--up-to", sweep_args.up_to);
  std::size_t a_max = 0;
  auto* o_lex_unique = oracle_cmd->add_subcommand("lex-uniqueness", "lex uniqueness iff lexnumber");
  o_lex_unique->add_option("--n", sweep_args.n)->required();
  o_lex_unique->add_option("--max", a_max)->required();
  o_lex_unique->add_option("--budget", sweep_args.budget);
  o_lex_unique->add_option("--dump-dir", sweep_args.dump_dir);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (rep_cmd->parsed()) {
      out << format_rep(represent(parse_natural(h_text, "H"), index)) << '\n';
    } else if (up_cmd->parsed()) {
      out << up(parse_natural(h_text, "H"), index) << '\n';
    } else if (down_cmd->parsed()) {
      out << down(parse_natural(h_text, "H"), index) << '\n';
    } else if (bar_cmd->parsed()) {
      out << bar(parse_natural(h_text, "H"), index) << '\n';
    } else if (degree_cmd->parsed()) {
      out << determined_degree(n, parse_natural(size_text, "--size")) << '\n';
    } else if (lexnumbers_cmd->parsed()) {
      Natural limit;
      if (lex_degree) {
        limit = binomial(Natural(*lex_degree) + n - 1, n - 1);
      } else if (!max_text.empty()) {
        limit = parse_natural(max_text, "--max");
      } else {
        throw InputError("lexnumbers: one of --max or --degree is required");
      }
      out << join(lexnumbers(n, limit)) << '\n';
    } else if (lex_cmd->parsed()) {
      const auto a = static_cast<std::uint64_t>(parse_natural(a_text, "--a"));
      emit(serialize_set(lex_segment(n, d, a)), out_path, out);
    } else if (check_cmd->parsed()) {
      const MonomialSet V = parse_set(read_file(file));
      GotzmannReport report = is_gotzmann(V);
      std::optional<unsigned> failed;
      if (persist > 0) {
        const PersistenceResult p = persistence_check(V, persist);
        report.persistence_checked = p.verified;
        failed = p.failing_degree;
      }
      out << format_report(report);
      if (failed) {
        out << "persistence_failed_degree=" << *failed << '\n';
        return kPropertyFailed;
      }
      if (!expect.empty() && (expect == "gotzmann") != report.is_gotzmann) {
        err << "check: expected " << expect << '\n';
        return kPropertyFailed;
      }
    } else if (construct_cmd->parsed()) {
      emit(serialize_set(construct_nonlex(n, parse_natural(a_text, "--a"))), out_path, out);
    } else if (classify_cmd->parsed()) {
      ScanOptions options;
      options.budget = budget_opt.value_or(default_budget());
      const auto a = static_cast<std::size_t>(parse_natural(a_text, "--a"));
      const auto classes = enumerate_classes(d, a, options);
      out << "classes=" << classes.size() << '\n';
      if (!out_dir.empty()) fs::create_directories(out_dir);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const MonomialSet rep = display_form(classes[k].orbit.representative);
        if (render_flag) {
          out << "# class " << k + 1 << " members=" << classes[k].members << '\n'
              << render_triangle(rep);
        }
        if (!out_dir.empty()) {
          std::ostringstream stem;
          stem << "class_" << std::setw(2) << std::setfill('0') << k + 1;
          const fs::path base = fs::path(out_dir) / stem.str();
          write_file(base.string() + ".set", serialize_set(rep));
          write_file(base.string() + ".txt", render_triangle(rep));
          write_file(base.string() + ".svg", render_svg(rep));
        }
      }
    } else if (render_cmd->parsed()) {
      const MonomialSet V = parse_set(read_file(file));
      out << (svg ? render_svg(V) : render_triangle(V));
    } else if (oracle_cmd->parsed()) {
      const std::uint64_t budget = sweep_args.budget.value_or(default_budget());
      if (o_macaulay->parsed()) {
        return finish_sweep(merge_degrees(sweep_args, sweep_macaulay, budget),
                            sweep_args.dump_dir, out);
      }
      if (o_lemmas->parsed()) {
        return finish_sweep(merge_degrees(sweep_args, sweep_lemmas, budget),
                            sweep_args.dump_dir, out);
      }
      if (o_fixed_empty->parsed()) {
        return finish_sweep(merge_degrees(sweep_args, sweep_fixed_empty, budget),
                            sweep_args.dump_dir, out);
      }
      if (o_up->parsed()) {
        SweepReport total;
        for (unsigned dd = sweep_args.up_to ? 0 : sweep_args.d; dd <= sweep_args.d; ++dd) {
          SweepReport part = sweep_up_operator(sweep_args.n, dd);
          total.subsets_enumerated += part.subsets_enumerated;
          total.instances_checked += part.instances_checked;
          for (auto& v : part.violations) total.violations.push_back(std::move(v));
        }
        return finish_sweep(total, "", out);
      }
      if (o_lex_unique->parsed()) {
        ScanOptions options;
        options.budget = budget;
        return finish_sweep(sweep_lex_uniqueness(sweep_args.n, a_max, options), sweep_args.dump_dir,
                            out);
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const ParseError& e) {
    err << file << ": " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace gotzmann::cli
