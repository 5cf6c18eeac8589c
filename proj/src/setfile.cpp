#include "gotzmann/setfile.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "gotzmann/errors.hpp"

namespace gotzmann {

std::string serialize_set(const MonomialSet& V) {
  std::ostringstream out;
  out << "n=" << V.n() << " d=" << V.degree() << '\n';
  for (const auto& m : V) {
    for (std::size_t k = 0; k < m.width(); ++k) out << (k ? " " : "") << m[k];
    out << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k == line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::size_t header_value(const Token& tok, std::string_view key, std::size_t line) {
  std::size_t value = 0;
  if (tok.text.substr(0, key.size()) != key ||
      !parse_int(tok.text.substr(key.size()), value)) {
    throw ParseError(line, tok.column,
                     "bad header, expected \"n=<int> d=<int>\", got \"" +
                         std::string(tok.text) + "\"");
  }
  return value;
}

}  // namespace

MonomialSet parse_set(std::string_view text) {
  std::size_t n = 0;
  unsigned d = 0;
  bool have_header = false;
  std::vector<Monomial> elems;
  std::map<std::vector<Exponent>, std::size_t> first_seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens.front().column,
                         "bad header, expected \"n=<int> d=<int>\"");
      }
      n = header_value(tokens[0], "n=", line_no);
      const std::size_t degree = header_value(tokens[1], "d=", line_no);
      if (n == 0) throw ParseError(line_no, tokens[0].column, "bad header, n must be positive");
      if (degree > 1'000'000) throw ParseError(line_no, tokens[1].column, "bad header, d too large");
      d = static_cast<unsigned>(degree);
      have_header = true;
    } else {
      std::vector<Exponent> exps;
      exps.reserve(n);
      unsigned long long sum = 0;
      for (std::size_t k = 0; k < tokens.size(); ++k) {
        const Token& tok = tokens[k];
        if (k == n) {
          throw ParseError(line_no, tok.column,
                           "wrong arity, expected " + std::to_string(n) + " exponents");
        }
        if (tok.text.front() == '-') {
          throw ParseError(line_no, tok.column, "negative exponent");
        }
        Exponent e = 0;
        if (!parse_int(tok.text, e)) {
          throw ParseError(line_no, tok.column,
                           "invalid exponent \"" + std::string(tok.text) + "\"");
        }
        exps.push_back(e);
        sum += e;
      }
      if (exps.size() != n) {
        throw ParseError(line_no, line.size() + 1,
                         "wrong arity, expected " + std::to_string(n) + " exponents, got " +
                             std::to_string(exps.size()));
      }
      if (sum != d) {
        throw ParseError(line_no, tokens.front().column,
                         "degree sum " + std::to_string(sum) + " does not match d=" +
                             std::to_string(d));
      }
      auto [it, inserted] = first_seen.emplace(exps, line_no);
      if (!inserted) {
        throw ParseError(line_no, tokens.front().column,
                         "duplicate monomial (first seen on line " +
                             std::to_string(it->second) + ")");
      }
      elems.emplace_back(std::move(exps));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header");
  return MonomialSet(n, d, std::move(elems));
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.width(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (m[k] > 1) out += '^' + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  std::vector<Exponent> exps(n, 0);
  if (text == "1") return Monomial(std::move(exps));
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view factor = text.substr(pos, end - pos);
    if (factor.size() < 2 || factor.front() != 'x') {
      throw DomainError("bad monomial factor \"" + std::string(factor) + "\"");
    }
    const std::size_t caret = factor.find('^');
    std::size_t var = 0;
    Exponent e = 1;
    if (!parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos
                                                                    : caret - 1),
                   var) ||
        (caret != std::string_view::npos && !parse_int(factor.substr(caret + 1), e))) {
      throw DomainError("bad monomial factor \"" + std::string(factor) + "\"");
    }
    if (var < 1 || var > n) {
      throw DomainError("variable x" + std::to_string(var) + " out of range");
    }
    exps[var - 1] += e;
    if (end == text.size()) break;
    pos = end + 1;
  }
  return Monomial(std::move(exps));
}

}  // namespace gotzmann
