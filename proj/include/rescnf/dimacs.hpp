#pragma once

#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rescnf/formula.hpp"

namespace rescnf {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view tok) {
  Int v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Reads a DIMACS CNF stream. Comment lines before the header are kept in
/// `Formula::comments`; clauses may span lines; a lone `0` is the empty
/// clause.
inline Formula parse_dimacs(std::istream& in) {
  Formula f;
  bool have_header = false;
  std::vector<int> pending;
  std::size_t pending_line = 0;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    auto toks = detail::split_ws(sv);
    if (toks.empty()) continue;
    if (toks[0][0] == 'c') {
      if (!have_header) {
        std::string_view body = sv.substr(sv.find('c') + 1);
        if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
        while (!body.empty() && body.back() == '\r') body.remove_suffix(1);
        f.comments.emplace_back(body);
      }
      continue;
    }
    if (toks[0][0] == 'p') {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf")
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      auto vars = detail::parse_int<std::uint32_t>(toks[2]);
      auto count = detail::parse_int<std::uint64_t>(toks[3]);
      if (!vars || !count || *vars > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      f.variable_count = *vars;
      f.clauses.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*count, 1u << 20)));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");
    for (std::string_view tok : toks) {
      auto lit = detail::parse_int<int>(tok);
      if (!lit) throw ParseError(lineno, "invalid literal '" + std::string(tok) + "'");
      if (*lit == 0) {
        f.clauses.push_back(Clause::from_dimacs(pending));
        pending.clear();
        continue;
      }
      if (*lit == std::numeric_limits<int>::min() ||
          static_cast<std::uint32_t>(*lit < 0 ? -*lit : *lit) > f.variable_count)
        throw ParseError(lineno, "literal " + std::string(tok) + " exceeds declared variable count " +
                                     std::to_string(f.variable_count));
      if (pending.empty()) pending_line = lineno;
      pending.push_back(*lit);
    }
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "clause is missing terminating 0");
  return f;
}

inline Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline void emit_dimacs(const Formula& f, std::ostream& out) {
  for (const std::string& c : f.comments) out << (c.empty() ? "c" : "c " + c) << '\n';
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (Literal l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

inline std::string emit_dimacs(const Formula& f) {
  std::ostringstream out;
  emit_dimacs(f, out);
  return out.str();
}

}  // namespace rescnf
