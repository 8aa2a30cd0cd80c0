#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pdep/core_model.hpp"
#include "pdep/errors.hpp"
#include "pdep/team.hpp"

namespace pdep {

namespace detail {

inline bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '\'';
}

struct Token {
  enum class Kind { name, arrow, tilde, tilde_star, subset } kind;
  std::string text;
  std::size_t column;
};

// Splits one atom into names and operators. `line` only feeds error spans.
inline std::vector<Token> lex_atom(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (is_name_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      out.push_back({Token::Kind::name, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (text.substr(i, 2) == "->") {
      out.push_back({Token::Kind::arrow, "->", col});
      i += 2;
    } else if (text.substr(i, 2) == "~*") {
      out.push_back({Token::Kind::tilde_star, "~*", col});
      i += 2;
    } else if (c == '~') {
      out.push_back({Token::Kind::tilde, "~", col});
      i += 1;
    } else if (text.substr(i, 2) == "<=") {
      out.push_back({Token::Kind::subset, "<=", col});
      i += 2;
    } else {
      throw ParseError({line, col}, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

// Returns nullopt for a blank or comment-only line.
inline std::optional<Atom> parse_atom_line(std::string_view text, VariableRegistry& reg,
                                           std::size_t line) {
  const auto tokens = lex_atom(text, line);
  if (tokens.empty()) return std::nullopt;

  std::optional<std::size_t> op;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == Token::Kind::name) continue;
    if (op) {
      throw ParseError({line, tokens[i].column},
                       "unexpected operator '" + tokens[i].text + "'");
    }
    op = i;
  }
  if (!op) throw ParseError({line, tokens.front().column}, "missing operator");

  // Validate the shape before interning so a failed parse leaves `reg` alone.
  const auto& op_token = tokens[*op];
  const std::size_t left = *op;
  const std::size_t right = tokens.size() - *op - 1;
  if (right == 0) {
    throw ParseError({line, op_token.column}, "missing right-hand side after '" +
                                                  op_token.text + "'");
  }
  if (op_token.kind != Token::Kind::arrow && left == 0) {
    throw ParseError({line, op_token.column}, "missing left-hand side before '" +
                                                  op_token.text + "'");
  }
  if (op_token.kind != Token::Kind::arrow && left != right) {
    throw ArityError("line " + std::to_string(line) + ": '" + op_token.text +
                     "' needs sides of equal length (" + std::to_string(left) +
                     " vs " + std::to_string(right) + ")");
  }

  VarTuple lhs, rhs;
  for (std::size_t i = 0; i < *op; ++i) lhs.push_back(reg.intern(tokens[i].text));
  for (std::size_t i = *op + 1; i < tokens.size(); ++i) rhs.push_back(reg.intern(tokens[i].text));

  switch (op_token.kind) {
    case Token::Kind::arrow: return make_fd(std::move(lhs), std::move(rhs));
    case Token::Kind::tilde: return make_mi(std::move(lhs), std::move(rhs));
    case Token::Kind::tilde_star: return make_mde(std::move(lhs), std::move(rhs));
    case Token::Kind::subset: return make_ind(std::move(lhs), std::move(rhs));
    case Token::Kind::name: break;
  }
  throw ParseError({line, op_token.column}, "internal: bad operator");
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, end - start)));
    start = end + 1;
  }
  return cells;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline Rational parse_weight(std::string_view text, SourceSpan span) {
  std::string_view num = text, den;
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (auto slash = num.find('/'); slash != std::string_view::npos) {
    den = num.substr(slash + 1);
    num = num.substr(0, slash);
    if (!all_digits(den)) {
      throw ParseError(span, "weight must be an integer or p/q, got '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num)) {
    throw ParseError(span, "weight must be an integer or p/q, got '" + std::string(text) + "'");
  }
  using boost::multiprecision::cpp_int;
  cpp_int p{std::string(num)};
  cpp_int q = den.empty() ? cpp_int(1) : cpp_int(std::string(den));
  if (q == 0) throw WeightError("zero denominator in weight '" + std::string(text) + "'");
  Rational w(p, q);
  return negative ? Rational(-w) : w;
}

}  // namespace detail

// Parses a single atom, interning its variables into `reg`:
//   `x y -> z w`   FD        `-> x`      constancy
//   `x ~ y`        MI        `x ~* y`    MDE        `x <= y`   IND
inline Atom parse_atom(std::string_view text, VariableRegistry& reg) {
  auto atom = detail::parse_atom_line(text, reg, 1);
  if (!atom) throw ParseError({1, 1}, "empty atom");
  return *atom;
}

// One atom per line, `#` comments, blank lines ignored. Variables are interned
// into `reg` in first-appearance order.
inline std::vector<Atom> parse_atoms(std::string_view text, VariableRegistry& reg) {
  std::vector<Atom> atoms;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (auto a = detail::parse_atom_line(lines[i], reg, i + 1)) atoms.push_back(std::move(*a));
  }
  return atoms;
}

inline DependencySet parse_dependency_file(std::string_view text, VariableRegistry reg = {}) {
  auto atoms = parse_atoms(text, reg);
  return DependencySet(std::move(reg), atoms);
}

// CSV: header of variable names followed by a final `weight` column; one
// assignment per data row with an exact weight `p/q` or integer.
inline ProbabilisticTeam parse_team_file(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t header_line = 0;
  while (header_line < lines.size() && detail::trim(lines[header_line]).empty()) ++header_line;
  if (header_line == lines.size()) throw ParseError({1, 1}, "missing header row");

  const auto header = detail::split_csv(lines[header_line]);
  if (header.back() != "weight") {
    throw ParseError({header_line + 1, 1}, "last header column must be 'weight'");
  }
  VariableRegistry reg;
  for (std::size_t c = 0; c + 1 < header.size(); ++c) {
    const auto name = header[c];
    bool valid = !name.empty() && detail::is_name_start(name.front());
    for (char ch : name) valid = valid && detail::is_name_char(ch);
    if (!valid) {
      throw ParseError({header_line + 1, c + 1},
                       "invalid variable name '" + std::string(name) + "'");
    }
    if (reg.contains(name)) {
      throw ParseError({header_line + 1, c + 1}, "duplicate column '" + std::string(name) + "'");
    }
    reg.intern(name);
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<Rational> weights;
  for (std::size_t i = header_line + 1; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const auto cells = detail::split_csv(lines[i]);
    if (cells.size() != header.size()) {
      throw ParseError({i + 1, 1}, "expected " + std::to_string(header.size()) +
                                       " cells, got " + std::to_string(cells.size()));
    }
    std::vector<std::string> row;
    for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
      if (cells[c].empty()) throw ParseError({i + 1, c + 1}, "empty cell");
      row.emplace_back(cells[c]);
    }
    rows.push_back(std::move(row));
    weights.push_back(detail::parse_weight(cells.back(), {i + 1, cells.size()}));
  }
  return ProbabilisticTeam(std::move(reg), rows, std::move(weights));
}

inline std::string serialize_team(const ProbabilisticTeam& t) {
  std::ostringstream out;
  for (const auto& name : t.domain().names()) out << name << ',';
  out << "weight\n";
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    for (VarId v = 0; v < t.num_columns(); ++v) out << t.value(r, v) << ',';
    out << t.weight(r).str() << '\n';
  }
  return out.str();
}

}  // namespace pdep
