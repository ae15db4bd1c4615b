#include "leibniz/io.hpp"

#include <cstdint>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace leibniz {

namespace {

constexpr std::size_t max_dim = 64;

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

// Comment-stripped, tokenized, non-blank lines.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream stream(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::int64_t parse_count(const std::string& tok, const char* what, std::size_t line) {
  std::int64_t value = 0;
  if (tok.empty()) throw ParseError(std::string("missing ") + what, line);
  for (char ch : tok) {
    if (ch < '0' || ch > '9') throw ParseError(std::string("malformed ") + what + " '" + tok + "'", line);
    value = value * 10 + (ch - '0');
    if (value > FieldSpec::max_prime) throw ParseError(std::string(what) + " out of range", line);
  }
  return value;
}

FieldSpec parse_field_line(const Line& line) {
  if (line.tokens[0] != "field") throw ParseError("expected a field line first", line.number);
  if (line.tokens.size() == 2 && line.tokens[1] == "rational") return FieldSpec::rationals();
  if (line.tokens.size() == 3 && line.tokens[1] == "prime") {
    std::int64_t p = parse_count(line.tokens[2], "modulus", line.number);
    try {
      return FieldSpec::prime(p);
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  throw ParseError("field line must be 'field rational' or 'field prime <p>'", line.number);
}

std::size_t parse_dim_line(const Line& line) {
  if (line.tokens[0] != "dim" || line.tokens.size() != 2)
    throw ParseError("expected 'dim <n>' after the field line", line.number);
  std::int64_t n = parse_count(line.tokens[1], "dimension", line.number);
  if (n < 1 || n > static_cast<std::int64_t>(max_dim))
    throw ParseError("dimension must be in [1, " + std::to_string(max_dim) + "]", line.number);
  return static_cast<std::size_t>(n);
}

std::size_t parse_index(const std::string& tok, std::size_t n, const char* what,
                        std::size_t line) {
  std::int64_t value = parse_count(tok, what, line);
  if (value < 1 || value > static_cast<std::int64_t>(n))
    throw ParseError(std::string(what) + " " + tok + " out of range [1, " + std::to_string(n) + "]",
                     line);
  return static_cast<std::size_t>(value - 1);
}

// <scalar>*e<k>, returning (coefficient, 0-based k).
std::pair<Scalar, std::size_t> parse_term(const std::string& tok, const FieldSpec& f,
                                          std::size_t n, std::size_t line) {
  auto star = tok.find('*');
  if (star == std::string::npos || tok.find('*', star + 1) != std::string::npos)
    throw ParseError("term '" + tok + "' must look like <scalar>*e<k>", line);
  std::string head = tok.substr(0, star), tail = tok.substr(star + 1);
  if (tail.size() < 2 || tail[0] != 'e')
    throw ParseError("term '" + tok + "' must look like <scalar>*e<k>", line);
  Scalar coeff = Scalar::zero(f);
  try {
    coeff = scalar_parse(head, f);
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()) + " in term '" + tok + "'", line);
  }
  std::size_t k = parse_index(tail.substr(1), n, "basis index", line);
  return {coeff, k};
}

}  // namespace

FieldSpec parse_field_token(const std::string& token) {
  if (token == "rational") return FieldSpec::rationals();
  if (token.rfind("prime:", 0) == 0) {
    std::int64_t p = parse_count(token.substr(6), "modulus", 0);
    try {
      return FieldSpec::prime(p);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field must be 'rational' or 'prime:<p>', got '" + token + "'");
}

std::string render_field_token(const FieldSpec& f) {
  return f.is_rationals() ? "rational" : "prime:" + std::to_string(f.p);
}

LeibnizAlgebra parse_algebra_file(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.size() < 2) throw ParseError("file needs a field line and a dim line");
  FieldSpec field = parse_field_line(lines[0]);
  std::size_t n = parse_dim_line(lines[1]);

  std::vector<Scalar> constants(n * n * n, Scalar::zero(field));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] != "bracket")
      throw ParseError("expected a bracket line, got '" + line.tokens[0] + "'", line.number);
    if (line.tokens.size() < 5 || line.tokens[3] != ":")
      throw ParseError("bracket line must look like 'bracket <i> <j> : <term> [+ <term>]...'",
                       line.number);
    std::size_t i = parse_index(line.tokens[1], n, "bracket index", line.number);
    std::size_t j = parse_index(line.tokens[2], n, "bracket index", line.number);
    if (!seen.insert({i, j}).second)
      throw ParseError("duplicate bracket for pair (" + line.tokens[1] + "," + line.tokens[2] + ")",
                       line.number);
    for (std::size_t ti = 4; ti < line.tokens.size(); ti += 2) {
      auto [coeff, k] = parse_term(line.tokens[ti], field, n, line.number);
      constants[(i * n + j) * n + k] += coeff;
      if (ti + 1 < line.tokens.size() && line.tokens[ti + 1] != "+")
        throw ParseError("terms must be joined by '+'", line.number);
      if (ti + 1 == line.tokens.size() - 1)
        throw ParseError("trailing '+' without a term", line.number);
    }
  }
  return LeibnizAlgebra::make(n, field, std::move(constants));
}

std::string render_algebra_file(const LeibnizAlgebra& a) {
  std::ostringstream out;
  const FieldSpec& f = a.field();
  out << (f.is_rationals() ? "field rational" : "field prime " + std::to_string(f.p)) << "\n";
  out << "dim " << a.dim() << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec b = a.bracket_basis(i, j);
      if (is_zero_vec(b)) continue;
      out << "bracket " << i + 1 << " " << j + 1 << " :";
      bool first = true;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (b[k].is_zero()) continue;
        out << (first ? " " : " + ") << scalar_format(b[k]) << "*e" << k + 1;
        first = false;
      }
      out << "\n";
    }
  return out.str();
}

DerivationSet parse_derivation_file(const std::string& text, const LeibnizAlgebra& a) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty() || lines[0].tokens[0] != "derivations" || lines[0].tokens.size() != 2)
    throw ParseError("file must start with 'derivations <count>'",
                     lines.empty() ? 0 : lines[0].number);
  std::int64_t count = parse_count(lines[0].tokens[1], "matrix count", lines[0].number);
  std::size_t n = a.dim();

  std::vector<Matrix> matrices;
  std::size_t li = 1;
  for (std::int64_t mi = 0; mi < count; ++mi) {
    if (li >= lines.size() || lines[li].tokens != std::vector<std::string>{"matrix"})
      throw ParseError("expected 'matrix' line for matrix " + std::to_string(mi + 1),
                       li < lines.size() ? lines[li].number : 0);
    ++li;
    Matrix m = Matrix::zero(n, n, a.field());
    for (std::size_t r = 0; r < n; ++r, ++li) {
      if (li >= lines.size() || lines[li].tokens.size() != n)
        throw ParseError("matrix " + std::to_string(mi + 1) + " needs " + std::to_string(n) +
                             " rows of " + std::to_string(n) + " scalars",
                         li < lines.size() ? lines[li].number : 0);
      for (std::size_t c = 0; c < n; ++c) {
        try {
          m.at(r, c) = scalar_parse(lines[li].tokens[c], a.field());
        } catch (const Error& e) {
          throw ParseError(e.what(), lines[li].number);
        }
      }
    }
    matrices.push_back(std::move(m));
  }
  if (li != lines.size()) throw ParseError("unexpected content after the last matrix",
                                           lines[li].number);
  return lie_closure(a, matrices);
}

}  // namespace leibniz
