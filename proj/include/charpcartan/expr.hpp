/*
   Copyright 2026 The charpcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARPCARTAN_EXPR_HPP
#define CHARPCARTAN_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "forms.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace charpcartan {

// Grammar (whitespace is insignificant):
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := factor ('*'? factor)*
//   factor:= int | ident ('^' ['-'] int)? | 'd' ident ('^' 'd' ident)*
// An identifier naming a declared variable is that variable; otherwise
// `d<name>` is the differential of the declared variable <name>.

/// Parses `name[:laurent],...` into ring variables.
inline std::vector<Variable> parse_vars(std::string_view decl) {
  std::vector<Variable> out;
  std::size_t pos = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (pos <= decl.size()) {
    std::size_t end = decl.find(',', pos);
    if (end == std::string_view::npos) end = decl.size();
    std::string_view item = decl.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) {
      if (decl.find_first_not_of(" \t") == std::string_view::npos) return out;
      throw SyntaxError(pos, "empty variable declaration");
    }
    Variable v;
    std::size_t colon = item.find(':');
    std::string_view name = item.substr(0, colon);
    if (colon != std::string_view::npos) {
      std::string_view flag = item.substr(colon + 1);
      if (flag != "laurent" && flag != "poly") throw SyntaxError(pos + colon + 1, "unknown variable flag");
      v.laurent = flag == "laurent";
    }
    if (name.empty() || !is_ident_start(name.front())) throw SyntaxError(pos, "bad variable name");
    for (char c : name) {
      if (!is_ident(c)) throw SyntaxError(pos, "bad variable name");
    }
    v.name = std::string(name);
    for (const auto& w : out) {
      if (w.name == v.name) throw SyntaxError(pos, "duplicate variable '" + v.name + "'");
    }
    out.push_back(std::move(v));
    pos = end + 1;
  }
  return out;
}

namespace detail {

struct ParsedTerm {
  Fp coeff;
  Exponents exps;
  IndexSet diffs;
  bool odd = false;  // the wedge order as written
};

class ExprParser {
 public:
  ExprParser(std::string_view src, const PolyRing& ring) : src_(src), ring_(ring) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    skip();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-'));
      skip();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Fp integer_mod_p() {
    const Prime& p = ring_.prime();
    Fp v = 0;
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = p.add(p.mul(v, 10 % p.value()), static_cast<Fp>(peek() - '0') % p.value());
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected integer");
    return v;
  }

  std::int64_t exponent() {
    skip();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) throw SyntaxError(start, "exponent too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected integer exponent");
    return neg ? -v : v;
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (at_end() || !ident_start(peek())) throw SyntaxError(pos_, "expected identifier");
    while (!at_end() && ident_char(peek())) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  // Returns the variable index of a differential `d<name>` at the cursor.
  std::size_t differential_after_wedge() {
    skip();
    std::size_t start = pos_;
    std::string id = identifier();
    if (id.size() >= 2 && id[0] == 'd' && !ring_.index_of(id)) {
      if (auto k = ring_.index_of(std::string_view(id).substr(1))) return *k;
    }
    throw SyntaxError(start, "expected a differential after '^'");
  }

  ParsedTerm term(bool negative) {
    const Prime& p = ring_.prime();
    ParsedTerm t{1, Exponents(ring_.nvars(), 0), {}};
    bool first = true;
    for (;;) {
      skip();
      if (!first) {
        if (at_end()) break;
        if (peek() == '*') {
          ++pos_;
          skip();
        } else if (!(ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek())))) {
          break;
        }
      }
      if (at_end()) throw SyntaxError(pos_, "expected a factor");
      first = false;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = p.mul(t.coeff, integer_mod_p());
        continue;
      }
      if (!ident_start(c)) throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
      std::size_t start = pos_;
      std::string id = identifier();
      if (auto k = ring_.index_of(id)) {
        skip();
        std::int64_t e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = exponent();
        }
        t.exps[*k] += e;
        continue;
      }
      if (id.size() >= 2 && id[0] == 'd') {
        if (auto k = ring_.index_of(std::string_view(id).substr(1))) {
          t.diffs.push_back(*k);
          skip();
          while (!at_end() && peek() == '^') {
            ++pos_;
            t.diffs.push_back(differential_after_wedge());
            skip();
          }
          continue;
        }
      }
      throw UndeclaredVariable("undeclared variable '" + id + "' at position " + std::to_string(start));
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] < 0 && !ring_.laurent(i)) {
        throw NegativeExponentOnPolynomialVariable("negative exponent on polynomial variable '" +
                                                   ring_.var(i).name + "'");
      }
    }
    if (negative) t.coeff = p.neg(t.coeff);
    return t;
  }

  std::string_view src_;
  PolyRing ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// A parsed expression: a function (degree 0) or a q-form.
using Expression = std::variant<Poly, DiffForm>;

inline Expression parse_expression(std::string_view src, const PolyRing& ring) {
  auto terms = detail::ExprParser(src, ring).parse();
  std::size_t degree = 0;
  bool have_degree = false;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (have_degree && t.diffs.size() != degree) {
      throw DegreeError("expression mixes forms of different degree");
    }
    degree = t.diffs.size();
    have_degree = true;
  }
  if (degree == 0) {
    std::vector<Term> out;
    for (auto& t : terms) {
      if (t.coeff != 0) out.push_back({std::move(t.exps), t.coeff});
    }
    return Poly::from_terms(ring, std::move(out));
  }
  DiffForm w(ring, degree);
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    w.add_term(t.diffs, Poly::monomial(ring, t.exps, static_cast<std::int64_t>(t.coeff)));
  }
  return w;
}

inline Poly parse_poly(std::string_view src, const PolyRing& ring) {
  Expression e = parse_expression(src, ring);
  if (auto* f = std::get_if<Poly>(&e)) return *f;
  throw DegreeError("expected a function, got a differential form");
}

/// Parses a form of the given degree; a zero function is accepted as the
/// zero form.
inline DiffForm parse_form(std::string_view src, const PolyRing& ring, std::size_t degree) {
  Expression e = parse_expression(src, ring);
  if (auto* f = std::get_if<Poly>(&e)) {
    if (f->is_zero()) return DiffForm(ring, degree);
    if (degree == 0) return DiffForm::function(*f);
    throw DegreeError("expected a " + std::to_string(degree) + "-form, got a function");
  }
  auto& w = std::get<DiffForm>(e);
  if (w.degree() != degree) {
    throw DegreeError("expected a " + std::to_string(degree) + "-form, got degree " + std::to_string(w.degree()));
  }
  return w;
}

/// Splits `a, b; c, d` into rows of trimmed cells.
inline std::vector<std::vector<std::string>> split_grid(std::string_view src) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos <= src.size()) {
    std::size_t end = src.find(';', pos);
    if (end == std::string_view::npos) end = src.size();
    std::vector<std::string> row;
    std::string_view line = src.substr(pos, end - pos);
    std::size_t q = 0;
    while (q <= line.size()) {
      std::size_t e = line.find(',', q);
      if (e == std::string_view::npos) e = line.size();
      row.emplace_back(line.substr(q, e - q));
      q = e + 1;
    }
    rows.push_back(std::move(row));
    pos = end + 1;
  }
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw SyntaxError(0, "matrix grid must be square");
  }
  return rows;
}

inline PolyMatrix parse_poly_matrix(std::string_view src, const PolyRing& ring) {
  auto grid = split_grid(src);
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : grid) {
    std::vector<Poly> row;
    for (const auto& cell : r) row.push_back(parse_poly(cell, ring));
    rows.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(ring, rows);
}

inline std::vector<std::vector<DiffForm>> parse_form_matrix(std::string_view src, const PolyRing& ring) {
  auto grid = split_grid(src);
  std::vector<std::vector<DiffForm>> rows;
  for (const auto& r : grid) {
    std::vector<DiffForm> row;
    for (const auto& cell : r) row.push_back(parse_form(cell, ring, 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render(const Poly& f) { return to_string(f); }
inline std::string render(const DiffForm& w) { return to_string(w); }
inline std::string render(const Expression& e) {
  return std::visit([](const auto& x) { return to_string(x); }, e);
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_EXPR_HPP
