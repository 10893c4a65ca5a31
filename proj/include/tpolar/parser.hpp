#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/polynomial.hpp"

namespace tpolar {

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' uint)?
// atom   := uint | ident | '(' expr ')'
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& vars, PrimeField field)
      : text_(text), vars_(vars), field_(field) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      std::size_t start = pos_;
      unsigned long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > 4096) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Residue v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = field_.add(field_.mul(v, 10), static_cast<Residue>(text_[pos_] - '0'));
        ++pos_;
      }
      return Polynomial::constant(field_, vars_.size(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(field_, vars_.size(), i);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses polynomial text over the given variables. Integer literals are
/// reduced modulo the field characteristic. A leading sign is accepted at
/// the start of any expression.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                   PrimeField field = PrimeField{}) {
  return detail::PolynomialParser(text, variables, field).parse();
}

/// Splits "x0,x1, x2" into trimmed names, rejecting names outside
/// [A-Za-z][A-Za-z0-9_]* and duplicates.
inline std::vector<std::string> parse_variable_list(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view item = csv.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    bool ok = !item.empty() && std::isalpha(static_cast<unsigned char>(item.front()));
    for (char ch : item) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw ParseError("invalid variable name '" + std::string(item) + "'", start);
    for (const auto& seen : out)
      if (seen == item) throw ParseError("duplicate variable '" + std::string(item) + "'", start);
    out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace tpolar
