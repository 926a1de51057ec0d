#pragma once

// Matrix files:
//
//   order = 30
//   a = -z^7 - z^6 + z^2; b = z^7 - z^2
//   c = 1                # comments run to the end of the line
//   d = -z^6 - 1
//
// Statements end at ';' or a newline. "z" stands for zeta_order.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := rational | "z" ("^" ["-"] integer)? | "(" expr ")" | "-" factor
//   rational := integer ("/" positive_integer)?

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "cyclotorsion/curves.hpp"

namespace cyclotorsion {

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, long order, int line = 1, int column = 1)
      : text_(text), order_(order), line_(line), column_(column) {}

  CycloNum parse_all() {
    CycloNum v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    if (s.empty()) {
      if (pos_ >= text_.size()) fail("expected a number, found end of input");
      fail("expected a number, found '" + std::string(1, text_[pos_]) + "'");
    }
    return s;
  }

  CycloNum expr() {
    CycloNum v = term();
    while (true) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  CycloNum term() {
    CycloNum v = factor();
    while (accept('*')) v = v * factor();
    return v;
  }

  CycloNum factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '-') {
      advance();
      return -factor();
    }
    if (c == '(') {
      advance();
      CycloNum v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      advance();
      long e = 1;
      if (accept('^')) {
        const bool neg = accept('-');
        const int l = line_, col = column_;
        const std::string d = digits();
        if (d.size() > 18) throw ParseError("exponent " + d + " overflows during reduction", l, col);
        e = std::stol(d);
        if (neg) e = -e;
      }
      return CycloNum::zeta(order_, e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r{Integer(digits())};
      if (accept('/')) {
        const int l = line_, col = column_;
        const Integer den(digits());
        if (den == 0) throw ParseError("zero denominator", l, col);
        r /= den;
      }
      return CycloNum(r);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  long order_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

}  // namespace detail

/// Parses one expression in zeta_order.
inline CycloNum parse_expression(std::string_view text, long order) {
  return detail::ExpressionParser(text, order).parse_all();
}

struct MatrixFile {
  long order = 1;
  std::array<CycloNum, 4> entries;  // a, b, c, d as written (not normalized)

  MobiusMap map() const { return MobiusMap(entries[0], entries[1], entries[2], entries[3]); }
};

/// Parses a matrix file; the determinant must be nonzero.
inline MatrixFile parse_matrix_file(std::string_view text) {
  struct Statement {
    std::string_view value;
    int line, column;  // position of the value
  };
  std::map<std::string, Statement> found;
  int line = 1;
  std::size_t i = 0, line_start = 0;
  while (i <= text.size()) {
    // one statement: up to ';', '\n', '#' or end
    std::size_t end = i;
    while (end < text.size() && text[end] != ';' && text[end] != '\n' && text[end] != '#') ++end;
    const std::string_view stmt = text.substr(i, end - i);
    const int col = static_cast<int>(i - line_start) + 1;
    const std::size_t first = stmt.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const int key_col = col + static_cast<int>(first);
      const std::size_t eq = stmt.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line, key_col);
      std::string_view key = stmt.substr(first, eq - first);
      while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.remove_suffix(1);
      const std::string k(key);
      if (k != "order" && k != "a" && k != "b" && k != "c" && k != "d") {
        throw ParseError("unknown key '" + k + "'", line, key_col);
      }
      if (found.count(k)) throw ParseError("duplicate key '" + k + "'", line, key_col);
      found[k] = {stmt.substr(eq + 1), line, col + static_cast<int>(eq) + 1};
    }
    if (end < text.size() && text[end] == '#') {
      while (end < text.size() && text[end] != '\n') ++end;
    }
    if (end < text.size() && text[end] == '\n') {
      ++line;
      line_start = end + 1;
    }
    i = end + 1;
  }
  const auto order_it = found.find("order");
  if (order_it == found.end()) throw ParseError("missing 'order'", line, 1);
  const Statement& os = order_it->second;
  const std::string order_text(os.value);
  const std::size_t b = order_text.find_first_not_of(" \t\r"), e = order_text.find_last_not_of(" \t\r");
  if (b == std::string::npos) throw ParseError("missing order value", os.line, os.column);
  const std::string digits = order_text.substr(b, e - b + 1);
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9) {
    throw ParseError("order must be a positive integer", os.line, os.column + static_cast<int>(b));
  }
  MatrixFile mf;
  mf.order = std::stol(digits);
  if (mf.order < 1) throw ParseError("order must be a positive integer", os.line, os.column + static_cast<int>(b));
  if (mf.order > level_limit()) throw LevelOverflow("order " + digits + " exceeds the level limit");
  const char* keys[4] = {"a", "b", "c", "d"};
  for (int k = 0; k < 4; ++k) {
    const auto it = found.find(keys[k]);
    if (it == found.end()) throw ParseError(std::string("missing '") + keys[k] + "'", line, 1);
    mf.entries[k] = detail::ExpressionParser(it->second.value, mf.order, it->second.line, it->second.column).parse_all();
  }
  const CycloNum det = mf.entries[0] * mf.entries[3] - mf.entries[1] * mf.entries[2];
  if (det.is_zero()) throw DegenerateMap("matrix has zero determinant");
  return mf;
}

/// Renders a matrix file that parses back to the same entries.
inline std::string format_matrix_file(const MatrixFile& mf) {
  std::string out = "order = " + std::to_string(mf.order) + "\n";
  const char* keys[4] = {"a", "b", "c", "d"};
  for (int k = 0; k < 4; ++k) {
    const CycloNum v = mf.entries[k].level() == mf.order ? mf.entries[k] : mf.entries[k].lift(mf.order);
    out += std::string(keys[k]) + " = " + v.to_string("z") + "\n";
  }
  return out;
}

}  // namespace cyclotorsion
