#ifndef QNULL_PARSE_HPP
#define QNULL_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qnull/cpoly.hpp"
#include "qnull/ncpoly.hpp"
#include "qnull/quaternion.hpp"
#include "qnull/rational.hpp"

namespace qnull {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  bool digit_ahead() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Int read_integer() {
    skip_ws();
    if (!digit_ahead()) fail("expected integer");
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    return Int(digits);
  }

  // Digits immediately following the current position, no whitespace skip.
  Int read_adjacent_integer(const std::string& what) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected " + what);
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    return Int(digits);
  }

  Rational read_rational() {
    Int n = read_integer();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      advance();
      Int d = read_adjacent_integer("denominator");
      if (d.is_zero()) fail("zero denominator");
      return Rational(n, d);
    }
    return Rational(n);
  }

  // i/j/k not followed by an identifier character.
  std::optional<int> read_unit() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    char c = text_[pos_];
    int slot = c == 'i' ? 1 : c == 'j' ? 2 : c == 'k' ? 3 : 0;
    if (slot == 0) return std::nullopt;
    if (pos_ + 1 < text_.size()) {
      char next = text_[pos_ + 1];
      if (std::isalnum(static_cast<unsigned char>(next)) || next == '_')
        return std::nullopt;
    }
    advance();
    return slot;
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

inline int checked_index(Scanner& sc, const Int& raw, const std::string& what) {
  if (raw < 1 || raw > 4096) sc.fail(what + " index out of range");
  return static_cast<int>(raw);
}

}  // namespace detail

// Quaternion literal: signed sum of terms `rational [i|j|k]` or bare units,
// e.g. "3/2+1i-2j+0k".
inline Quaternion parse_quaternion(std::string_view text, const QuatAlgebra& alg) {
  detail::Scanner sc(text);
  Quaternion acc = Quaternion::zero(alg);
  bool first = true;
  while (true) {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (sc.accept('+')) {
      sign = 1;
    } else if (!first) {
      break;
    }
    Rational coeff;
    std::optional<int> slot;
    if (sc.digit_ahead()) {
      coeff = sc.read_rational();
      slot = sc.read_unit();
    } else {
      slot = sc.read_unit();
      if (!slot) sc.fail("expected quaternion term");
      coeff = 1;
    }
    if (sign < 0) coeff = -coeff;
    Quaternion term = Quaternion::zero(alg);
    term = Quaternion(alg, slot.value_or(0) == 0 ? coeff : Rational(0),
                      slot.value_or(0) == 1 ? coeff : Rational(0),
                      slot.value_or(0) == 2 ? coeff : Rational(0),
                      slot.value_or(0) == 3 ? coeff : Rational(0));
    acc = add(acc, term);
    first = false;
  }
  if (!sc.eof()) sc.fail("trailing input after quaternion literal");
  return acc;
}

namespace detail {

// expr := ['-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := primary ('^' posint)*
// primary := quat-atom | 'x'<idx> | '(' expr ')'
class NcParser {
 public:
  NcParser(std::string_view text, const QuatAlgebra& alg, int nvars)
      : sc_(text), alg_(alg), nvars_(nvars) {}

  NcPoly parse() {
    NcPoly f = expr();
    if (!sc_.eof()) sc_.fail("trailing input");
    return f;
  }

 private:
  NcPoly expr() {
    bool negate = sc_.accept('-');
    NcPoly acc = term();
    if (negate) acc = neg(acc);
    while (true) {
      if (sc_.accept('+')) {
        acc = add(acc, term());
      } else if (sc_.accept('-')) {
        acc = sub(acc, term());
      } else {
        break;
      }
    }
    return acc;
  }

  NcPoly term() {
    NcPoly acc = factor();
    while (sc_.accept('*')) acc = mul_poly(acc, factor());
    return acc;
  }

  NcPoly factor() {
    NcPoly base = primary();
    while (sc_.accept('^')) {
      Int e = sc_.read_integer();
      if (e < 1) sc_.fail("exponent must be a positive integer");
      if (e > 64) sc_.fail("exponent too large");
      base = pow_nc(base, static_cast<int>(e));
    }
    return base;
  }

  NcPoly primary() {
    if (sc_.accept('(')) {
      NcPoly inner = expr();
      sc_.expect(')');
      return inner;
    }
    char c = sc_.peek();
    if (c == 'x') {
      sc_.expect('x');
      int idx = checked_index(sc_, sc_.read_adjacent_integer("variable index"), "variable");
      if (idx > nvars_) sc_.fail("variable index out of range");
      return NcPoly::variable(alg_, nvars_, idx);
    }
    if (sc_.digit_ahead()) {
      Rational coeff = sc_.read_rational();
      std::optional<int> slot = sc_.read_unit();
      Quaternion q = slot ? scale(coeff, Quaternion::basis_unit(alg_, *slot))
                          : Quaternion::scalar(alg_, coeff);
      return NcPoly::constant(alg_, nvars_, q);
    }
    if (std::optional<int> slot = sc_.read_unit())
      return NcPoly::constant(alg_, nvars_, Quaternion::basis_unit(alg_, *slot));
    sc_.fail("expected a constant, variable, or '('");
  }

  Scanner sc_;
  QuatAlgebra alg_;
  int nvars_;
};

// Commutative variable classes: y<i>_<j>, z<t>, w<t>, t<t>.
inline std::optional<std::string> scan_cvar(Scanner& sc) {
  char c = sc.peek();
  if (c != 'y' && c != 'z' && c != 'w' && c != 't') return std::nullopt;
  sc.expect(c);
  std::string name(1, c);
  Int first = sc.read_adjacent_integer("variable index");
  name += first.str();
  if (c == 'y') {
    sc.expect('_');
    name += '_';
    Int slot = sc.read_adjacent_integer("coordinate slot");
    name += slot.str();
  }
  return name;
}

class CParser {
 public:
  CParser(std::string_view text, std::vector<std::string> vars)
      : sc_(text), vars_(std::move(vars)) {}

  CPoly parse() {
    CPoly f = expr();
    if (!sc_.eof()) sc_.fail("trailing input");
    return f;
  }

 private:
  CPoly expr() {
    bool negate = sc_.accept('-');
    CPoly acc = term();
    if (negate) acc = neg_c(acc);
    while (true) {
      if (sc_.accept('+')) {
        acc = add_c(acc, term());
      } else if (sc_.accept('-')) {
        acc = sub_c(acc, term());
      } else {
        break;
      }
    }
    return acc;
  }

  CPoly term() {
    CPoly acc = factor();
    while (sc_.accept('*')) acc = mul_c(acc, factor());
    return acc;
  }

  CPoly factor() {
    CPoly base = primary();
    while (sc_.accept('^')) {
      Int e = sc_.read_integer();
      if (e < 1) sc_.fail("exponent must be a positive integer");
      if (e > 256) sc_.fail("exponent too large");
      base = pow_c(base, static_cast<int>(e));
    }
    return base;
  }

  CPoly primary() {
    if (sc_.accept('(')) {
      CPoly inner = expr();
      sc_.expect(')');
      return inner;
    }
    if (sc_.digit_ahead())
      return CPoly::constant(vars_, sc_.read_rational());
    if (std::optional<std::string> name = scan_cvar(sc_)) {
      if (std::find(vars_.begin(), vars_.end(), *name) == vars_.end())
        sc_.fail("unknown variable " + *name);
      return CPoly::variable(vars_, *name);
    }
    sc_.fail("expected a coefficient, variable, or '('");
  }

  Scanner sc_;
  std::vector<std::string> vars_;
};

}  // namespace detail

inline NcPoly parse_ncpoly(std::string_view text, const QuatAlgebra& alg, int nvars) {
  return detail::NcParser(text, alg, nvars).parse();
}

inline CPoly parse_cpoly(std::string_view text, std::vector<std::string> vars) {
  return detail::CParser(text, std::move(vars)).parse();
}

// Collect the variables mentioned in a cpoly expression, in canonical order:
// y-class by (argument, slot), then z, w, t classes by index.
inline std::vector<std::string> infer_cpoly_vars(std::string_view text) {
  // (class rank, first index, second index, name)
  std::vector<std::tuple<int, long, long, std::string>> found;
  detail::Scanner sc(text);
  while (!sc.eof()) {
    char c = sc.peek();
    if (c == 'y' || c == 'z' || c == 'w' || c == 't') {
      std::optional<std::string> name = detail::scan_cvar(sc);
      int rank = c == 'y' ? 0 : c == 'z' ? 1 : c == 'w' ? 2 : 3;
      std::size_t us = name->find('_');
      long first = std::stol(name->substr(1, us == std::string::npos
                                                 ? std::string::npos
                                                 : us - 1));
      long second = us == std::string::npos ? 0 : std::stol(name->substr(us + 1));
      found.emplace_back(rank, first, second, *name);
    } else {
      // Consume one non-variable token.
      if (sc.digit_ahead()) {
        sc.read_rational();
      } else if (!sc.accept('+') && !sc.accept('-') && !sc.accept('*') &&
                 !sc.accept('^') && !sc.accept('(') && !sc.accept(')')) {
        sc.fail("unexpected character in polynomial");
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::string> vars;
  vars.reserve(found.size());
  for (auto& [r, a, b, name] : found) vars.push_back(std::move(name));
  return vars;
}

}  // namespace qnull

#endif  // QNULL_PARSE_HPP
