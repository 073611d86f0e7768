#pragma once

#include <cctype>
#include <map>
#include <string>

#include "logfw/error.hpp"
#include "logfw/ring/polynomial.hpp"

namespace logfw::ring {

// Recursive-descent parser for
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// Identifiers are ring variables or entries of `constants` (base-field symbols).
template <class C>
class PolynomialParser {
 public:
  using Elem = typename C::Element;
  using Poly = Polynomial<C>;

  PolynomialParser(const PolyRing<C>& ring, std::map<std::string, Elem> constants = {})
      : ring_(ring), constants_(std::move(constants)) {}

  Poly parse(const std::string& text) {
    text_ = text;
    pos_ = 0;
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Poly out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) acc = ring_.add(acc, term());
      else if (accept('-')) acc = ring_.sub(acc, term());
      else return acc;
    }
  }
  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = ring_.mul(acc, factor());
    return acc;
  }
  Poly factor() {
    if (accept('-')) return ring_.neg(factor());
    return power();
  }
  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      const std::int64_t e = integer();
      if (e > 10000) {
        pos_ = start;
        fail("exponent too large");
      }
      return ring_.pow(base, static_cast<std::uint64_t>(e));
    }
    return base;
  }
  std::int64_t integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 100000000000000LL) fail("integer literal too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return v;
  }
  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.from_int(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      const auto& names = ring_.names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return ring_.variable(static_cast<int>(i));
      auto it = constants_.find(name);
      if (it != constants_.end()) return ring_.constant(it->second);
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRing<C>& ring_;
  std::map<std::string, Elem> constants_;
  std::string text_;
  std::size_t pos_ = 0;
};

template <class C>
Polynomial<C> parse_polynomial(const PolyRing<C>& ring, const std::string& text,
                               std::map<std::string, typename C::Element> constants = {}) {
  return PolynomialParser<C>(ring, std::move(constants)).parse(text);
}

}  // namespace logfw::ring
