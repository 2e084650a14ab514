#pragma once

// Polynomial text grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// Whitespace is insignificant; implicit multiplication is rejected.

#include <cctype>
#include <string>
#include <string_view>

#include "nodal/polynomial.hpp"

namespace nodal {

template <class F>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, RingPtr<F> ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial<F> parse() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty polynomial");
    auto p = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
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

  Polynomial<F> expr() {
    auto acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    auto acc = unary();
    while (accept('*')) acc *= unary();
    skip_space();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                                text_[pos_] == '_')) {
      throw SyntaxError(pos_, "implicit multiplication is not allowed");
    }
    return acc;
  }

  Polynomial<F> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    auto base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError(pos_, "exponent must be a non-negative integer");
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto digits = std::string(text_.substr(start, pos_ - start));
      if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) throw SyntaxError(start, "exponent too large");
      return base.pow(static_cast<unsigned>(std::stoi(digits)));
    }
    return base;
  }

  Polynomial<F> atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial<F>::constant(ring_, ring_->field().from_mpz(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int idx = ring_->index_of(name);
      if (idx < 0) throw Error(ErrorKind::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
      return Polynomial<F>::variable(ring_, idx);
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return PolynomialParser<F>(text, ring).parse();
}

}  // namespace nodal
