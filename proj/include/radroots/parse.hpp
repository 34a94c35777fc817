#pragma once

// Text form of polynomials: a whitespace-insensitive sum of terms in one
// variable with integer or rational coefficients, e.g.
//   "x^3 - 6x - 9", "y^4 + 3y^3 + 4y^2 + 3y + 1", "1/2x^2 - 3", "-x + 7".
// Coefficients may be written "3", "3/2"; juxtaposition or '*' attaches the
// variable; '^' takes a non-negative integer exponent.  Like terms combine.
// Errors carry the byte position; a second distinct variable symbol raises
// MixedVariables.
//
// polynomial_to_string (polynomial.hpp) renders the canonical form;
// parse(canonical(p)) == p and canonical is a fixed point of the round trip.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radroots/errors.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/rational.hpp"

namespace radroots {

/// A parsed polynomial with its concrete variable symbol ("x" when the
/// expression is constant).
struct PolySource {
  Polynomial poly;
  std::string variable = "x";
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  PolySource run() {
    std::map<int, Rational> terms;
    skip_spaces();
    if (at_end()) throw ParseError("empty polynomial expression", pos_);
    bool first = true;
    while (true) {
      skip_spaces();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_spaces();
        if (at_end()) throw ParseError("dangling sign at end of expression", pos_);
      } else if (!first) {
        if (variable_ && std::isalpha(static_cast<unsigned char>(peek())) &&
            std::string(1, peek()) != *variable_) {
          throw MixedVariables("expression mixes variables '" + *variable_ + "' and '" +
                                   std::string(1, peek()) + "'",
                               pos_);
        }
        throw ParseError(std::string("expected '+' or '-' before '") + peek() + "'", pos_);
      }
      auto [degree, coefficient] = parse_term();
      terms[degree] += sign * coefficient;
      first = false;
    }
    int max_degree = 0;
    for (const auto& [degree, value] : terms) max_degree = std::max(max_degree, degree);
    std::vector<Rational> coeffs(static_cast<std::size_t>(max_degree) + 1, Rational(0));
    for (const auto& [degree, value] : terms) coeffs[static_cast<std::size_t>(degree)] = value;
    PolySource out;
    out.poly = Polynomial(std::move(coeffs));
    if (variable_) out.variable = *variable_;
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  /// term := coefficient [ '*'? variable [ '^' integer ] ] | variable [ '^' integer ]
  std::pair<int, Rational> parse_term() {
    Rational coefficient(1);
    bool saw_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_rational();
      saw_coefficient = true;
      skip_spaces();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_spaces();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
          throw ParseError("expected a variable after '*'", pos_);
        }
      }
    }
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      check_variable();
      int degree = 1;
      skip_spaces();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_spaces();
        degree = parse_exponent();
      }
      return {degree, coefficient};
    }
    if (!saw_coefficient) {
      throw ParseError(std::string("expected a term, found '") + peek() + "'", pos_);
    }
    return {0, coefficient};
  }

  Rational parse_rational() {
    const Integer numerator_value = parse_integer();
    skip_spaces();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_spaces();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a denominator after '/'", pos_);
      }
      const std::size_t den_pos = pos_;
      const Integer denominator_value = parse_integer();
      if (denominator_value == 0) throw ParseError("zero denominator", den_pos);
      return Rational(numerator_value, denominator_value);
    }
    return Rational(numerator_value);
  }

  Integer parse_integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a digit", pos_);
    }
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    return Integer(digits);
  }

  int parse_exponent() {
    const std::size_t start = pos_;
    const Integer value = parse_integer();
    if (value > 1000) throw ParseError("exponent too large", start);
    return value.convert_to<int>();
  }

  void check_variable() {
    const std::string symbol(1, peek());
    ++pos_;
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      // Two adjacent letters: either a multi-letter name (unsupported) or an
      // implicit product of variables (also unsupported).
      throw ParseError("variables are single letters; found adjacent letters", pos_);
    }
    if (!variable_) {
      variable_ = symbol;
    } else if (*variable_ != symbol) {
      throw MixedVariables("expression mixes variables '" + *variable_ + "' and '" + symbol + "'",
                           pos_ - 1);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::string> variable_;
};

}  // namespace detail

/// Parses the textual polynomial form.  Throws ParseError / MixedVariables.
inline PolySource parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).run();
}

}  // namespace radroots
