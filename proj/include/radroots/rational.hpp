#pragma once

// Exact rational scalar type and helpers.
//
// Rational is boost::multiprecision::cpp_rational: arbitrary-precision,
// always stored in lowest terms with a positive denominator, with exact
// field arithmetic and total ordering.  The helpers below add the textual
// format used throughout the library ("num" or "num/den"), exponentiation,
// and the height measure used to describe test corpora.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "radroots/errors.hpp"

namespace radroots {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// num/den with the sign normalised into the numerator (the underlying
/// constructor requires a positive denominator).  Throws ParseError on a
/// zero denominator.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw ParseError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

/// Parses "num" or "num/den" (optional leading '-').  Throws ParseError on
/// malformed text or a zero denominator.
inline Rational rational_from_string(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

/// Formats as "num" for integers, "num/den" otherwise (denominator positive).
inline std::string rational_to_string(const Rational& r) {
  return r.str();
}

inline double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// r^k for k >= 0 (square-and-multiply; exact).
inline Rational rational_pow(const Rational& r, unsigned k) {
  Rational result(1);
  Rational base = r;
  while (k != 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

/// max(|numerator|, denominator): the size measure used for random corpora.
inline Integer rational_height(const Rational& r) {
  Integer num = numerator(r);
  if (num < 0) num = -num;
  const Integer den = denominator(r);
  return num > den ? num : den;
}

/// n-choose-k as an exact integer (0 when k out of range).
inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result(1);
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

}  // namespace radroots
