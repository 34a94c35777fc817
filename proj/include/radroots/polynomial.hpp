#pragma once

// Dense univariate polynomials over exact rationals.
//
// Coefficients are stored in ascending degree order with no trailing zeros;
// the zero polynomial is the empty sequence and has no degree (operations
// that need one throw DegreeTooLow).  All ring operations are exact; numeric
// evaluation converts each coefficient to double at evaluation time and runs
// Horner's scheme in complex doubles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/rational.hpp"

namespace radroots {

class Polynomial {
 public:
  Polynomial() = default;

  /// Takes coefficients in ascending degree order; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coefficients)
      : coeffs_(std::move(coefficients)) {
    normalize();
  }

  static Polynomial zero() { return Polynomial(); }

  static Polynomial constant(Rational value) {
    return Polynomial(std::vector<Rational>{std::move(value)});
  }

  /// coefficient * x^degree
  static Polynomial monomial(int degree, Rational coefficient = Rational(1)) {
    if (degree < 0) throw PreconditionError("monomial degree must be >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coefficient);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial; the zero polynomial has none.
  int degree() const {
    if (coeffs_.empty()) throw DegreeTooLow("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
  }

  /// Coefficient of x^k (zero outside the stored range).
  const Rational& coeff(int k) const {
    static const Rational kZero(0);
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Leading coefficient (nonzero by the class invariant).
  const Rational& lead() const {
    if (coeffs_.empty()) throw DegreeTooLow("the zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Horner evaluation in complex doubles (coefficients converted at call time).
  Complex eval(const Complex& x) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Complex(rational_to_double(*it), 0.0);
    }
    return acc;
  }

  /// Exact evaluation at a rational point.
  Rational eval_exact(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  /// Coefficient sequence reads the same in both directions.
  /// The zero polynomial and constants are trivially palindromic.
  bool is_palindromic() const {
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
      if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    }
    return true;
  }

  Polynomial operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return Polynomial();
    std::vector<Rational> c = p.coeffs_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

  bool operator==(const Polynomial& other) const = default;

  /// Euclidean division: returns (quotient, remainder) with
  /// *this == quotient * divisor + remainder and deg(remainder) < deg(divisor).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroPolynomial("division by the zero polynomial");
    if (is_zero() || coeffs_.size() < divisor.coeffs_.size()) {
      return {Polynomial(), *this};
    }
    std::vector<Rational> rem = coeffs_;
    const std::size_t dn = divisor.coeffs_.size();
    std::vector<Rational> quot(coeffs_.size() - dn + 1, Rational(0));
    const Rational& dlead = divisor.coeffs_.back();
    for (std::size_t i = coeffs_.size(); i >= dn; --i) {
      const std::size_t pos = i - 1;  // leading coefficient position being cleared
      const Rational factor = rem[pos] / dlead;
      if (factor != 0) {
        quot[pos - dn + 1] = factor;
        for (std::size_t j = 0; j < dn; ++j) {
          rem[pos - dn + 1 + j] -= factor * divisor.coeffs_[j];
        }
      }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;  // ascending degree; empty = zero
};

/// Result of removing the subleading term: q(x) = p(x + shift) / lead(p) is
/// monic with no x^(deg-1) term, and r is a root of q iff r + shift is a root
/// of p.
struct DepressedForm {
  Polynomial poly;
  Rational shift;
};

/// Removes the x^(deg-1) term by the exact Taylor shift x -> x + shift with
/// shift = -a_(n-1) / (n * a_n), then scales monic.  Requires degree >= 2.
inline DepressedForm depress(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) {
    throw DegreeTooLow("depression requires degree >= 2");
  }
  const int n = p.degree();
  const Rational shift = -p.coeff(n - 1) / (Rational(n) * p.lead());
  // Repeated synthetic division computes the Taylor coefficients of
  // p(x + shift) exactly.
  std::vector<Rational> work = p.coeffs();
  std::vector<Rational> shifted(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    for (int i = n - 1; i >= k; --i) {
      work[static_cast<std::size_t>(i)] += shift * work[static_cast<std::size_t>(i) + 1];
    }
    shifted[static_cast<std::size_t>(k)] = work[static_cast<std::size_t>(k)];
  }
  const Rational lead = p.lead();
  for (auto& c : shifted) c /= lead;
  return DepressedForm{Polynomial(std::move(shifted)), shift};
}

/// Residual scale at a point: sum_k |c_k| * max(1, |x|)^k.  A residual below
/// tol * scale means the point is a root to relative working precision tol.
inline double residual_scale(const Polynomial& p, const Complex& x) {
  const double base = std::max(1.0, std::abs(x));
  double scale = 0.0;
  double power = 1.0;
  for (const Rational& c : p.coeffs()) {
    scale += std::abs(rational_to_double(c)) * power;
    power *= base;
  }
  return scale;
}

/// |p(x)| in doubles.
inline double residual_at(const Polynomial& p, const Complex& x) {
  return std::abs(p.eval(x));
}

/// Canonical text form: descending degree, "-" folded into the term
/// separators, coefficient 1 omitted before the variable, exponent 1 and 0
/// folded away.  Examples: "x^3 - 6x - 9", "3/2x^2 + 1", "0".
inline std::string polynomial_to_string(const Polynomial& p, const std::string& variable = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = (magnitude == 1);
    if (!unit || k == 0) out += rational_to_string(magnitude);
    if (k > 0) {
      out += variable;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << polynomial_to_string(p);
}

}  // namespace radroots
