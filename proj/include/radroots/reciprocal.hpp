#pragma once

// Palindromic (reciprocal) polynomials: factorisation into unit quadratics
// y^2 + alpha y + 1, the substitution equation in u, trinomial specials,
// arc-division values, and the partial-fraction / antiderivative layer for
// 1 / (y^(2n) + p y^n + 1).
//
// Basis: V_0 = 2, V_1 = u, V_k = u V_(k-1) - V_(k-2); V_k(y + 1/y) equals
// y^k + y^(-k).  For a monic palindrome p of degree 2n the alpha values of
// its factors y^2 + alpha_i y + 1 are exactly the roots of
//   U(u) = sum_{j=1..n} (-1)^(n-j) c_(n+j) V_j(u) + (-1)^n c_n,
// a monic degree-n polynomial (the alternating signs orient the equation so
// the roots are +alpha, matching the classical printed tables).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/oracle.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/radical.hpp"
#include "radroots/rational.hpp"
#include "radroots/resolvent.hpp"

namespace radroots {

/// V_k of the recurrence V_0 = 2, V_1 = u, V_k = u V_(k-1) - V_(k-2).
/// V_k(y + 1/y) = y^k + y^(-k).
inline Polynomial half_angle_basis(int k) {
  if (k < 0) throw PreconditionError("half_angle_basis requires k >= 0");
  Polynomial prev = Polynomial::constant(Rational(2));
  if (k == 0) return prev;
  Polynomial current = Polynomial::monomial(1);
  const Polynomial u = Polynomial::monomial(1);
  for (int i = 2; i <= k; ++i) {
    Polynomial next = u * current - prev;
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

/// The degree-n equation whose roots are the alpha values of the
/// unit-quadratic factors of p; its variable is u = -(y + 1/y), which is the
/// orientation the classical tables print.  Requires p monic, palindromic,
/// of even degree >= 2.
inline Polynomial u_equation(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) throw DegreeTooLow("u_equation requires degree >= 2");
  if (!p.is_palindromic()) throw NotPalindromic("u_equation requires a palindromic polynomial");
  if (p.degree() % 2 != 0) throw OddDegree("u_equation requires even degree");
  if (!p.is_monic()) throw NotMonic("u_equation requires a monic polynomial");
  const int n = p.degree() / 2;
  Polynomial result;
  for (int j = 1; j <= n; ++j) {
    const Rational sign = ((n - j) % 2 == 0) ? Rational(1) : Rational(-1);
    result = result + sign * p.coeff(n + j) * half_angle_basis(j);
  }
  const Rational middle_sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  result = result + Polynomial::constant(middle_sign * p.coeff(n));
  return result;
}

/// u-equation of the trinomial y^(2n) + p y^n + 1 without expanding it:
/// V_n(u) + (-1)^n p.  Agrees exactly with u_equation of the expanded
/// trinomial; for even n the constant term is p + V_n(0) (e.g. p + 2 at
/// n = 4).  Requires n >= 1.
inline Polynomial trinomial_u_equation(int n, const Rational& p) {
  if (n < 1) throw PreconditionError("trinomial u-equation requires n >= 1");
  const Rational signed_p = (n % 2 == 0) ? p : -p;
  return half_angle_basis(n) + Polynomial::constant(signed_p);
}

/// Arc-division values alpha_k = -2 cos((phi + 2 pi k)/n), k = 0..n-1, with
/// cos(phi) = -p/2 (complex arccos once |p| > 2).  These are the roots of
/// trinomial_u_equation(n, p).
inline std::vector<Complex> arc_division_alphas(int n, const Rational& p) {
  if (n < 1) throw PreconditionError("arc division requires n >= 1");
  constexpr double two_pi = 6.283185307179586476925286766559005768;
  const Complex phi = std::acos(Complex(-rational_to_double(p) / 2.0, 0.0));
  std::vector<Complex> alphas;
  alphas.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Complex theta = (phi + Complex(two_pi * static_cast<double>(k), 0.0)) /
                          Complex(static_cast<double>(n), 0.0);
    alphas.push_back(-2.0 * std::cos(theta));
  }
  return alphas;
}

/// One unit-quadratic factor y^2 + alpha y + 1.
struct QuadraticFactor {
  Complex alpha;
  std::optional<Rational> exact_alpha;       // set when alpha is exactly rational
  std::optional<RadicalExpr> closed_form;    // radical tree for alpha when available
};

struct ReciprocalFactorization {
  Polynomial source;
  int unit_multiplicity = 0;   // number of (y + 1) factors removed (odd-degree input)
  Polynomial u_poly;           // u-equation of the even palindromic part
  std::vector<QuadraticFactor> factors;
};

namespace detail {

/// Tries to identify `value` as an exact rational root of `poly`: a nearby
/// small-denominator candidate is produced by continued fractions and then
/// verified by exact substitution.  Only exact zeros are accepted.
inline std::optional<Rational> try_exact_rational_root(const Polynomial& poly,
                                                       const Complex& value) {
  if (std::abs(value.imag()) > 1e-9) return std::nullopt;
  const double x = value.real();
  // Continued-fraction convergents of x with denominators up to 1e6:
  // h(-2) = 0, h(-1) = 1 for numerators and k(-2) = 1, k(-1) = 0 for
  // denominators, then h(i) = a(i) h(i-1) + h(i-2) and likewise for k.
  long long p_prev = 0, q_prev = 1;
  long long p_curr = 1, q_curr = 0;
  double remainder = x;
  for (int step = 0; step < 40; ++step) {
    const double floor_value = std::floor(remainder);
    if (floor_value > 9e17 || floor_value < -9e17) break;
    const long long digit = static_cast<long long>(floor_value);
    const long long p_next = digit * p_curr + p_prev;
    const long long q_next = digit * q_curr + q_prev;
    if (q_next > 1000000 || q_next <= 0) break;
    p_prev = p_curr; q_prev = q_curr;
    p_curr = p_next; q_curr = q_next;
    const Rational candidate = make_rational(Integer(p_curr), Integer(q_curr));
    if (std::abs(rational_to_double(candidate) - x) < 1e-7 &&
        poly.eval_exact(candidate) == 0) {
      return candidate;
    }
    const double fraction = remainder - floor_value;
    if (fraction < 1e-12) break;
    remainder = 1.0 / fraction;
  }
  return std::nullopt;
}

}  // namespace detail

/// Factors a monic palindromic polynomial into (y + 1)^m times unit
/// quadratics y^2 + alpha_i y + 1.  Odd degree divides out one (y + 1)
/// (always possible for palindromes) before the u-equation step.  The alpha
/// values are the u-equation roots: closed forms via the resolvent solver
/// for half-degree <= 4, numeric via the oracle beyond.  Half-degree above
/// `max_half_degree` is rejected.
inline ReciprocalFactorization factor_reciprocal(const Polynomial& p,
                                                 int max_half_degree = 16) {
  if (p.is_zero() || p.degree() < 1) throw DegreeTooLow("factoring requires degree >= 1");
  if (!p.is_palindromic()) throw NotPalindromic("input is not palindromic");
  if (!p.is_monic()) throw NotMonic("factoring requires a monic polynomial");

  ReciprocalFactorization result;
  result.source = p;
  Polynomial even_part = p;
  const Polynomial unit = Polynomial({Rational(1), Rational(1)});  // y + 1
  while (!even_part.is_zero() && even_part.degree() % 2 == 1) {
    auto [quotient, remainder] = even_part.divmod(unit);
    if (!remainder.is_zero()) {
      throw NotPalindromic("odd-degree palindrome failed to divide by y + 1");
    }
    even_part = std::move(quotient);
    ++result.unit_multiplicity;
  }

  if (even_part.degree() == 0) {
    result.u_poly = Polynomial::constant(Rational(1));
    return result;
  }

  const int n = even_part.degree() / 2;
  if (n > max_half_degree) {
    throw PreconditionError("half-degree exceeds the configured bound");
  }
  result.u_poly = u_equation(even_part);

  if (n <= 4) {
    const ResolventReport report = solve_closed_form(result.u_poly);
    for (const auto& cert : report.roots) {
      QuadraticFactor factor;
      factor.alpha = cert.numeric;
      factor.closed_form = cert.closed_form;
      factor.exact_alpha = detail::try_exact_rational_root(result.u_poly, cert.numeric);
      result.factors.push_back(std::move(factor));
    }
  } else {
    for (const Complex& root : find_roots_numeric(result.u_poly)) {
      QuadraticFactor factor;
      factor.alpha = root;
      factor.exact_alpha = detail::try_exact_rational_root(result.u_poly, root);
      result.factors.push_back(std::move(factor));
    }
  }
  return result;
}

/// One simple-pole pair term (lin_coeff * y + const_coeff)/(y^2 + alpha y + 1)
/// of the decomposition of 1 / (y^(2n) + p y^n + 1).
struct PartialFractionTerm {
  Complex alpha;
  Complex lin_coeff;
  Complex const_coeff;
};

/// Partial fractions of 1 / (y^(2n) + p y^n + 1) over the unit quadratics,
/// by residue evaluation at each factor's two roots.  Requires the factors
/// pairwise distinct with no degenerate (alpha = +-2) factor; p = +-2 is the
/// standard way to violate that.  n = 1 returns the identity decomposition.
inline std::vector<PartialFractionTerm> partial_fractions(int n, const Rational& p) {
  if (n < 1) throw PreconditionError("partial fractions require n >= 1");
  if (n == 1) {
    return {PartialFractionTerm{Complex(rational_to_double(p), 0.0), Complex(0.0, 0.0),
                                Complex(1.0, 0.0)}};
  }
  const std::vector<Complex> alphas = arc_division_alphas(n, p);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (std::abs(std::abs(alphas[i]) - 2.0) < 1e-8) {
      throw RepeatedFactor("a factor has a double root (|alpha| = 2)");
    }
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      if (std::abs(alphas[i] - alphas[j]) < 1e-8) {
        throw RepeatedFactor("two quadratic factors coincide");
      }
    }
  }

  const double pd = rational_to_double(p);
  const auto derivative = [&](const Complex& y) {
    // D(y) = y^(2n) + p y^n + 1  =>  D'(y) = 2n y^(2n-1) + p n y^(n-1)
    Complex y_pow_n1(1.0, 0.0);  // y^(n-1)
    for (int i = 0; i < n - 1; ++i) y_pow_n1 *= y;
    const Complex y_pow_n = y_pow_n1 * y;
    return static_cast<double>(2 * n) * y_pow_n1 * y_pow_n +
           pd * static_cast<double>(n) * y_pow_n1;
  };

  std::vector<PartialFractionTerm> terms;
  terms.reserve(alphas.size());
  for (const Complex& alpha : alphas) {
    const auto [y_plus, y_minus] =
        detail::quadratic_roots_sum_product(-alpha, Complex(1.0, 0.0));
    const Complex r_plus = 1.0 / derivative(y_plus);
    const Complex r_minus = 1.0 / derivative(y_minus);
    PartialFractionTerm term;
    term.alpha = alpha;
    term.lin_coeff = r_plus + r_minus;
    term.const_coeff = -(r_plus * y_minus + r_minus * y_plus);
    terms.push_back(term);
  }
  return terms;
}

enum class QuadratureKind { circle, hyperbola };

/// Antiderivative descriptor of one partial-fraction term:
///   F(y) = log_coeff * log(y^2 + alpha y + 1) + amplitude * G((2y + alpha)/scale)
/// with G = arctan, scale = sqrt(4 - alpha^2)      when |alpha| < 2 (circle),
///      G = artanh, scale = sqrt(alpha^2 - 4)      when |alpha| > 2 (hyperbola).
struct AntiderivativeTerm {
  Complex alpha;
  Complex log_coeff;
  QuadratureKind kind = QuadratureKind::circle;
  Complex amplitude;
  Complex scale;
};

/// Maps each term to its antiderivative descriptor.  |alpha| within 1e-12 of
/// 2 is rejected (the quadratic degenerates).
inline std::vector<AntiderivativeTerm> antiderivative_terms(
    const std::vector<PartialFractionTerm>& terms) {
  std::vector<AntiderivativeTerm> out;
  out.reserve(terms.size());
  for (const auto& term : terms) {
    const double magnitude = std::abs(term.alpha);
    if (std::abs(magnitude - 2.0) < 1e-12) {
      throw BoundaryAlpha("|alpha| = 2: the arctan/artanh split degenerates");
    }
    AntiderivativeTerm a;
    a.alpha = term.alpha;
    a.log_coeff = term.lin_coeff / 2.0;
    const Complex residue_part = 2.0 * term.const_coeff - term.lin_coeff * term.alpha;
    if (magnitude < 2.0) {
      a.kind = QuadratureKind::circle;
      a.scale = std::sqrt(4.0 - term.alpha * term.alpha);
      a.amplitude = residue_part / a.scale;
    } else {
      a.kind = QuadratureKind::hyperbola;
      a.scale = std::sqrt(term.alpha * term.alpha - 4.0);
      a.amplitude = -residue_part / a.scale;
    }
    out.push_back(a);
  }
  return out;
}

/// Value of the antiderivative descriptor at y (used by verification).
inline Complex antiderivative_value(const AntiderivativeTerm& term, const Complex& y) {
  const Complex quadratic = y * y + term.alpha * y + Complex(1.0, 0.0);
  const Complex argument = (2.0 * y + term.alpha) / term.scale;
  const Complex inverse_part = (term.kind == QuadratureKind::circle)
                                   ? std::atan(argument)
                                   : std::atanh(argument);
  return term.log_coeff * std::log(quadratic) + term.amplitude * inverse_part;
}

/// Value of one partial-fraction term at y.
inline Complex term_value(const PartialFractionTerm& term, const Complex& y) {
  return (term.lin_coeff * y + term.const_coeff) /
         (y * y + term.alpha * y + Complex(1.0, 0.0));
}

}  // namespace radroots
