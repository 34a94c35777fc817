#pragma once

// Closed-form root extraction through resolvent equations.
//
// Families (all depressed, written with the unknown isolated):
//   cubic    x^3 = a x + b   -> quadratic resolvent  z^2 = b z - a^3/27,
//            roots x = cbrt(A) + cbrt(B) with cbrt(A)*cbrt(B) = a/3;
//   quartic  x^4 = a x^2 + b x + c
//            -> cubic resolvent z^3 = (a/2) z^2 - ((4c + a^2)/16) z + b^2/64,
//            roots x = sqrt(A) + sqrt(B) + sqrt(C) with
//            sqrt(A)*sqrt(B)*sqrt(C) = b/8 and the sign-flip companions;
//   the "squared" quartic variant runs through the degree-3 equation whose
//   roots are the squares of A, B, C and writes roots with fourth roots.
//
// Every root comes with a certificate: the radical tree, its numeric value,
// and the residual |p(value)|.  Numeric values are computed along a
// cancellation-free path (larger resolvent root by sign choice, companion
// radical via the exact product constraint); the tree records the branch
// index that equals the companion exactly, so tree and value agree by
// construction rather than by floating-point luck.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/oracle.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/radical.hpp"
#include "radroots/rational.hpp"

namespace radroots {

enum class Method {
  linear,
  quadratic,
  cubic_resolvent,
  quartic_resolvent,
  quartic_squared_resolvent,
  moivre,
  reciprocal,
  numeric,
};

inline const char* method_tag(Method m) {
  switch (m) {
    case Method::linear: return "linear";
    case Method::quadratic: return "quadratic";
    case Method::cubic_resolvent: return "cubic-resolvent";
    case Method::quartic_resolvent: return "quartic-resolvent";
    case Method::quartic_squared_resolvent: return "quartic-squared-resolvent";
    case Method::moivre: return "moivre";
    case Method::reciprocal: return "reciprocal";
    case Method::numeric: return "numeric";
  }
  return "unknown";
}

/// One certified root: the radical tree, its numeric value, and the residual
/// of the source polynomial at that value.
struct RootCertificate {
  RadicalExpr closed_form;
  Complex numeric;
  double residual = 0.0;
};

/// Full account of one closed-form solve.
struct ResolventReport {
  Method method = Method::numeric;
  Polynomial source;                    // the polynomial the residuals refer to
  Polynomial resolvent;                 // auxiliary equation (of the depressed form)
  std::vector<Complex> resolvent_roots;
  std::vector<RootCertificate> roots;   // one per source root, multiplicity included
  std::vector<std::string> diagnostics;
};

namespace detail {

/// Both roots of z^2 - s z + q, larger magnitude first, computed without the
/// cancelling subtraction (sign-adjusted sqrt plus the product identity).
inline std::pair<Complex, Complex> quadratic_roots_sum_product(const Complex& s,
                                                               const Complex& q) {
  // nth_root, not std::sqrt: products of real values can carry a negative-zero
  // imaginary part, and std::sqrt would then land on the other side of the
  // branch cut than the radical-tree evaluation does.
  const Complex d = nth_root(s * s - 4.0 * q, 2, 0);
  const Complex plus = s + d;
  const Complex minus = s - d;
  const Complex larger = (std::abs(plus) >= std::abs(minus)) ? plus / 2.0 : minus / 2.0;
  if (larger == Complex(0.0, 0.0)) return {larger, larger};  // s = q = 0
  return {larger, q / larger};
}

/// Radical tree for a root of z^2 - s z + q with rational s, q:
/// (s +- sqrt(s^2 - 4q)) / 2.  `positive_branch` picks the sign of the sqrt.
inline RadicalExpr quadratic_root_expr(const Rational& s, const Rational& q,
                                       bool positive_branch) {
  const Rational disc = s * s - Rational(4) * q;
  RadicalExpr sqrt_disc = RadicalExpr::root(2, RadicalExpr::constant(disc), 0);
  RadicalExpr signed_sqrt =
      positive_branch ? sqrt_disc : RadicalExpr::negate(sqrt_disc);
  return RadicalExpr::scale(Rational(1, 2),
                            RadicalExpr::sum({RadicalExpr::constant(s), signed_sqrt}));
}

/// Does the '+' branch of (s +- sqrt(s^2-4q))/2 give the larger-magnitude root?
inline bool plus_branch_is_larger(const Rational& s, const Rational& q) {
  const Complex sd(rational_to_double(s), 0.0);
  const Complex d = nth_root(sd * sd - 4.0 * Complex(rational_to_double(q), 0.0), 2, 0);
  return std::abs(sd + d) >= std::abs(sd - d);
}

/// Branch index k such that nth_root(radicand_value, n, k) is nearest to
/// `target` (the target is mathematically one of the branch values).
inline int match_branch(const Complex& radicand_value, int n, const Complex& target) {
  int best_k = 0;
  double best = -1.0;
  for (int k = 0; k < n; ++k) {
    const double d = std::abs(nth_root(radicand_value, n, k) - target);
    if (best < 0.0 || d < best) {
      best = d;
      best_k = k;
    }
  }
  return best_k;
}

inline RootCertificate make_certificate(const Polynomial& source, RadicalExpr expr,
                                        const Complex& value) {
  return RootCertificate{std::move(expr), value, residual_at(source, value)};
}

/// Enforces the residual bound on every certificate.
inline void ensure_certified(const ResolventReport& report, double tol) {
  for (const auto& cert : report.roots) {
    if (!is_finite(cert.numeric) ||
        !(cert.residual <= tol * residual_scale(report.source, cert.numeric))) {
      throw CertificationError("root certificate exceeds residual bound " +
                               double_to_string(tol) + " at value " +
                               complex_to_string(cert.numeric));
    }
  }
}

}  // namespace detail

/// Quadratic resolvent z^2 - b z + a^3/27 of the cubic x^3 = a x + b.
/// Its roots A, B satisfy A + B = b and A*B = a^3/27.
inline Polynomial resolvent_of_cubic(const Rational& a, const Rational& b) {
  return Polynomial({rational_pow(a, 3) / 27, -b, Rational(1)});
}

/// Cubic resolvent z^3 - (a/2) z^2 + ((4c + a^2)/16) z - b^2/64 of the
/// quartic x^4 = a x^2 + b x + c.
inline Polynomial resolvent_of_quartic(const Rational& a, const Rational& b,
                                       const Rational& c) {
  return Polynomial({-b * b / 64, (Rational(4) * c + a * a) / 16, -a / 2, Rational(1)});
}

/// Degree-3 equation satisfied by the squares of the quartic resolvent roots,
/// built from the resolvent coefficients by the power transform
/// e1' = e1^2 - 2 e2, e2' = e2^2 - 2 e1 e3, e3' = e3^2.
inline Polynomial squared_resolvent(const Rational& a, const Rational& b,
                                    const Rational& c) {
  const Polynomial r = resolvent_of_quartic(a, b, c);
  const Rational e1 = -r.coeff(2);
  const Rational e2 = r.coeff(1);
  const Rational e3 = -r.coeff(0);
  const Rational f1 = e1 * e1 - 2 * e2;
  const Rational f2 = e2 * e2 - 2 * e1 * e3;
  const Rational f3 = e3 * e3;
  return Polynomial({-f3, f2, -f1, Rational(1)});
}

/// Solves x^3 = a x + b.  Roots are cbrt(A) + cbrt(B) over the resolvent
/// roots A, B with the companion cube root fixed by cbrt(A)*cbrt(B) = a/3;
/// the remaining roots attach the conjugate unity-root pair to the two cube
/// roots.  Residual bound: 1e-9 * scale.
inline ResolventReport solve_cubic(const Rational& a, const Rational& b) {
  ResolventReport report;
  report.method = Method::cubic_resolvent;
  report.source = Polynomial({-b, -a, Rational(0), Rational(1)});
  report.resolvent = resolvent_of_cubic(a, b);

  const auto unity = roots_of_unity(3);

  if (a == 0) {
    // Resolvent roots are b and 0: every root is a rotation of cbrt(b).
    report.resolvent_roots = {Complex(rational_to_double(b), 0.0), Complex(0.0, 0.0)};
    report.diagnostics.push_back("vanishing linear term: roots are rotations of cbrt(b)");
    if (b == 0) {
      for (int k = 0; k < 3; ++k) {
        report.roots.push_back(
            detail::make_certificate(report.source, RadicalExpr::integer(0), Complex(0.0, 0.0)));
      }
    } else {
      const RadicalExpr cbrt_b = RadicalExpr::root(3, RadicalExpr::constant(b), 0);
      const Complex u = nth_root(Complex(rational_to_double(b), 0.0), 3, 0);
      for (int k = 0; k < 3; ++k) {
        RadicalExpr expr = (k == 0) ? cbrt_b
                                    : RadicalExpr::product({*unity[k].exact, cbrt_b});
        report.roots.push_back(
            detail::make_certificate(report.source, std::move(expr), unity[k].value * u));
      }
    }
    detail::ensure_certified(report, 1e-9);
    return report;
  }

  // Stable resolvent roots: A is the larger one, B = (a^3/27) / A.
  const Rational product = rational_pow(a, 3) / 27;
  const auto [A, B] = detail::quadratic_roots_sum_product(
      Complex(rational_to_double(b), 0.0), Complex(rational_to_double(product), 0.0));
  report.resolvent_roots = {A, B};

  const bool plus_larger = detail::plus_branch_is_larger(b, product);
  const RadicalExpr a_expr = detail::quadratic_root_expr(b, product, plus_larger);
  const RadicalExpr b_expr = detail::quadratic_root_expr(b, product, !plus_larger);

  // Principal cube root of A; companion fixed by the product constraint.
  const Complex u = nth_root(A, 3, 0);
  const Complex companion = Complex(rational_to_double(a / 3), 0.0) / u;
  const int companion_branch = detail::match_branch(B, 3, companion);

  const RadicalExpr term_a = RadicalExpr::root(3, a_expr, 0);
  const RadicalExpr term_b = RadicalExpr::root(3, b_expr, companion_branch);

  for (int k = 0; k < 3; ++k) {
    const Complex value =
        unity[static_cast<std::size_t>(k)].value * u +
        unity[static_cast<std::size_t>((3 - k) % 3)].value * companion;
    RadicalExpr expr =
        (k == 0)
            ? RadicalExpr::sum({term_a, term_b})
            : RadicalExpr::sum(
                  {RadicalExpr::product({*unity[static_cast<std::size_t>(k)].exact, term_a}),
                   RadicalExpr::product(
                       {*unity[static_cast<std::size_t>((3 - k) % 3)].exact, term_b})});
    report.roots.push_back(detail::make_certificate(report.source, std::move(expr), value));
  }
  detail::ensure_certified(report, 1e-9);
  return report;
}

namespace detail {

/// Closed forms and stable numeric values for the roots of the quartic's
/// cubic resolvent, ordered with the two largest-magnitude roots first.
struct QuarticResolventRoots {
  std::vector<Complex> values;      // A, B, C
  std::vector<RadicalExpr> exprs;   // matching trees
};

inline QuarticResolventRoots quartic_resolvent_roots(const Rational& a, const Rational& b,
                                                     const Rational& c) {
  const Polynomial resolvent = resolvent_of_quartic(a, b, c);
  const DepressedForm dep = depress(resolvent);
  const ResolventReport inner =
      solve_cubic(-dep.poly.coeff(1), -dep.poly.coeff(0));

  QuarticResolventRoots out;
  const Rational shift = dep.shift;
  const Complex shift_value(rational_to_double(shift), 0.0);
  for (const auto& cert : inner.roots) {
    out.values.push_back(cert.numeric + shift_value);
    out.exprs.push_back(shift == 0 ? cert.closed_form
                                   : RadicalExpr::sum({RadicalExpr::constant(shift),
                                                       cert.closed_form}));
  }
  // Certificate order: largest two magnitudes first, so the product-derived
  // third square root divides by the largest available magnitude.
  std::vector<std::size_t> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(out.values[i]) > std::abs(out.values[j]);
  });
  QuarticResolventRoots sorted;
  for (std::size_t i : order) {
    sorted.values.push_back(out.values[i]);
    sorted.exprs.push_back(out.exprs[i]);
  }
  return sorted;
}

/// Shared quartic driver: `squared` switches the reported auxiliary equation
/// and the radical presentation (fourth roots of the squared-resolvent
/// roots) without changing the numeric root values.
inline ResolventReport solve_quartic_impl(const Rational& a, const Rational& b,
                                          const Rational& c, bool squared) {
  ResolventReport report;
  report.method = squared ? Method::quartic_squared_resolvent : Method::quartic_resolvent;
  report.source = Polynomial({-c, -b, -a, Rational(0), Rational(1)});
  report.resolvent = squared ? squared_resolvent(a, b, c) : resolvent_of_quartic(a, b, c);

  if (b == 0) {
    // Biquadratic: substitute y = x^2 and take square roots of the two
    // quadratic roots.
    report.diagnostics.push_back("vanishing odd term: solved as a quadratic in x^2");
    const auto [y1, y2] = quadratic_roots_sum_product(
        Complex(rational_to_double(a), 0.0), Complex(rational_to_double(-c), 0.0));
    const bool plus_larger = plus_branch_is_larger(a, -c);
    const RadicalExpr y1_expr = quadratic_root_expr(a, -c, plus_larger);
    const RadicalExpr y2_expr = quadratic_root_expr(a, -c, !plus_larger);
    for (const auto& [y_value, y_expr] : {std::pair{y1, y1_expr}, std::pair{y2, y2_expr}}) {
      const Complex s = nth_root(y_value, 2, 0);
      RadicalExpr s_expr = RadicalExpr::root(2, y_expr, 0);
      report.roots.push_back(make_certificate(report.source, s_expr, s));
      report.roots.push_back(
          make_certificate(report.source, RadicalExpr::negate(s_expr), -s));
    }
    // Auxiliary roots for the report.
    const Polynomial& r = report.resolvent;
    for (const Complex& z : find_roots_numeric(r)) report.resolvent_roots.push_back(z);
    ensure_certified(report, 1e-9);
    return report;
  }

  QuarticResolventRoots res = quartic_resolvent_roots(a, b, c);

  // Square roots: principal branches for the two large roots, the third from
  // the exact product constraint sqrt(A) sqrt(B) sqrt(C) = b/8.
  const Complex sa = nth_root(res.values[0], 2, 0);
  const Complex sb = nth_root(res.values[1], 2, 0);
  const Complex sc = Complex(rational_to_double(b / 8), 0.0) / (sa * sb);

  std::vector<Complex> radical_values{sa, sb, sc};
  std::vector<RadicalExpr> radical_exprs;
  if (!squared) {
    radical_exprs.push_back(RadicalExpr::root(2, res.exprs[0], 0));
    radical_exprs.push_back(RadicalExpr::root(2, res.exprs[1], 0));
    radical_exprs.push_back(
        RadicalExpr::root(2, res.exprs[2], match_branch(res.values[2], 2, sc)));
    report.resolvent_roots = res.values;
  } else {
    // Fourth roots of the squared resolvent roots E = A^2 etc.; the branch is
    // matched so the fourth root equals the square root chosen above.
    for (std::size_t i = 0; i < 3; ++i) {
      const Complex squared_value = res.values[i] * res.values[i];
      report.resolvent_roots.push_back(squared_value);
      radical_exprs.push_back(
          RadicalExpr::root(4, RadicalExpr::product({res.exprs[i], res.exprs[i]}),
                            match_branch(squared_value, 4, radical_values[i])));
    }
  }

  // Root set: (+ + +), (+ - -), (- + -), (- - +) over (sa, sb, sc).
  const int signs[4][3] = {{+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}};
  for (const auto& row : signs) {
    Complex value(0.0, 0.0);
    std::vector<RadicalExpr> terms;
    for (int i = 0; i < 3; ++i) {
      value += static_cast<double>(row[i]) * radical_values[static_cast<std::size_t>(i)];
      terms.push_back(row[i] > 0 ? radical_exprs[static_cast<std::size_t>(i)]
                                 : RadicalExpr::negate(radical_exprs[static_cast<std::size_t>(i)]));
    }
    report.roots.push_back(make_certificate(report.source, RadicalExpr::sum(std::move(terms)),
                                            value));
  }
  ensure_certified(report, 1e-9);
  return report;
}

}  // namespace detail

/// Solves x^4 = a x^2 + b x + c through the cubic resolvent.  Roots are the
/// four sign-consistent combinations of the three square roots with
/// sqrt(A) sqrt(B) sqrt(C) = b/8; b = 0 falls back to the biquadratic
/// substitution.  Residual bound: 1e-9 * scale.
inline ResolventReport solve_quartic(const Rational& a, const Rational& b, const Rational& c) {
  return detail::solve_quartic_impl(a, b, c, /*squared=*/false);
}

/// Same root values as solve_quartic, presented through the squared
/// resolvent: the auxiliary equation has roots A^2, B^2, C^2 and the roots
/// are written with branch-matched fourth roots.
inline ResolventReport solve_quartic_squared(const Rational& a, const Rational& b,
                                             const Rational& c) {
  return detail::solve_quartic_impl(a, b, c, /*squared=*/true);
}

/// Solves any degree-2 polynomial by depression: y^2 = A with A rational,
/// roots shift +- sqrt(A).  Residual bound: 1e-12 * scale.
inline ResolventReport solve_quadratic(const Polynomial& p) {
  if (p.is_zero() || p.degree() != 2) {
    throw DegreeMismatch("solve_quadratic requires an exact degree-2 polynomial");
  }
  ResolventReport report;
  report.method = Method::quadratic;
  report.source = p;
  const DepressedForm dep = depress(p);
  const Rational a_value = -dep.poly.coeff(0);
  report.resolvent = Polynomial({-a_value, Rational(1)});
  report.resolvent_roots = {Complex(rational_to_double(a_value), 0.0)};

  const Complex s = nth_root(Complex(rational_to_double(a_value), 0.0), 2, 0);
  const Complex shift(rational_to_double(dep.shift), 0.0);
  const RadicalExpr sqrt_expr = RadicalExpr::root(2, RadicalExpr::constant(a_value), 0);
  const auto with_shift = [&](RadicalExpr e) {
    return dep.shift == 0 ? e : RadicalExpr::sum({RadicalExpr::constant(dep.shift), e});
  };
  report.roots.push_back(
      detail::make_certificate(report.source, with_shift(sqrt_expr), shift + s));
  report.roots.push_back(detail::make_certificate(
      report.source, with_shift(RadicalExpr::negate(sqrt_expr)), shift - s));
  detail::ensure_certified(report, 1e-12);
  return report;
}

/// Closed-form dispatch for degrees 1 through 4.  Non-depressed cubics and
/// quartics are depressed first and the roots shifted back; residuals always
/// refer to the original polynomial.
inline ResolventReport solve_closed_form(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) {
    throw DegreeTooLow("closed-form solving requires degree >= 1");
  }
  const int n = p.degree();
  if (n > 4) {
    throw DegreeUnsupported(
        "closed-form solving covers degrees 1..4; higher degrees need a special "
        "family or the numeric oracle");
  }
  if (n == 1) {
    ResolventReport report;
    report.method = Method::linear;
    report.source = p;
    report.resolvent = Polynomial::constant(Rational(1));
    const Rational root = -p.coeff(0) / p.coeff(1);
    report.roots.push_back(detail::make_certificate(
        report.source, RadicalExpr::constant(root),
        Complex(rational_to_double(root), 0.0)));
    detail::ensure_certified(report, 1e-12);
    return report;
  }
  if (n == 2) return solve_quadratic(p);

  const DepressedForm dep = depress(p);
  ResolventReport inner;
  if (n == 3) {
    inner = solve_cubic(-dep.poly.coeff(1), -dep.poly.coeff(0));
  } else {
    inner = solve_quartic(-dep.poly.coeff(2), -dep.poly.coeff(1), -dep.poly.coeff(0));
  }
  if (dep.shift == 0 && p.is_monic()) return inner;

  ResolventReport report;
  report.method = inner.method;
  report.source = p;
  report.resolvent = inner.resolvent;
  report.resolvent_roots = inner.resolvent_roots;
  report.diagnostics = inner.diagnostics;
  const Complex shift(rational_to_double(dep.shift), 0.0);
  for (const auto& cert : inner.roots) {
    const Complex value = cert.numeric + shift;
    RadicalExpr expr = dep.shift == 0
                           ? cert.closed_form
                           : RadicalExpr::sum({RadicalExpr::constant(dep.shift),
                                               cert.closed_form});
    report.roots.push_back(detail::make_certificate(report.source, std::move(expr), value));
  }
  detail::ensure_certified(report, 1e-9);
  return report;
}

/// solve_closed_form restricted to quartics, presenting the squared auxiliary
/// equation (roots A^2, B^2, C^2) instead of the standard one.
inline ResolventReport solve_closed_form_squared(const Polynomial& p) {
  if (p.is_zero() || p.degree() != 4) {
    throw DegreeMismatch("the squared auxiliary equation is specific to quartics");
  }
  const DepressedForm dep = depress(p);
  ResolventReport inner =
      solve_quartic_squared(-dep.poly.coeff(2), -dep.poly.coeff(1), -dep.poly.coeff(0));
  if (dep.shift == 0 && p.is_monic()) return inner;

  ResolventReport report;
  report.method = inner.method;
  report.source = p;
  report.resolvent = inner.resolvent;
  report.resolvent_roots = inner.resolvent_roots;
  report.diagnostics = inner.diagnostics;
  const Complex shift(rational_to_double(dep.shift), 0.0);
  for (const auto& cert : inner.roots) {
    const Complex value = cert.numeric + shift;
    RadicalExpr expr = dep.shift == 0
                           ? cert.closed_form
                           : RadicalExpr::sum({RadicalExpr::constant(dep.shift),
                                               cert.closed_form});
    report.roots.push_back(detail::make_certificate(report.source, std::move(expr), value));
  }
  detail::ensure_certified(report, 1e-9);
  return report;
}

}  // namespace radroots
