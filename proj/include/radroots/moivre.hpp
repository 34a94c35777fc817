#pragma once

// The de Moivre family: degree-n polynomials solvable by a single quadratic.
//
// A member is determined by (n, alpha, t):
//   x^n + sum_{k=1..floor(n/2)} (-1)^k (n/(n-k)) C(n-k, k) t^k x^(n-2k) - alpha
// and its roots are x_k = w^k * nthroot(A) + w^(-k) * nthroot(B) for
// k = 0..n-1, where A and B are the roots of z^2 = alpha z - t^n, w runs
// over the n-th roots of unity, and the two radicals are paired so their
// product is exactly t.
//
// Detection is a structural pattern match (monic, no x^(n-1) term, t read
// off the x^(n-2) coefficient, exact rebuild comparison).  For n = 2 the
// parameters alpha and t both live in the constant term, so detection
// canonicalises to t = 0; the polynomial-level round trip build(detect(p))
// still reproduces p exactly.

#include <optional>
#include <utility>
#include <vector>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/radical.hpp"
#include "radroots/rational.hpp"
#include "radroots/resolvent.hpp"

namespace radroots {

struct MoivreForm {
  int n = 2;
  Rational alpha;  // constant side of the equation
  Rational t;      // rational n-th root of the quadratic's constant term
  bool operator==(const MoivreForm&) const = default;
};

/// Expands the family member into its polynomial.  Requires n >= 2.
inline Polynomial build_moivre_poly(const MoivreForm& form) {
  if (form.n < 2) throw PreconditionError("the family needs degree n >= 2");
  const int n = form.n;
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(n)] = 1;
  Rational t_power(1);
  for (int k = 1; 2 * k <= n; ++k) {
    t_power *= form.t;
    const Rational magnitude =
        Rational(n) / Rational(n - k) * Rational(binomial(n - k, k)) * t_power;
    coeffs[static_cast<std::size_t>(n - 2 * k)] += (k % 2 == 0) ? magnitude : -magnitude;
  }
  coeffs[0] -= form.alpha;
  return Polynomial(std::move(coeffs));
}

/// Recovers (n, alpha, t) when p is exactly a family member; empty otherwise.
/// Requires nothing of p beyond being a polynomial — a non-monic input, a
/// nonzero x^(n-1) term, or any coefficient mismatch is simply a negative.
inline std::optional<MoivreForm> detect_moivre(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2 || !p.is_monic()) return std::nullopt;
  const int n = p.degree();
  if (p.coeff(n - 1) != 0) return std::nullopt;
  MoivreForm form;
  form.n = n;
  if (n == 2) {
    form.t = 0;
    form.alpha = -p.coeff(0);
    return form;
  }
  form.t = -p.coeff(n - 2) / n;
  form.alpha = 0;
  const Polynomial tail = build_moivre_poly(form);
  const Polynomial difference = p - tail;
  if (!difference.is_zero() && difference.degree() > 0) return std::nullopt;
  form.alpha = -difference.coeff(0);
  if (build_moivre_poly(form) == p) return form;
  return std::nullopt;
}

/// Solves a family member.  The auxiliary equation in the report is
/// z^(n-1) - alpha z^(n-2) + t^n z^(n-3) for n >= 3 (its n-3 extra roots
/// vanish structurally and are not listed; only A and B appear), and the
/// quadratic z^2 - alpha z + t^n itself for n = 2.
/// Residual bound: 1e-9 * scale.
inline ResolventReport solve_moivre(const MoivreForm& form) {
  if (form.n < 2) throw PreconditionError("the family needs degree n >= 2");
  const int n = form.n;
  const Rational beta = rational_pow(form.t, static_cast<unsigned>(n));

  ResolventReport report;
  report.method = Method::moivre;
  report.source = build_moivre_poly(form);
  if (n >= 3) {
    std::vector<Rational> aux(static_cast<std::size_t>(n), Rational(0));
    aux[static_cast<std::size_t>(n - 1)] = 1;
    aux[static_cast<std::size_t>(n - 2)] = -form.alpha;
    aux[static_cast<std::size_t>(n - 3)] = beta;
    report.resolvent = Polynomial(std::move(aux));
    report.diagnostics.push_back(
        "auxiliary equation roots listed without its structurally vanished zeros");
  } else {
    report.resolvent = Polynomial({beta, -form.alpha, Rational(1)});
  }

  if (form.alpha == 0 && form.t == 0) {
    report.resolvent_roots = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
    for (int k = 0; k < n; ++k) {
      report.roots.push_back(detail::make_certificate(report.source, RadicalExpr::integer(0),
                                                      Complex(0.0, 0.0)));
    }
    detail::ensure_certified(report, 1e-9);
    return report;
  }

  const auto unity = roots_of_unity(n);

  if (form.t == 0) {
    // x^n = alpha: the n branch roots of alpha.
    report.resolvent_roots = {Complex(rational_to_double(form.alpha), 0.0), Complex(0.0, 0.0)};
    const Complex alpha_value(rational_to_double(form.alpha), 0.0);
    for (int k = 0; k < n; ++k) {
      report.roots.push_back(detail::make_certificate(
          report.source, RadicalExpr::root(n, RadicalExpr::constant(form.alpha), k),
          nth_root(alpha_value, n, k)));
    }
    detail::ensure_certified(report, 1e-9);
    return report;
  }

  // Stable quadratic roots: A larger, B through the product.
  const auto [A, B] = detail::quadratic_roots_sum_product(
      Complex(rational_to_double(form.alpha), 0.0), Complex(rational_to_double(beta), 0.0));
  report.resolvent_roots = {A, B};

  const bool plus_larger = detail::plus_branch_is_larger(form.alpha, beta);
  const RadicalExpr a_expr = detail::quadratic_root_expr(form.alpha, beta, plus_larger);
  const RadicalExpr b_expr = detail::quadratic_root_expr(form.alpha, beta, !plus_larger);

  const Complex u = nth_root(A, n, 0);
  const Complex companion = Complex(rational_to_double(form.t), 0.0) / u;
  const int companion_branch = detail::match_branch(B, n, companion);

  const RadicalExpr term_a = RadicalExpr::root(n, a_expr, 0);
  const RadicalExpr term_b = RadicalExpr::root(n, b_expr, companion_branch);
  const RadicalExpr one = RadicalExpr::integer(1);

  for (int k = 0; k < n; ++k) {
    const int conj = (n - k) % n;
    const Complex value = unity[static_cast<std::size_t>(k)].value * u +
                          unity[static_cast<std::size_t>(conj)].value * companion;
    // Unity factors as branch-indexed roots of 1 keep the tree exact for any n.
    RadicalExpr expr =
        (k == 0) ? RadicalExpr::sum({term_a, term_b})
                 : RadicalExpr::sum(
                       {RadicalExpr::product({RadicalExpr::root(n, one, k), term_a}),
                        RadicalExpr::product({RadicalExpr::root(n, one, conj), term_b})});
    report.roots.push_back(detail::make_certificate(report.source, std::move(expr), value));
  }
  detail::ensure_certified(report, 1e-9);
  return report;
}

}  // namespace radroots
