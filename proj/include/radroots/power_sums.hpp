#pragma once

// Power sums of radical combinations and the recurrences that drive them.
//
// Two radicals u, v with u + v = x and u v = t:  s_m = u^m + v^m satisfies
//   s_0 = 2, s_1 = x, s_m = x s_(m-1) - t s_(m-2).
// Three radicals a, b, c with elementary symmetric values x = a+b+c,
// p = ab+ac+bc, g = abc:
//   R_m = a^m + b^m + c^m:        R_m = x R_(m-1) - p R_(m-2) + g R_(m-3)
//   S_m = (ab)^m + (ac)^m + (bc)^m: S_m = p S_(m-1) - x g S_(m-2) + g^2 S_(m-3)
// and the index-multiplication identities
//   R_2m = R_m^2 - 2 S_m              S_2m = S_m^2 - 2 R_m g^m
//   R_3m = R_m^3 - 3 R_m S_m + 3 g^m  S_3m = S_m^3 - 3 R_m S_m g^m + 3 g^(2m)
//
// The recurrences are templates over the scalar type so the same code runs
// in complex doubles (states built from radical branch choices) and in exact
// rationals (polynomial-identity tests by exact evaluation).
//
// The quartic elimination cross-check and the branch-combination explorer
// for quartets of n-th roots live here too.

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
#include "radroots/rational.hpp"
#include "radroots/resolvent.hpp"

namespace radroots {

/// s_m = u^m + v^m from u + v = x, u v = t.  Requires m >= 0.
template <class T>
T two_term_power_sum(const T& x, const T& t, int m) {
  if (m < 0) throw PreconditionError("power-sum index must be >= 0");
  T prev = T(2);          // s_0
  if (m == 0) return prev;
  T current = x;          // s_1
  for (int i = 2; i <= m; ++i) {
    T next = x * current - t * prev;
    prev = current;
    current = next;
  }
  return current;
}

/// (R_m, S_m) from the elementary symmetric values (x, p, g) of three
/// radicals.  Requires m >= 0.
template <class T>
std::pair<T, T> triple_power_sums(const T& x, const T& p, const T& g, int m) {
  if (m < 0) throw PreconditionError("power-sum index must be >= 0");
  // R over roots (a, b, c): e1 = x, e2 = p, e3 = g.
  // S over products (ab, ac, bc): e1 = p, e2 = x g, e3 = g^2.
  T r_prev2 = T(3), r_prev1 = x, r_prev0 = x * x - T(2) * p;        // R_0, R_1, R_2
  T s_prev2 = T(3), s_prev1 = p, s_prev0 = p * p - T(2) * x * g;    // S_0, S_1, S_2
  if (m == 0) return {r_prev2, s_prev2};
  if (m == 1) return {r_prev1, s_prev1};
  if (m == 2) return {r_prev0, s_prev0};
  const T g_squared = g * g;
  for (int i = 3; i <= m; ++i) {
    T r_next = x * r_prev0 - p * r_prev1 + g * r_prev2;
    T s_next = p * s_prev0 - x * g * s_prev1 + g_squared * s_prev2;
    r_prev2 = r_prev1; r_prev1 = r_prev0; r_prev0 = r_next;
    s_prev2 = s_prev1; s_prev1 = s_prev0; s_prev0 = s_next;
  }
  return {r_prev0, s_prev0};
}

/// Three chosen n-th root branches of A, B, C and their symmetric values.
class TripleSumState {
 public:
  TripleSumState(const Complex& A, const Complex& B, const Complex& C, int n,
                 int branch_a, int branch_b, int branch_c)
      : radicals_{nth_root(A, n, branch_a), nth_root(B, n, branch_b),
                  nth_root(C, n, branch_c)} {
    if (n < 1) throw PreconditionError("root index must be >= 1");
  }

  const Complex& radical(std::size_t i) const { return radicals_.at(i); }

  /// x = a + b + c
  Complex root_sum() const { return radicals_[0] + radicals_[1] + radicals_[2]; }

  /// p = ab + ac + bc
  Complex pair_sum() const {
    return radicals_[0] * radicals_[1] + radicals_[0] * radicals_[2] +
           radicals_[1] * radicals_[2];
  }

  /// g = abc
  Complex product() const { return radicals_[0] * radicals_[1] * radicals_[2]; }

  /// Direct a^m + b^m + c^m (no recurrence), for cross-checking.
  Complex direct_power_sum(int m) const {
    Complex total(0.0, 0.0);
    for (const Complex& r : radicals_) total += power(r, m);
    return total;
  }

  /// Direct (ab)^m + (ac)^m + (bc)^m.
  Complex direct_pair_power_sum(int m) const {
    return power(radicals_[0] * radicals_[1], m) + power(radicals_[0] * radicals_[2], m) +
           power(radicals_[1] * radicals_[2], m);
  }

 private:
  static Complex power(Complex base, int m) {
    Complex acc(1.0, 0.0);
    for (int i = 0; i < m; ++i) acc *= base;
    return acc;
  }

  std::vector<Complex> radicals_;
};

/// (R_m, S_m) for the state via the recurrences.
inline std::pair<Complex, Complex> triple_sums(const TripleSumState& state, int m) {
  return triple_power_sums(state.root_sum(), state.pair_sum(), state.product(), m);
}

struct IdentityCheck {
  std::string name;
  double deviation = 0.0;  // relative: |lhs - rhs| / max(1, |lhs|, |rhs|)
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double max_deviation = 0.0;
  bool all_pass = true;
};

/// Checks the four index-multiplication identities at index m against the
/// recurrence values, within `tol` relative deviation.
inline IdentityReport multiplication_identities(const TripleSumState& state, int m,
                                                double tol = 1e-9) {
  if (m < 0) throw PreconditionError("identity index must be >= 0");
  const auto [r_m, s_m] = triple_sums(state, m);
  const auto [r_2m, s_2m] = triple_sums(state, 2 * m);
  const auto [r_3m, s_3m] = triple_sums(state, 3 * m);
  Complex g_m(1.0, 0.0);
  for (int i = 0; i < m; ++i) g_m *= state.product();
  const Complex g_2m = g_m * g_m;

  IdentityReport report;
  const auto check = [&](const std::string& name, const Complex& lhs, const Complex& rhs) {
    IdentityCheck c;
    c.name = name;
    c.deviation = std::abs(lhs - rhs) /
                  std::max({1.0, std::abs(lhs), std::abs(rhs)});
    c.pass = c.deviation <= tol;
    report.max_deviation = std::max(report.max_deviation, c.deviation);
    report.all_pass = report.all_pass && c.pass;
    report.checks.push_back(std::move(c));
  };
  check("R(2m) = R^2 - 2S", r_2m, r_m * r_m - 2.0 * s_m);
  check("S(2m) = S^2 - 2R g^m", s_2m, s_m * s_m - 2.0 * r_m * g_m);
  check("R(3m) = R^3 - 3RS + 3g^m", r_3m, r_m * r_m * r_m - 3.0 * r_m * s_m + 3.0 * g_m);
  check("S(3m) = S^3 - 3RS g^m + 3g^2m", s_3m,
        s_m * s_m * s_m - 3.0 * r_m * s_m * g_m + 3.0 * g_2m);
  return report;
}

struct EliminationReport {
  Rational alpha;   // a^2/8 - c/2
  Rational beta;    // c^2/16 + a^2 c/32 + a^4/256 - a b^2/64
  Rational gamma;   // b^4/4096
  Polynomial eliminated;          // z^3 - alpha z^2 + beta z - gamma
  bool matches_squared_resolvent = false;
};

/// Eliminates the radicals from x = 4throot(E) + 4throot(F) + 4throot(G) for
/// the quartic x^4 = a x^2 + b x + c, producing the degree-3 equation in the
/// squared resolvent roots directly from the printed elimination values, and
/// compares it (exactly) with the squared resolvent construction.
inline EliminationReport quartic_elimination(const Rational& a, const Rational& b,
                                             const Rational& c) {
  EliminationReport report;
  report.alpha = a * a / 8 - c / 2;
  report.beta = c * c / 16 + a * a * c / 32 + rational_pow(a, 4) / 256 - a * b * b / 64;
  report.gamma = rational_pow(b, 4) / 4096;
  report.eliminated =
      Polynomial({-report.gamma, report.beta, -report.alpha, Rational(1)});
  report.matches_squared_resolvent = (report.eliminated == squared_resolvent(a, b, c));
  return report;
}

/// Four chosen n-th root branches of A, B, C, D with constructor-derived
/// sums only (no recurrence is claimed for the quartet case).
class QuadSumState {
 public:
  QuadSumState(const Complex& A, const Complex& B, const Complex& C, const Complex& D,
               int n, int branch_a, int branch_b, int branch_c, int branch_d)
      : radicals_{nth_root(A, n, branch_a), nth_root(B, n, branch_b),
                  nth_root(C, n, branch_c), nth_root(D, n, branch_d)} {
    if (n < 1) throw PreconditionError("root index must be >= 1");
  }

  const Complex& radical(std::size_t i) const { return radicals_.at(i); }

  /// x = a + b + c + d
  Complex root_sum() const {
    return radicals_[0] + radicals_[1] + radicals_[2] + radicals_[3];
  }

  /// Sum of the six pairwise products.
  Complex pair_sum() const {
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) total += radicals_[i] * radicals_[j];
    }
    return total;
  }

  /// Sum of the four triple products.
  Complex triple_sum() const {
    Complex total(0.0, 0.0);
    for (std::size_t skip = 0; skip < 4; ++skip) {
      Complex term(1.0, 0.0);
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != skip) term *= radicals_[i];
      }
      total += term;
    }
    return total;
  }

  /// h = abcd
  Complex product() const {
    return radicals_[0] * radicals_[1] * radicals_[2] * radicals_[3];
  }

  /// Direct m-th power sum of the four radicals.
  Complex direct_power_sum(int m) const {
    Complex total(0.0, 0.0);
    for (const Complex& r : radicals_) {
      Complex acc(1.0, 0.0);
      for (int i = 0; i < m; ++i) acc *= r;
      total += acc;
    }
    return total;
  }

 private:
  std::vector<Complex> radicals_;
};

struct BranchTuple {
  int a = 0, b = 0, c = 0, d = 0;
};

struct ExplorerOptions {
  bool full_enumeration = false;               // also record all n^4 raw branch values
  std::optional<Complex> first_pair_product;   // target for radical(A) * radical(B)
  std::optional<Complex> second_pair_product;  // target for radical(C) * radical(D)
};

struct ExplorationReport {
  int n = 5;
  std::vector<BranchTuple> tuples;      // enumerated tuples (paired or full)
  std::vector<Complex> values;          // the sum for each tuple
  std::vector<BranchTuple> selected_tuples;  // the n paired tuples used below
  std::vector<Complex> selected_values;
  std::vector<Complex> candidate_coeffs;  // monic expansion of the selected set, ascending
  double max_imag_coeff = 0.0;            // distance of the candidate from real coefficients
  double subleading_abs = 0.0;            // |coefficient of x^(n-1)|
};

/// Enumerates branch combinations of nthroot(A) + nthroot(B) + nthroot(C) +
/// nthroot(D).  The paired default walks the n tuples (k, -k, k, -k) mod n,
/// rotating a principal radical for A (resp. C) against a companion for B
/// (resp. D); when a pair-product target is supplied the companion is the
/// exact quotient target/principal, the branch-index analogue of the
/// product-pairing rule in the solvers.  Expands the selected n values into
/// a monic candidate polynomial.  Exploration only: no root claim is made
/// for the candidate.
inline ExplorationReport quintic_explorer(const Complex& A, const Complex& B,
                                          const Complex& C, const Complex& D, int n = 5,
                                          const ExplorerOptions& options = {}) {
  if (n < 1) throw PreconditionError("explorer requires n >= 1");
  ExplorationReport report;
  report.n = n;

  const auto unity = roots_of_unity(n);
  const Complex u = nth_root(A, n, 0);
  const Complex w = nth_root(C, n, 0);
  const auto companion = [&](const Complex& principal, const Complex& other,
                             const std::optional<Complex>& target) {
    if (target && principal != Complex(0.0, 0.0)) return *target / principal;
    return nth_root(other, n, 0);
  };
  const Complex v = companion(u, B, options.first_pair_product);
  const Complex z = companion(w, D, options.second_pair_product);

  for (int k = 0; k < n; ++k) {
    const int conj = (n - k) % n;
    report.selected_tuples.push_back(BranchTuple{k, conj, k, conj});
    report.selected_values.push_back(unity[static_cast<std::size_t>(k)].value * u +
                                     unity[static_cast<std::size_t>(conj)].value * v +
                                     unity[static_cast<std::size_t>(k)].value * w +
                                     unity[static_cast<std::size_t>(conj)].value * z);
  }

  if (options.full_enumeration) {
    for (int ka = 0; ka < n; ++ka) {
      for (int kb = 0; kb < n; ++kb) {
        for (int kc = 0; kc < n; ++kc) {
          for (int kd = 0; kd < n; ++kd) {
            report.tuples.push_back(BranchTuple{ka, kb, kc, kd});
            report.values.push_back(nth_root(A, n, ka) + nth_root(B, n, kb) +
                                    nth_root(C, n, kc) + nth_root(D, n, kd));
          }
        }
      }
    }
  } else {
    report.tuples = report.selected_tuples;
    report.values = report.selected_values;
  }

  report.candidate_coeffs = cpoly_from_roots(report.selected_values);
  for (std::size_t i = 0; i < report.candidate_coeffs.size(); ++i) {
    report.max_imag_coeff =
        std::max(report.max_imag_coeff, std::abs(report.candidate_coeffs[i].imag()));
  }
  if (report.candidate_coeffs.size() >= 2) {
    report.subleading_abs =
        std::abs(report.candidate_coeffs[report.candidate_coeffs.size() - 2]);
  }
  return report;
}

}  // namespace radroots
