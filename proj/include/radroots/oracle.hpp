#pragma once

// Independent numeric root finder used to certify every closed form.
//
// Method: Durand-Kerner simultaneous iteration (sequential sweep updates) on
// the monic double-precision image of the polynomial.  Starting points sit
// on a circle of radius (1 + max|c_k| / |lead|) * initial_radius_factor with
// a fixed irrational angular offset so no starting point coincides with a
// real root by accident.  The run is fully deterministic: identical input
// and configuration produce identical output bit for bit.
//
// Every returned root satisfies |p(root)| <= 1e-8 * scale(p, root); if the
// iteration cannot reach that bound, NonConvergence carries the best iterate
// and its residuals.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/polynomial.hpp"

namespace radroots {

struct OracleConfig {
  int max_iterations = 500;
  double convergence_tol = 1e-13;     // stop when the largest sweep update is below this
  double initial_radius_factor = 1.0;
  double residual_bound = 1e-8;       // certification bound, times scale(p, root)
};

namespace detail {

/// Horner evaluation of an ascending complex coefficient sequence.
inline Complex cpoly_eval(const std::vector<Complex>& coeffs, const Complex& x) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<Complex> cpoly_mul(const std::vector<Complex>& a,
                                      const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> c(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace detail

/// Monic polynomial with the given roots, ascending complex coefficients.
inline std::vector<Complex> cpoly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> coeffs{Complex(1.0, 0.0)};
  for (const Complex& r : roots) {
    coeffs = detail::cpoly_mul(coeffs, std::vector<Complex>{-r, Complex(1.0, 0.0)});
  }
  return coeffs;
}

/// All complex roots of p (with multiplicity), certified against the residual
/// bound in cfg.  Requires degree >= 1.
inline std::vector<Complex> find_roots_numeric(const Polynomial& p,
                                               const OracleConfig& cfg = {}) {
  if (p.is_zero() || p.degree() < 1) {
    throw DegreeTooLow("numeric root finding requires degree >= 1");
  }
  const int n = p.degree();

  // Monic double image.
  std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
  const double lead = rational_to_double(p.lead());
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k)] = Complex(rational_to_double(p.coeff(k)) / lead, 0.0);
  }

  std::vector<Complex> roots(static_cast<std::size_t>(n));
  if (n == 1) {
    roots[0] = -coeffs[0];
  } else {
    double max_coeff = 0.0;
    for (int k = 0; k < n; ++k) max_coeff = std::max(max_coeff, std::abs(coeffs[k]));
    const double radius = (1.0 + max_coeff) * cfg.initial_radius_factor;
    // Golden-angle offset keeps starting points off the axes.
    constexpr double two_pi = 6.283185307179586476925286766559005768;
    constexpr double offset = 2.399963229728653322231555506633613853;
    for (int i = 0; i < n; ++i) {
      roots[static_cast<std::size_t>(i)] =
          std::polar(radius, offset + two_pi * static_cast<double>(i) / static_cast<double>(n));
    }
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
      double max_update = 0.0;
      for (int i = 0; i < n; ++i) {
        Complex denom(1.0, 0.0);
        for (int j = 0; j < n; ++j) {
          if (j != i) {
            denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
          }
        }
        if (denom == Complex(0.0, 0.0)) continue;  // coincident iterates; next sweep separates
        const Complex delta =
            detail::cpoly_eval(coeffs, roots[static_cast<std::size_t>(i)]) / denom;
        roots[static_cast<std::size_t>(i)] -= delta;
        max_update = std::max(max_update, std::abs(delta));
      }
      if (max_update < cfg.convergence_tol) break;
    }
  }

  std::vector<double> residuals(roots.size());
  bool certified = true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    residuals[i] = residual_at(p, roots[i]);
    if (!(residuals[i] <= cfg.residual_bound * residual_scale(p, roots[i]))) certified = false;
    if (!is_finite(roots[i])) certified = false;
  }
  if (!certified) {
    throw NonConvergence("numeric root iteration missed its residual bound", std::move(roots),
                         std::move(residuals));
  }
  return roots;
}

/// Greedy nearest-neighbour matching of two equally long multisets.  Returns
/// index pairs (i into `left`, j into `right`) when every matched pair lies
/// within tol of each other, empty otherwise.
namespace detail {

inline bool augment_match(int i, const std::vector<std::vector<int>>& adjacency,
                          std::vector<bool>& visited, std::vector<int>& owner) {
  for (int j : adjacency[static_cast<std::size_t>(i)]) {
    if (visited[static_cast<std::size_t>(j)]) continue;
    visited[static_cast<std::size_t>(j)] = true;
    if (owner[static_cast<std::size_t>(j)] < 0 ||
        augment_match(owner[static_cast<std::size_t>(j)], adjacency, visited, owner)) {
      owner[static_cast<std::size_t>(j)] = i;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Pairs every element of `left` with a distinct element of `right` so that
/// each pair is within `tol`, or reports that no such pairing exists.  This is
/// a bipartite perfect-matching search, so clustered values that a greedy
/// nearest-neighbour pass would cross are still paired correctly.
inline std::optional<std::vector<std::pair<int, int>>> multiset_match(
    const std::vector<Complex>& left, const std::vector<Complex>& right, double tol) {
  if (left.size() != right.size()) {
    throw LengthMismatch("multiset match requires equally long sequences");
  }
  const int n = static_cast<int>(left.size());
  std::vector<std::vector<int>> adjacency(left.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(left[static_cast<std::size_t>(i)] - right[static_cast<std::size_t>(j)]) <=
          tol) {
        adjacency[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }
  std::vector<int> owner(right.size(), -1);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> visited(right.size(), false);
    if (!detail::augment_match(i, adjacency, visited, owner)) return std::nullopt;
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(left.size());
  for (int j = 0; j < n; ++j) pairs.emplace_back(owner[static_cast<std::size_t>(j)], j);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace radroots
