// Power-sum recurrences (exact and numeric), the index-multiplication
// identities, quartic elimination, and the branch-combination explorer.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "radroots/moivre.hpp"
#include "radroots/power_sums.hpp"

using namespace radroots;

namespace {

Rational random_rational(std::mt19937_64& rng, long long height) {
  std::uniform_int_distribution<long long> num(-height, height);
  std::uniform_int_distribution<long long> den(1, height);
  return Rational(num(rng)) / Rational(den(rng));
}

Complex random_unit_box(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> coord(-radius, radius);
  const double re = coord(rng);
  const double im = coord(rng);
  return Complex(re, im);
}

}  // namespace

TEST_CASE("two-term power sums match the printed expansions exactly") {
  // Both sides are polynomials in (x, t); agreement on an integer grid that
  // exceeds the degrees in each variable proves the identity.
  for (long long xi = -3; xi <= 3; ++xi) {
    for (long long ti = -3; ti <= 3; ++ti) {
      const Rational x(xi), t(ti);
      CHECK(two_term_power_sum(x, t, 0) == Rational(2));
      CHECK(two_term_power_sum(x, t, 1) == x);
      CHECK(two_term_power_sum(x, t, 2) == x * x - 2 * t);
      CHECK(two_term_power_sum(x, t, 3) == x * x * x - 3 * x * t);
      CHECK(two_term_power_sum(x, t, 4) ==
            rational_pow(x, 4) - 4 * x * x * t + 2 * t * t);
      CHECK(two_term_power_sum(x, t, 5) ==
            rational_pow(x, 5) - 5 * rational_pow(x, 3) * t + 5 * x * t * t);
    }
  }
}

TEST_CASE("two-term recurrence reproduces u^m + v^m for actual radicals") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex u = random_unit_box(rng, 1.4);
    const Complex v = random_unit_box(rng, 1.4);
    const Complex x = u + v;
    const Complex t = u * v;
    Complex pu(1.0, 0.0), pv(1.0, 0.0);
    for (int m = 0; m <= 15; ++m) {
      const Complex direct = pu + pv;
      const Complex via_recurrence = two_term_power_sum(x, t, m);
      CHECK(std::abs(direct - via_recurrence) < 1e-9 * std::max(1.0, std::abs(direct)));
      pu *= u;
      pv *= v;
    }
  }
}

TEST_CASE("triple power sums: printed degree-5 expansion as an exact identity") {
  for (long long xi = -3; xi <= 3; ++xi) {
    for (long long pi = -2; pi <= 2; ++pi) {
      for (long long gi = -1; gi <= 1; ++gi) {
        const Rational x(xi), p(pi), g(gi);
        const auto [r5, s5] = triple_power_sums(x, p, g, 5);
        CHECK(r5 == rational_pow(x, 5) - 5 * p * rational_pow(x, 3) + 5 * g * x * x +
                        5 * p * p * x - 5 * p * g);
        const auto [r0, s0] = triple_power_sums(x, p, g, 0);
        CHECK(r0 == Rational(3));
        CHECK(s0 == Rational(3));
        const auto [r2, s2] = triple_power_sums(x, p, g, 2);
        CHECK(r2 == x * x - 2 * p);
        CHECK(s2 == p * p - 2 * x * g);
      }
    }
  }
}

TEST_CASE("triple recurrences match direct branch evaluation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex A = random_unit_box(rng, 2.0);
    const Complex B = random_unit_box(rng, 2.0);
    const Complex C = random_unit_box(rng, 2.0);
    const int n = 2 + static_cast<int>(rng() % 4);
    const TripleSumState state(A, B, C, n, static_cast<int>(rng() % n),
                               static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    for (int m = 0; m <= 15; ++m) {
      const auto [r, s] = triple_sums(state, m);
      const Complex r_direct = state.direct_power_sum(m);
      const Complex s_direct = state.direct_pair_power_sum(m);
      CHECK(std::abs(r - r_direct) < 1e-9 * std::max(1.0, std::abs(r_direct)));
      CHECK(std::abs(s - s_direct) < 1e-9 * std::max(1.0, std::abs(s_direct)));
    }
  }
}

TEST_CASE("index-multiplication identities hold for random branch states") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex A = random_unit_box(rng, 1.8);
    const Complex B = random_unit_box(rng, 1.8);
    const Complex C = random_unit_box(rng, 1.8);
    const int n = 2 + static_cast<int>(rng() % 4);
    const TripleSumState state(A, B, C, n, static_cast<int>(rng() % n),
                               static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    for (int m = 0; m <= 5; ++m) {
      const IdentityReport report = multiplication_identities(state, m, 1e-9);
      REQUIRE(report.checks.size() == 4);
      CHECK(report.all_pass);
      CHECK(report.max_deviation <= 1e-9);
      for (const auto& check : report.checks) {
        CHECK_FALSE(check.name.empty());
        CHECK(check.pass);
      }
    }
  }
}

TEST_CASE("quartic elimination reproduces the squared resolvent exactly") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const Rational a = random_rational(rng, 40);
    const Rational b = random_rational(rng, 40);
    const Rational c = random_rational(rng, 40);
    const EliminationReport report = quartic_elimination(a, b, c);
    CHECK(report.matches_squared_resolvent);
    CHECK(report.eliminated ==
          Polynomial({-report.gamma, report.beta, -report.alpha, Rational(1)}));
  }
  const EliminationReport worked = quartic_elimination(Rational(28), Rational(48), Rational(0));
  CHECK(worked.alpha == Rational(98));
  CHECK(worked.beta == Rational(1393));
  CHECK(worked.gamma == Rational(1296));
}

TEST_CASE("two-radical elimination closes back on the quartic itself") {
  // With alpha' = a/2 and beta' = c/4 + a^2/16, the eliminated equation
  // x^4 - 2 alpha' x^2 - 8 (b/8) x - (4 beta' - alpha'^2) is the source.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = random_rational(rng, 30);
    const Rational b = random_rational(rng, 30);
    const Rational c = random_rational(rng, 30);
    const Rational alpha_prime = a / 2;
    const Rational beta_prime = c / 4 + a * a / 16;
    const Polynomial closed({-(Rational(4) * beta_prime - alpha_prime * alpha_prime), -b,
                             -Rational(2) * alpha_prime, Rational(0), Rational(1)});
    CHECK(closed == Polynomial({-c, -b, -a, Rational(0), Rational(1)}));
  }
}

TEST_CASE("quartet states satisfy the Newton expansions") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex A = random_unit_box(rng, 2.0);
    const Complex B = random_unit_box(rng, 2.0);
    const Complex C = random_unit_box(rng, 2.0);
    const Complex D = random_unit_box(rng, 2.0);
    const int n = 2 + static_cast<int>(rng() % 4);
    const QuadSumState state(A, B, C, D, n, static_cast<int>(rng() % n),
                             static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                             static_cast<int>(rng() % n));
    const Complex x = state.root_sum();
    const Complex e2 = state.pair_sum();
    const Complex e3 = state.triple_sum();
    const Complex e4 = state.product();
    const Complex p2 = state.direct_power_sum(2);
    const Complex p3 = state.direct_power_sum(3);
    const Complex p4 = state.direct_power_sum(4);
    CHECK(std::abs(p2 - (x * x - 2.0 * e2)) < 1e-9 * std::max(1.0, std::abs(p2)));
    CHECK(std::abs(p3 - (x * x * x - 3.0 * x * e2 + 3.0 * e3)) <
          1e-9 * std::max(1.0, std::abs(p3)));
    const Complex p4_expected =
        x * x * x * x - 4.0 * x * x * e2 + 2.0 * e2 * e2 + 4.0 * x * e3 - 4.0 * e4;
    CHECK(std::abs(p4 - p4_expected) < 1e-9 * std::max(1.0, std::abs(p4)));
  }
}

TEST_CASE("explorer with a vanishing second pair reproduces the quadratic family") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    MoivreForm form;
    form.n = 5;
    form.alpha = Rational(1 + static_cast<long long>(rng() % 12));
    form.t = Rational(1 + static_cast<long long>(rng() % 4));
    // A, B are the quadratic pair z^2 = alpha z - t^n.
    const Rational beta = rational_pow(form.t, 5);
    const auto [A, B] = detail::quadratic_roots_sum_product(
        Complex(rational_to_double(form.alpha), 0.0),
        Complex(rational_to_double(beta), 0.0));
    ExplorerOptions options;
    options.first_pair_product = Complex(rational_to_double(form.t), 0.0);
    const ExplorationReport report =
        quintic_explorer(A, B, Complex(0, 0), Complex(0, 0), 5, options);

    const ResolventReport solved = solve_moivre(form);
    std::vector<Complex> expected;
    for (const auto& cert : solved.roots) expected.push_back(cert.numeric);
    double scale = 1.0;
    for (const Complex& v : expected) scale = std::max(scale, std::abs(v));
    CHECK(multiset_match(report.selected_values, expected, 1e-8 * scale).has_value());

    // The candidate expansion lands on the family polynomial.
    const Polynomial family = build_moivre_poly(form);
    double coeff_scale = 1.0;
    for (int i = 0; i <= 5; ++i) {
      coeff_scale = std::max(coeff_scale, std::abs(rational_to_double(family.coeff(i))));
    }
    REQUIRE(report.candidate_coeffs.size() == 6);
    for (int i = 0; i <= 5; ++i) {
      CHECK(std::abs(report.candidate_coeffs[static_cast<std::size_t>(i)] -
                     Complex(rational_to_double(family.coeff(i)), 0.0)) <
            1e-8 * coeff_scale);
    }
    CHECK(report.max_imag_coeff < 1e-8 * coeff_scale);
    CHECK(report.subleading_abs < 1e-8 * coeff_scale);
  }
}

TEST_CASE("explorer degenerate and structural cases") {
  const ExplorationReport zero =
      quintic_explorer(Complex(0, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0));
  REQUIRE(zero.candidate_coeffs.size() == 6);
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(zero.candidate_coeffs[i]) < 1e-15);
  CHECK(std::abs(zero.candidate_coeffs[5] - Complex(1, 0)) < 1e-15);

  // Paired default: n tuples of the form (k, -k, k, -k).
  const ExplorationReport paired =
      quintic_explorer(Complex(2, 1), Complex(-1, 0.5), Complex(0.3, 0), Complex(1, -1), 7);
  REQUIRE(paired.selected_tuples.size() == 7);
  REQUIRE(paired.tuples.size() == 7);
  for (int k = 0; k < 7; ++k) {
    CHECK(paired.selected_tuples[static_cast<std::size_t>(k)].a == k);
    CHECK(paired.selected_tuples[static_cast<std::size_t>(k)].b == (7 - k) % 7);
  }
  CHECK(paired.candidate_coeffs.size() == 8);
  CHECK(std::abs(paired.candidate_coeffs[7] - Complex(1, 0)) < 1e-15);

  // Full enumeration walks all n^4 tuples.
  ExplorerOptions full;
  full.full_enumeration = true;
  const ExplorationReport everything =
      quintic_explorer(Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0), 3, full);
  CHECK(everything.tuples.size() == 81);
  CHECK(everything.values.size() == 81);
  CHECK(everything.selected_values.size() == 3);
}

TEST_CASE("preconditions across the module") {
  CHECK_THROWS_AS(two_term_power_sum(Rational(1), Rational(1), -1), PreconditionError);
  CHECK_THROWS_AS(triple_power_sums(Rational(1), Rational(1), Rational(1), -1),
                  PreconditionError);
  CHECK_THROWS_AS(TripleSumState(Complex(1, 0), Complex(1, 0), Complex(1, 0), 0, 0, 0, 0),
                  PreconditionError);
  const TripleSumState state(Complex(1, 0), Complex(2, 0), Complex(3, 0), 2, 0, 0, 0);
  CHECK_THROWS_AS(multiplication_identities(state, -1), PreconditionError);
  CHECK_THROWS_AS(
      quintic_explorer(Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(1, 0), 0),
      PreconditionError);
}
