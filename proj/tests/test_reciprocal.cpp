// Palindromic factorisation, the u-substitution, trinomial and arc-division
// specials, and the partial-fraction / antiderivative layer.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "radroots/oracle.hpp"
#include "radroots/reciprocal.hpp"

using namespace radroots;

namespace {

Rational random_rational(std::mt19937_64& rng, long long height) {
  std::uniform_int_distribution<long long> num(-height, height);
  std::uniform_int_distribution<long long> den(1, height);
  return Rational(num(rng)) / Rational(den(rng));
}

Polynomial unit_quadratic(const Rational& alpha) {
  return Polynomial({Rational(1), alpha, Rational(1)});
}

Polynomial palindrome_from_alphas(const std::vector<Rational>& alphas, int unit_power) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const Rational& a : alphas) p = p * unit_quadratic(a);
  const Polynomial unit({Rational(1), Rational(1)});
  for (int i = 0; i < unit_power; ++i) p = p * unit;
  return p;
}

}  // namespace

TEST_CASE("half-angle basis polynomials match the closed expansions") {
  CHECK(half_angle_basis(0) == Polynomial::constant(Rational(2)));
  CHECK(half_angle_basis(1) == Polynomial::monomial(1));
  CHECK(half_angle_basis(2) == Polynomial({Rational(-2), Rational(0), Rational(1)}));
  CHECK(half_angle_basis(3) == Polynomial({Rational(0), Rational(-3), Rational(0), Rational(1)}));
  CHECK(half_angle_basis(4) ==
        Polynomial({Rational(2), Rational(0), Rational(-4), Rational(0), Rational(1)}));
  CHECK(half_angle_basis(5) == Polynomial({Rational(0), Rational(5), Rational(0), Rational(-5),
                                           Rational(0), Rational(1)}));
  CHECK_THROWS_AS(half_angle_basis(-1), PreconditionError);
}

TEST_CASE("V_k(y + 1/y) = y^k + y^-k for complex y") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    Complex y(coord(rng), coord(rng));
    if (std::abs(y) < 0.3) y += Complex(1.0, 0.0);
    const Complex u = y + 1.0 / y;
    for (int k = 0; k <= 8; ++k) {
      const Complex direct = std::pow(y, k) + std::pow(y, -k);
      const Complex via_basis = half_angle_basis(k).eval(u);
      CHECK(std::abs(direct - via_basis) < 1e-9 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("u-equation of y^4 + 3y^3 + 4y^2 + 3y + 1 is u^2 - 3u + 2") {
  const Polynomial p({Rational(1), Rational(3), Rational(4), Rational(3), Rational(1)});
  CHECK(u_equation(p) == Polynomial({Rational(2), Rational(-3), Rational(1)}));
}

TEST_CASE("u-equation tables for degrees 4 through 10") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Rational a = random_rational(rng, 20);
    const Rational b = random_rational(rng, 20);
    const Rational c = random_rational(rng, 20);
    const Rational d = random_rational(rng, 20);
    const Rational e = random_rational(rng, 20);

    const Polynomial p4({Rational(1), a, b, a, Rational(1)});
    CHECK(u_equation(p4) == Polynomial({b - 2, -a, Rational(1)}));

    const Polynomial p6({Rational(1), a, b, c, b, a, Rational(1)});
    CHECK(u_equation(p6) ==
          Polynomial({Rational(2) * a - c, b - 3, -a, Rational(1)}));

    const Polynomial p8({Rational(1), a, b, c, d, c, b, a, Rational(1)});
    CHECK(u_equation(p8) ==
          Polynomial({d - 2 * b + 2, Rational(3) * a - c, b - 4, -a, Rational(1)}));

    const Polynomial p10({Rational(1), a, b, c, d, e, d, c, b, a, Rational(1)});
    CHECK(u_equation(p10) == Polynomial({Rational(2) * c - 2 * a - e, d - 3 * b + 5,
                                         Rational(4) * a - c, b - 5, -a, Rational(1)}));
  }
}

TEST_CASE("u-equation preconditions") {
  CHECK_THROWS_AS(u_equation(Polynomial({Rational(1), Rational(2), Rational(1), Rational(1)})),
                  NotPalindromic);
  CHECK_THROWS_AS(u_equation(Polynomial({Rational(1), Rational(2), Rational(2), Rational(1)})),
                  OddDegree);
  CHECK_THROWS_AS(
      u_equation(Polynomial({Rational(2), Rational(3), Rational(2)})), NotMonic);
  CHECK_THROWS_AS(u_equation(Polynomial({Rational(1)})), DegreeTooLow);
}

TEST_CASE("trinomial u-equation shortcuts") {
  CHECK(trinomial_u_equation(2, Rational(-1)) ==
        Polynomial({Rational(-3), Rational(0), Rational(1)}));  // u^2 - 3
  // n = 3, p = -2: u^3 - 3u + 2 = (u - 1)^2 (u + 2).
  CHECK(trinomial_u_equation(3, Rational(-2)) ==
        Polynomial({Rational(2), Rational(-3), Rational(0), Rational(1)}));
  // Even n keeps the sign of p; n = 4 constant term is p + 2.
  const Rational p(7, 3);
  CHECK(trinomial_u_equation(4, p).coeff(0) == p + 2);
  CHECK_THROWS_AS(trinomial_u_equation(0, Rational(1)), PreconditionError);
}

TEST_CASE("trinomial u-equation equals the full u-equation of the expansion") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      const Rational p = random_rational(rng, 15);
      std::vector<Rational> cs(static_cast<std::size_t>(2 * n) + 1, Rational(0));
      cs[0] = 1;
      cs[static_cast<std::size_t>(n)] = p;
      cs[static_cast<std::size_t>(2 * n)] = 1;
      CHECK(trinomial_u_equation(n, p) == u_equation(Polynomial(cs)));
    }
  }
}

TEST_CASE("arc-division values are the trinomial u-equation roots") {
  CHECK(multiset_match(arc_division_alphas(2, Rational(0)),
                       {Complex(-std::sqrt(2.0), 0), Complex(std::sqrt(2.0), 0)}, 1e-12)
            .has_value());
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 10; ++n) {
    for (const Rational& p : {Rational(1, 2), Rational(-3, 2), Rational(3), Rational(-7, 2)}) {
      const auto alphas = arc_division_alphas(n, p);
      const auto roots = find_roots_numeric(trinomial_u_equation(n, p));
      CHECK(multiset_match(alphas, roots, 1e-8).has_value());
    }
  }
}

TEST_CASE("worked factorisation: alphas 1 and 2 with exact recombination") {
  const Polynomial p({Rational(1), Rational(3), Rational(4), Rational(3), Rational(1)});
  const ReciprocalFactorization f = factor_reciprocal(p);
  CHECK(f.unit_multiplicity == 0);
  CHECK(f.u_poly == Polynomial({Rational(2), Rational(-3), Rational(1)}));
  REQUIRE(f.factors.size() == 2);
  Polynomial rebuilt = Polynomial::constant(Rational(1));
  for (const auto& factor : f.factors) {
    REQUIRE(factor.exact_alpha.has_value());
    REQUIRE(factor.closed_form.has_value());
    rebuilt = rebuilt * unit_quadratic(*factor.exact_alpha);
  }
  CHECK(rebuilt == p);
}

TEST_CASE("odd palindromes shed unit factors first") {
  // (y + 1)(y^2 + 3y + 1) = y^3 + 4y^2 + 4y + 1.
  const Polynomial p({Rational(1), Rational(4), Rational(4), Rational(1)});
  const ReciprocalFactorization f = factor_reciprocal(p);
  CHECK(f.unit_multiplicity == 1);
  REQUIRE(f.factors.size() == 1);
  REQUIRE(f.factors[0].exact_alpha.has_value());
  CHECK(*f.factors[0].exact_alpha == Rational(3));

  // (y + 1)^3: one unit factor plus the quadratic with alpha = 2.
  const Polynomial cube({Rational(1), Rational(3), Rational(3), Rational(1)});
  const ReciprocalFactorization g = factor_reciprocal(cube);
  CHECK(g.unit_multiplicity == 1);
  REQUIRE(g.factors.size() == 1);
  CHECK(*g.factors[0].exact_alpha == Rational(2));
}

TEST_CASE("high-degree palindromes are factored through the numeric oracle") {
  const std::vector<Rational> alphas = {Rational(1, 2), Rational(-3), Rational(5),
                                        Rational(7, 2), Rational(-1, 3)};
  const Polynomial p = palindrome_from_alphas(alphas, 0);
  REQUIRE(p.degree() == 10);
  const ReciprocalFactorization f = factor_reciprocal(p);
  REQUIRE(f.factors.size() == 5);
  std::vector<Complex> found, expected;
  for (const auto& factor : f.factors) {
    found.push_back(factor.alpha);
    // Exact alphas are recovered through the rational-root identification.
    REQUIRE(factor.exact_alpha.has_value());
  }
  for (const Rational& a : alphas) expected.emplace_back(rational_to_double(a), 0.0);
  CHECK(multiset_match(found, expected, 1e-8).has_value());

  // Exact recombination from the recovered alphas.
  Polynomial rebuilt = Polynomial::constant(Rational(1));
  for (const auto& factor : f.factors) rebuilt = rebuilt * unit_quadratic(*factor.exact_alpha);
  CHECK(rebuilt == p);
}

TEST_CASE("random palindromes with irrational alphas recombine numerically") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    // Random even palindrome, made monic: c_k mirrored.
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<Rational> cs(static_cast<std::size_t>(2 * n) + 1, Rational(0));
    cs[0] = 1;
    cs[static_cast<std::size_t>(2 * n)] = 1;
    for (int j = 1; j < n; ++j) {
      const Rational value = random_rational(rng, 8);
      cs[static_cast<std::size_t>(n - j)] = value;
      cs[static_cast<std::size_t>(n + j)] = value;
    }
    cs[static_cast<std::size_t>(n)] = random_rational(rng, 8);
    const Polynomial p(cs);
    REQUIRE(p.is_palindromic());
    REQUIRE(p.degree() == 2 * n);

    const ReciprocalFactorization f = factor_reciprocal(p);
    // Recombine numerically at sample points.
    for (const Complex y : {Complex(0.7, 0.3), Complex(-1.2, 0.5), Complex(0.1, -0.9)}) {
      Complex product(1.0, 0.0);
      for (const auto& factor : f.factors) {
        product *= y * y + factor.alpha * y + Complex(1.0, 0.0);
      }
      for (int i = 0; i < f.unit_multiplicity; ++i) product *= y + Complex(1.0, 0.0);
      const Complex direct = p.eval(y);
      CHECK(std::abs(product - direct) < 1e-8 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("factorisation preconditions") {
  CHECK_THROWS_AS(factor_reciprocal(Polynomial({Rational(1), Rational(2), Rational(3)})),
                  NotPalindromic);
  CHECK_THROWS_AS(factor_reciprocal(Polynomial({Rational(2), Rational(3), Rational(2)})),
                  NotMonic);
  CHECK_THROWS_AS(factor_reciprocal(Polynomial({Rational(5)})), DegreeTooLow);
  const Polynomial big = palindrome_from_alphas({Rational(3), Rational(4), Rational(5)}, 0);
  CHECK_THROWS_AS(factor_reciprocal(big, 2), PreconditionError);
}

TEST_CASE("partial fractions of 1/(y^4 + 1): the classical coefficients") {
  const auto terms = partial_fractions(2, Rational(0));
  REQUIRE(terms.size() == 2);
  const double s2 = std::sqrt(2.0);
  for (const auto& term : terms) {
    CHECK(std::abs(term.const_coeff - Complex(0.5, 0)) < 1e-12);
    if (std::abs(term.alpha - Complex(s2, 0)) < 1e-9) {
      CHECK(std::abs(term.lin_coeff - Complex(1.0 / (2.0 * s2), 0)) < 1e-12);
    } else {
      CHECK(std::abs(term.alpha - Complex(-s2, 0)) < 1e-9);
      CHECK(std::abs(term.lin_coeff - Complex(-1.0 / (2.0 * s2), 0)) < 1e-12);
    }
  }
}

TEST_CASE("n = 1 partial fraction is the identity decomposition") {
  const auto terms = partial_fractions(1, Rational(5, 2));
  REQUIRE(terms.size() == 1);
  CHECK(std::abs(terms[0].alpha - Complex(2.5, 0)) < 1e-15);
  CHECK(std::abs(terms[0].lin_coeff) < 1e-15);
  CHECK(std::abs(terms[0].const_coeff - Complex(1, 0)) < 1e-15);
}

TEST_CASE("partial fractions recombine to 1/(y^2n + p y^n + 1)") {
  for (int n = 2; n <= 5; ++n) {
    for (const Rational& p : {Rational(0), Rational(1), Rational(-1), Rational(3),
                              Rational(-7, 2)}) {
      const auto terms = partial_fractions(n, p);
      REQUIRE(terms.size() == static_cast<std::size_t>(n));
      for (const Complex y : {Complex(0.31, 0.47), Complex(-0.62, 0.28), Complex(1.43, -0.37)}) {
        Complex denominator(1.0, 0.0);
        Complex y_pow_n(1.0, 0.0);
        for (int i = 0; i < n; ++i) y_pow_n *= y;
        denominator = y_pow_n * y_pow_n + rational_to_double(p) * y_pow_n + 1.0;
        const Complex direct = 1.0 / denominator;
        Complex sum(0.0, 0.0);
        for (const auto& term : terms) sum += term_value(term, y);
        CHECK(std::abs(sum - direct) < 1e-9 * (1.0 + std::abs(direct)));
      }
    }
  }
}

TEST_CASE("degenerate factors are rejected") {
  CHECK_THROWS_AS(partial_fractions(2, Rational(2)), RepeatedFactor);
  CHECK_THROWS_AS(partial_fractions(2, Rational(-2)), RepeatedFactor);
  CHECK_THROWS_AS(partial_fractions(0, Rational(1)), PreconditionError);
}

TEST_CASE("antiderivative kinds follow the |alpha| < 2 split") {
  // p = 0, n = 2: both factors have |alpha| = sqrt(2) < 2 (circle terms).
  for (const auto& a : antiderivative_terms(partial_fractions(2, Rational(0)))) {
    CHECK(a.kind == QuadratureKind::circle);
  }
  // p = -7/2, n = 2: both real alphas exceed 2 in magnitude (hyperbola terms).
  for (const auto& a : antiderivative_terms(partial_fractions(2, Rational(-7, 2)))) {
    CHECK(a.kind == QuadratureKind::hyperbola);
  }
  // A hand-made boundary term is rejected.
  std::vector<PartialFractionTerm> boundary = {
      PartialFractionTerm{Complex(2.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0)}};
  CHECK_THROWS_AS(antiderivative_terms(boundary), BoundaryAlpha);
}

TEST_CASE("n = 1, p = 0 antiderivative is arctan") {
  const auto terms = antiderivative_terms(partial_fractions(1, Rational(0)));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].kind == QuadratureKind::circle);
  CHECK(std::abs(terms[0].scale - Complex(2, 0)) < 1e-15);
  CHECK(std::abs(terms[0].amplitude - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(antiderivative_value(terms[0], Complex(1.0, 0.0)) -
                 Complex(std::atan(1.0), 0.0)) < 1e-12);
}

TEST_CASE("differentiating the antiderivative recovers each term") {
  const double h = 1e-6;
  for (int n = 2; n <= 4; ++n) {
    for (const Rational& p : {Rational(0), Rational(1), Rational(3), Rational(-7, 2)}) {
      const auto fractions = partial_fractions(n, p);
      const auto anti = antiderivative_terms(fractions);
      REQUIRE(anti.size() == fractions.size());
      for (std::size_t i = 0; i < anti.size(); ++i) {
        for (const Complex y : {Complex(0.31, 0.47), Complex(-0.22, 0.35),
                                Complex(0.05, -0.61)}) {
          const Complex derivative =
              (antiderivative_value(anti[i], y + Complex(h, 0.0)) -
               antiderivative_value(anti[i], y - Complex(h, 0.0))) /
              Complex(2.0 * h, 0.0);
          const Complex direct = term_value(fractions[i], y);
          CHECK(std::abs(derivative - direct) < 1e-6 * (1.0 + std::abs(direct)));
        }
      }
    }
  }
}
