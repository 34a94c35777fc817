// Exact rational scalars, polynomial arithmetic, depression, palindromes,
// and the text round trip.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "radroots/parse.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/rational.hpp"

using namespace radroots;

namespace {

Polynomial poly(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Rational random_rational(std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<long long> num(-height, height);
  std::uniform_int_distribution<long long> den(1, height);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rationals are canonical: reduced with positive denominator") {
  const Rational r = make_rational(6, -4);
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 2);
  CHECK(rational_to_string(r) == "-3/2");
  CHECK(rational_to_string(Rational(14, 7)) == "2");
  CHECK(rational_from_string("-3/2") == r);
  CHECK(rational_from_string("7") == Rational(7));
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a/b"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(20260824);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng, 1000);
    const Rational b = random_rational(rng, 1000);
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (b != 0) CHECK((a / b) * b == a);
  }
  CHECK(rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(rational_pow(Rational(5), 0) == 1);
  CHECK(rational_height(Rational(-3, 7)) == 7);
  CHECK(rational_height(Rational(22, 7)) == 22);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(12, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("zero polynomial has no degree; normalization drops trailing zeros") {
  const Polynomial zero;
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.degree(), DegreeTooLow);
  const Polynomial trimmed(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(trimmed.degree() == 0);
  CHECK(poly({0, 0}).is_zero());
}

TEST_CASE("evaluation: x^3 - 6x - 9 vanishes at 3") {
  const Polynomial p = poly({-9, -6, 0, 1});
  CHECK(p.eval_exact(Rational(3)) == 0);
  CHECK(p.eval(Complex(3.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(p.eval_exact(Rational(1, 2)) == Rational(-95, 8));
}

TEST_CASE("product of palindromic factors: (y^2+y+1)(y^2+2y+1)") {
  const Polynomial product = poly({1, 1, 1}) * poly({1, 2, 1});
  CHECK(product == poly({1, 3, 4, 3, 1}));
  CHECK(product.is_palindromic());
}

TEST_CASE("division: y^3 + 1 by y + 1") {
  const auto [quotient, remainder] = poly({1, 0, 0, 1}).divmod(poly({1, 1}));
  CHECK(quotient == poly({1, -1, 1}));
  CHECK(remainder.is_zero());
  CHECK_THROWS_AS(poly({1, 1}).divmod(Polynomial()), DivisionByZeroPolynomial);
}

TEST_CASE("divmod identity on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> pc, dc;
    std::uniform_int_distribution<int> degree_dist(0, 6);
    const int pd = degree_dist(rng), dd = degree_dist(rng);
    for (int i = 0; i <= pd; ++i) pc.push_back(random_rational(rng, 20));
    for (int i = 0; i <= dd; ++i) dc.push_back(random_rational(rng, 20));
    const Polynomial p(pc), d(dc);
    if (d.is_zero()) continue;
    const auto [q, r] = p.divmod(d);
    CHECK(q * d + r == p);
    if (!r.is_zero()) CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("depression removes the subleading term") {
  // (x+1)^3 = x^3 + 3x^2 + 3x + 1 depresses to y^3 with shift -1.
  const auto dep = depress(poly({1, 3, 3, 1}));
  CHECK(dep.poly == poly({0, 0, 0, 1}));
  CHECK(dep.shift == Rational(-1));

  // 2x^2 + 4x + 2 depresses to y^2 (monic) with shift -1.
  const auto dep2 = depress(poly({2, 4, 2}));
  CHECK(dep2.poly == poly({0, 0, 1}));
  CHECK(dep2.shift == Rational(-1));

  CHECK_THROWS_AS(depress(poly({1, 1})), DegreeTooLow);
}

TEST_CASE("depression root correspondence on random cubics") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) c.push_back(random_rational(rng, 30));
    if (c[3] == 0) c[3] = 1;
    const Polynomial p(c);
    const auto dep = depress(p);
    CHECK(dep.poly.coeff(dep.poly.degree() - 1) == 0);
    CHECK(dep.poly.is_monic());
    // p(x + shift) == lead * q(x) at exact sample points.
    for (long long sample = -3; sample <= 3; ++sample) {
      const Rational x(sample);
      CHECK(p.eval_exact(x + dep.shift) == p.lead() * dep.poly.eval_exact(x));
    }
  }
}

TEST_CASE("palindrome detection") {
  CHECK(poly({1, 3, 4, 3, 1}).is_palindromic());
  CHECK(poly({1, 3, 3, 1}).is_palindromic());     // odd degree
  CHECK_FALSE(poly({1, 2, 3}).is_palindromic());
  CHECK(poly({5}).is_palindromic());
  CHECK(Polynomial().is_palindromic());
}

TEST_CASE("parsing the worked expressions") {
  CHECK(parse_polynomial("x^3 - 6x - 9").poly == poly({-9, -6, 0, 1}));
  CHECK(parse_polynomial("x^4 - 28x^2 - 48x").poly == poly({0, -48, -28, 0, 1}));
  const auto src = parse_polynomial("y^4 + 3y^3 + 4y^2 + 3y + 1");
  CHECK(src.poly == poly({1, 3, 4, 3, 1}));
  CHECK(src.variable == "y");
  CHECK(parse_polynomial("1/2x^2 - 3").poly ==
        Polynomial({Rational(-3), Rational(0), Rational(1, 2)}));
  CHECK(parse_polynomial("3*x + 1").poly == poly({1, 3}));
  CHECK(parse_polynomial("-x + 7").poly == poly({7, -1}));
  CHECK(parse_polynomial("x + x + 1").poly == poly({1, 2}));  // like terms combine
  CHECK(parse_polynomial("42").poly == poly({42}));
  CHECK(parse_polynomial("  x ^ 2  -  1 ").poly == poly({-1, 0, 1}));
}

TEST_CASE("parse errors carry positions; mixed variables are rejected") {
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("3//2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x y"), MixedVariables);
  CHECK_THROWS_AS(parse_polynomial("x^2 + y"), MixedVariables);
  CHECK_THROWS_AS(parse_polynomial("xy"), ParseError);
  try {
    parse_polynomial("x^2 + y");
    FAIL("expected MixedVariables");
  } catch (const MixedVariables& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("canonical text round trip") {
  const std::vector<std::string> corpus = {
      "x^3 - 6x - 9", "x^4 - 28x^2 - 48x", "y^4 + 3y^3 + 4y^2 + 3y + 1",
      "1/2x^2 - 3",   "-x + 7",            "42",
      "x^5 - 5x^3 + 5x - 2",
  };
  for (const auto& text : corpus) {
    const auto first = parse_polynomial(text);
    const std::string canonical = polynomial_to_string(first.poly, first.variable);
    const auto second = parse_polynomial(canonical);
    CHECK(second.poly == first.poly);
    CHECK(polynomial_to_string(second.poly, second.variable) == canonical);
  }
  CHECK(polynomial_to_string(poly({-9, -6, 0, 1})) == "x^3 - 6x - 9");
  CHECK(polynomial_to_string(Polynomial()) == "0");
  CHECK(polynomial_to_string(poly({0, -1})) == "-x");
}

TEST_CASE("residual scale grows with |x| above 1") {
  const Polynomial p = poly({-9, -6, 0, 1});
  CHECK(residual_scale(p, Complex(0.5, 0.0)) == Catch::Approx(16.0));
  CHECK(residual_scale(p, Complex(2.0, 0.0)) == Catch::Approx(9 + 6 * 2 + 8.0));
}
