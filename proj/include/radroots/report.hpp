#pragma once

// Machine-readable report documents and their re-verification.
//
// Every subcommand emits one self-contained JSON object.  Shared
// conventions: rationals are "num/den" strings (plain integers where the
// denominator is 1), complex values are {"re", "im"} with doubles at
// round-trip precision, polynomial coefficient lists are ascending.
// verify_document() re-derives whatever the document claims — resolvent
// coefficients, residual bounds, recombinations — and reports each check.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/moivre.hpp"
#include "radroots/oracle.hpp"
#include "radroots/polynomial.hpp"
#include "radroots/rational.hpp"
#include "radroots/reciprocal.hpp"
#include "radroots/resolvent.hpp"
#include "radroots/power_sums.hpp"

namespace radroots {

using Json = nlohmann::json;

inline Json complex_to_json(const Complex& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Complex complex_from_json(const Json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

inline Json polynomial_to_json(const Polynomial& p, const std::string& variable = "x") {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"variable", variable},
              {"text", polynomial_to_string(p, variable)},
              {"coeffs", std::move(coeffs)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& entry : j.at("coeffs")) {
    coeffs.push_back(rational_from_string(entry.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

/// Solve-style document shared by the solve and moivre subcommands (and by
/// resolvent, which carries no roots).  `form` attaches the (n, alpha, t)
/// parameters when the moivre method produced the report.
inline Json solve_report_to_json(const ResolventReport& report, const std::string& subcommand,
                                 double tolerance, const std::string& variable = "x",
                                 const std::optional<MoivreForm>& form = std::nullopt) {
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = subcommand;
  doc["method"] = method_tag(report.method);
  doc["tolerance"] = tolerance;
  doc["source"] = polynomial_to_json(report.source, variable);
  if (report.resolvent.is_zero() && report.method == Method::numeric) {
    doc["resolvent"] = nullptr;
  } else {
    doc["resolvent"] = polynomial_to_json(report.resolvent, "z");
  }
  Json resolvent_roots = Json::array();
  for (const Complex& z : report.resolvent_roots) resolvent_roots.push_back(complex_to_json(z));
  doc["resolvent_roots"] = std::move(resolvent_roots);
  Json roots = Json::array();
  bool certified = true;
  for (const auto& cert : report.roots) {
    Json root;
    root["closed_form"] = cert.closed_form.render();
    root["re"] = cert.numeric.real();
    root["im"] = cert.numeric.imag();
    root["residual"] = cert.residual;
    certified = certified &&
                cert.residual <= tolerance * residual_scale(report.source, cert.numeric);
    roots.push_back(std::move(root));
  }
  doc["roots"] = std::move(roots);
  doc["diagnostics"] = report.diagnostics;
  doc["certified"] = certified;
  if (form) {
    doc["form"] = Json{{"n", form->n},
                       {"alpha", rational_to_string(form->alpha)},
                       {"t", rational_to_string(form->t)}};
  }
  return doc;
}

/// Numeric-method solve document (no closed forms, no resolvent).
inline Json numeric_report_to_json(const Polynomial& source,
                                   const std::vector<Complex>& roots, double tolerance,
                                   const std::string& variable = "x") {
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "solve";
  doc["method"] = method_tag(Method::numeric);
  doc["tolerance"] = tolerance;
  doc["source"] = polynomial_to_json(source, variable);
  doc["resolvent"] = nullptr;
  doc["resolvent_roots"] = Json::array();
  Json root_array = Json::array();
  bool certified = true;
  for (const Complex& value : roots) {
    Json root;
    root["closed_form"] = nullptr;
    root["re"] = value.real();
    root["im"] = value.imag();
    root["residual"] = residual_at(source, value);
    certified = certified && root["residual"].get<double>() <=
                                 tolerance * residual_scale(source, value);
    root_array.push_back(std::move(root));
  }
  doc["roots"] = std::move(root_array);
  doc["diagnostics"] = Json::array();
  doc["certified"] = certified;
  return doc;
}

struct FactorDocumentEntry {
  Complex alpha;
  std::optional<Rational> exact_alpha;
  std::optional<std::string> closed_form;
};

inline Json reciprocal_report_to_json(const ReciprocalFactorization& factorization,
                                      double tolerance, const std::string& variable = "y") {
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "reciprocal-factor";
  doc["method"] = method_tag(Method::reciprocal);
  doc["tolerance"] = tolerance;
  doc["source"] = polynomial_to_json(factorization.source, variable);
  doc["unit_multiplicity"] = factorization.unit_multiplicity;
  doc["u_equation"] = polynomial_to_json(factorization.u_poly, "u");
  Json factors = Json::array();
  for (const auto& factor : factorization.factors) {
    Json entry;
    entry["alpha"] = complex_to_json(factor.alpha);
    entry["exact_alpha"] =
        factor.exact_alpha ? Json(rational_to_string(*factor.exact_alpha)) : Json(nullptr);
    entry["closed_form"] =
        factor.closed_form ? Json(factor.closed_form->render()) : Json(nullptr);
    factors.push_back(std::move(entry));
  }
  doc["factors"] = std::move(factors);

  // Certification at emit time: the factors recombine to the source.
  bool certified = true;
  for (const Complex probe : {Complex(0.37, 0.62), Complex(-1.11, 0.45), Complex(0.8, -0.9)}) {
    Complex product(1.0, 0.0);
    for (const auto& factor : factorization.factors) {
      product *= probe * probe + factor.alpha * probe + Complex(1.0, 0.0);
    }
    for (int i = 0; i < factorization.unit_multiplicity; ++i) {
      product *= probe + Complex(1.0, 0.0);
    }
    const Complex direct = factorization.source.eval(probe);
    certified = certified &&
                std::abs(product - direct) <= tolerance * 1e3 * (1.0 + std::abs(direct));
  }
  doc["certified"] = certified;
  return doc;
}

inline const char* quadrature_kind_tag(QuadratureKind kind) {
  return kind == QuadratureKind::circle ? "circle" : "hyperbola";
}

inline Json decompose_report_to_json(int n, const Rational& p,
                                     const std::vector<Complex>& alphas,
                                     const std::vector<PartialFractionTerm>& terms,
                                     const std::vector<AntiderivativeTerm>& antiderivatives,
                                     double tolerance) {
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "decompose";
  doc["tolerance"] = tolerance;
  doc["n"] = n;
  doc["p"] = rational_to_string(p);
  doc["u_equation"] = polynomial_to_json(trinomial_u_equation(n, p), "u");
  Json alpha_array = Json::array();
  for (const Complex& alpha : alphas) alpha_array.push_back(complex_to_json(alpha));
  doc["alphas"] = std::move(alpha_array);
  Json term_array = Json::array();
  for (const auto& term : terms) {
    term_array.push_back(Json{{"alpha", complex_to_json(term.alpha)},
                              {"lin_coeff", complex_to_json(term.lin_coeff)},
                              {"const_coeff", complex_to_json(term.const_coeff)}});
  }
  doc["terms"] = std::move(term_array);
  Json anti_array = Json::array();
  for (const auto& anti : antiderivatives) {
    anti_array.push_back(Json{{"alpha", complex_to_json(anti.alpha)},
                              {"log_coeff", complex_to_json(anti.log_coeff)},
                              {"kind", quadrature_kind_tag(anti.kind)},
                              {"amplitude", complex_to_json(anti.amplitude)},
                              {"scale", complex_to_json(anti.scale)}});
  }
  doc["antiderivative"] = std::move(anti_array);
  doc["certified"] = true;
  return doc;
}

inline Json explore_report_to_json(const ExplorationReport& report, const Complex& A,
                                   const Complex& B, const Complex& C, const Complex& D,
                                   const ExplorerOptions& options, double tolerance) {
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "explore-quintic";
  doc["tolerance"] = tolerance;
  doc["n"] = report.n;
  doc["inputs"] = Json{{"A", complex_to_json(A)},
                       {"B", complex_to_json(B)},
                       {"C", complex_to_json(C)},
                       {"D", complex_to_json(D)}};
  doc["pair_products"] =
      Json{{"first", options.first_pair_product ? complex_to_json(*options.first_pair_product)
                                               : Json(nullptr)},
           {"second", options.second_pair_product
                          ? complex_to_json(*options.second_pair_product)
                          : Json(nullptr)}};
  doc["full_enumeration"] = options.full_enumeration;
  Json tuples = Json::array();
  for (const auto& tuple : report.selected_tuples) {
    tuples.push_back(Json::array({tuple.a, tuple.b, tuple.c, tuple.d}));
  }
  doc["selected_tuples"] = std::move(tuples);
  Json values = Json::array();
  for (const Complex& value : report.selected_values) values.push_back(complex_to_json(value));
  doc["selected_values"] = std::move(values);
  if (options.full_enumeration) {
    Json all_tuples = Json::array();
    for (const auto& tuple : report.tuples) {
      all_tuples.push_back(Json::array({tuple.a, tuple.b, tuple.c, tuple.d}));
    }
    doc["tuples"] = std::move(all_tuples);
    Json all_values = Json::array();
    for (const Complex& value : report.values) all_values.push_back(complex_to_json(value));
    doc["values"] = std::move(all_values);
  }
  Json candidate = Json::array();
  for (const Complex& coeff : report.candidate_coeffs) {
    candidate.push_back(complex_to_json(coeff));
  }
  doc["candidate_coeffs"] = std::move(candidate);
  doc["max_imag_coeff"] = report.max_imag_coeff;
  doc["subleading_abs"] = report.subleading_abs;
  doc["certified"] = true;
  return doc;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationResult {
  std::vector<VerificationCheck> checks;
  bool ok = true;

  void add(std::string name, bool pass, std::string detail = "") {
    ok = ok && pass;
    checks.push_back(VerificationCheck{std::move(name), pass, std::move(detail)});
  }
};

namespace detail {

/// Recomputes every root residual of a solve-style document.
inline void verify_residuals(const Json& doc, const Polynomial& source,
                             VerificationResult& result) {
  const double tolerance = doc.at("tolerance").get<double>();
  bool all_ok = true;
  std::string detail;
  for (const auto& root : doc.at("roots")) {
    const Complex value(root.at("re").get<double>(), root.at("im").get<double>());
    const double residual = residual_at(source, value);
    if (!(residual <= tolerance * residual_scale(source, value))) {
      all_ok = false;
      detail = "residual " + double_to_string(residual) + " at " + complex_to_string(value);
      break;
    }
  }
  result.add("root residuals within tolerance", all_ok, detail);
  result.add("root count equals degree",
             !source.is_zero() &&
                 doc.at("roots").size() == static_cast<std::size_t>(source.degree()));
}

/// Re-derives the auxiliary equation a solve document claims.
inline void verify_resolvent_claim(const Json& doc, const Polynomial& source,
                                   VerificationResult& result) {
  const std::string method = doc.at("method").get<std::string>();
  if (method == "numeric") {
    result.add("numeric method carries no auxiliary equation", doc.at("resolvent").is_null());
    return;
  }
  if (doc.at("resolvent").is_null()) {
    result.add("auxiliary equation present", false);
    return;
  }
  const Polynomial stored = polynomial_from_json(doc.at("resolvent"));
  if (method == "linear") {
    result.add("auxiliary equation matches", stored == Polynomial::constant(Rational(1)));
    return;
  }
  if (method == "quadratic") {
    const DepressedForm dep = depress(source);
    const Polynomial expected({dep.poly.coeff(0), Rational(1)});
    result.add("auxiliary equation matches", stored == expected);
    return;
  }
  if (method == "cubic-resolvent") {
    const DepressedForm dep = depress(source);
    result.add("auxiliary equation matches",
               stored == resolvent_of_cubic(-dep.poly.coeff(1), -dep.poly.coeff(0)));
    return;
  }
  if (method == "quartic-resolvent" || method == "quartic-squared-resolvent") {
    const DepressedForm dep = depress(source);
    const Rational a = -dep.poly.coeff(2);
    const Rational b = -dep.poly.coeff(1);
    const Rational c = -dep.poly.coeff(0);
    const Polynomial expected = (method == "quartic-resolvent")
                                    ? resolvent_of_quartic(a, b, c)
                                    : squared_resolvent(a, b, c);
    result.add("auxiliary equation matches", stored == expected);
    return;
  }
  if (method == "moivre") {
    if (!doc.contains("form")) {
      result.add("family parameters present", false);
      return;
    }
    MoivreForm form;
    form.n = doc.at("form").at("n").get<int>();
    form.alpha = rational_from_string(doc.at("form").at("alpha").get<std::string>());
    form.t = rational_from_string(doc.at("form").at("t").get<std::string>());
    result.add("family parameters rebuild the source", build_moivre_poly(form) == source);
    const Rational beta = rational_pow(form.t, static_cast<unsigned>(form.n));
    Polynomial expected;
    if (form.n >= 3) {
      std::vector<Rational> aux(static_cast<std::size_t>(form.n), Rational(0));
      aux[static_cast<std::size_t>(form.n - 1)] = 1;
      aux[static_cast<std::size_t>(form.n - 2)] = -form.alpha;
      aux[static_cast<std::size_t>(form.n - 3)] += beta;
      expected = Polynomial(std::move(aux));
    } else {
      expected = Polynomial({beta, -form.alpha, Rational(1)});
    }
    result.add("auxiliary equation matches", stored == expected);
    return;
  }
  if (method == "reciprocal") {
    // The auxiliary equation is the u-equation of the even palindromic part.
    Polynomial even_part = source;
    if (!even_part.is_monic()) {
      even_part = (Rational(1) / even_part.lead()) * even_part;
    }
    const Polynomial unit({Rational(1), Rational(1)});
    while (!even_part.is_zero() && even_part.degree() % 2 == 1) {
      auto [quotient, remainder] = even_part.divmod(unit);
      if (!remainder.is_zero()) {
        result.add("odd palindrome divides by y + 1", false);
        return;
      }
      even_part = std::move(quotient);
    }
    if (even_part.is_zero() || even_part.degree() < 2) {
      result.add("auxiliary equation matches", stored == Polynomial::constant(Rational(1)));
      return;
    }
    result.add("auxiliary equation matches", stored == u_equation(even_part));
    return;
  }
  result.add("method recognised", false, method);
}

inline void verify_solve_document(const Json& doc, VerificationResult& result) {
  const Polynomial source = polynomial_from_json(doc.at("source"));
  verify_residuals(doc, source, result);
  verify_resolvent_claim(doc, source, result);
  result.add("document is marked certified",
             doc.at("certified").is_boolean() && doc.at("certified").get<bool>());
}

inline void verify_resolvent_document(const Json& doc, VerificationResult& result) {
  const Polynomial source = polynomial_from_json(doc.at("source"));
  const Polynomial stored = polynomial_from_json(doc.at("resolvent"));
  const std::string kind = doc.at("kind").get<std::string>();
  const DepressedForm dep = depress(source);
  Polynomial expected;
  if (kind == "cubic") {
    if (source.degree() != 3) {
      result.add("source degree matches kind", false);
      return;
    }
    expected = resolvent_of_cubic(-dep.poly.coeff(1), -dep.poly.coeff(0));
  } else if (kind == "quartic" || kind == "squared") {
    if (source.degree() != 4) {
      result.add("source degree matches kind", false);
      return;
    }
    const Rational a = -dep.poly.coeff(2);
    const Rational b = -dep.poly.coeff(1);
    const Rational c = -dep.poly.coeff(0);
    expected = (kind == "quartic") ? resolvent_of_quartic(a, b, c) : squared_resolvent(a, b, c);
  } else {
    result.add("kind recognised", false, kind);
    return;
  }
  result.add("resolvent coefficients match", stored == expected);
}

inline void verify_reciprocal_document(const Json& doc, VerificationResult& result) {
  const Polynomial source = polynomial_from_json(doc.at("source"));
  const double tolerance = doc.at("tolerance").get<double>();
  const int unit_multiplicity = doc.at("unit_multiplicity").get<int>();

  // Re-derive the u-equation.
  Polynomial even_part = source;
  const Polynomial unit({Rational(1), Rational(1)});
  bool unit_division_ok = true;
  for (int i = 0; i < unit_multiplicity; ++i) {
    auto [quotient, remainder] = even_part.divmod(unit);
    if (!remainder.is_zero()) {
      unit_division_ok = false;
      break;
    }
    even_part = std::move(quotient);
  }
  result.add("unit factors divide the source", unit_division_ok);
  if (!unit_division_ok) return;
  if (even_part.degree() >= 2) {
    result.add("u-equation matches",
               polynomial_from_json(doc.at("u_equation")) == u_equation(even_part));
  } else {
    result.add("u-equation matches", polynomial_from_json(doc.at("u_equation")) ==
                                         Polynomial::constant(Rational(1)));
  }

  // Exact recombination when every alpha is exact, numeric otherwise.
  bool all_exact = true;
  std::vector<Complex> alphas;
  Polynomial exact_product = Polynomial::constant(Rational(1));
  for (const auto& factor : doc.at("factors")) {
    alphas.push_back(complex_from_json(factor.at("alpha")));
    if (factor.at("exact_alpha").is_null()) {
      all_exact = false;
    } else if (all_exact) {
      const Rational alpha = rational_from_string(factor.at("exact_alpha").get<std::string>());
      exact_product = exact_product * Polynomial({Rational(1), alpha, Rational(1)});
    }
  }
  if (all_exact) {
    for (int i = 0; i < unit_multiplicity; ++i) exact_product = exact_product * unit;
    result.add("factors recombine to the source (exact)", exact_product == source);
  } else {
    bool recombine_ok = true;
    for (const Complex probe :
         {Complex(0.37, 0.62), Complex(-1.11, 0.45), Complex(0.8, -0.9)}) {
      Complex product(1.0, 0.0);
      for (const Complex& alpha : alphas) {
        product *= probe * probe + alpha * probe + Complex(1.0, 0.0);
      }
      for (int i = 0; i < unit_multiplicity; ++i) product *= probe + Complex(1.0, 0.0);
      const Complex direct = source.eval(probe);
      if (!(std::abs(product - direct) <= tolerance * 1e3 * (1.0 + std::abs(direct)))) {
        recombine_ok = false;
        break;
      }
    }
    result.add("factors recombine to the source (numeric)", recombine_ok);
  }
}

inline void verify_decompose_document(const Json& doc, VerificationResult& result) {
  const int n = doc.at("n").get<int>();
  const Rational p = rational_from_string(doc.at("p").get<std::string>());
  result.add("u-equation matches",
             polynomial_from_json(doc.at("u_equation")) == trinomial_u_equation(n, p));

  std::vector<PartialFractionTerm> terms;
  for (const auto& term : doc.at("terms")) {
    terms.push_back(PartialFractionTerm{complex_from_json(term.at("alpha")),
                                        complex_from_json(term.at("lin_coeff")),
                                        complex_from_json(term.at("const_coeff"))});
  }
  const double pd = rational_to_double(p);
  bool recombine_ok = !terms.empty();
  for (const Complex probe : {Complex(0.31, 0.47), Complex(-0.62, 0.28), Complex(1.43, -0.37),
                              Complex(0.05, -0.61)}) {
    Complex y_pow_n(1.0, 0.0);
    for (int i = 0; i < n; ++i) y_pow_n *= probe;
    const Complex direct = 1.0 / (y_pow_n * y_pow_n + pd * y_pow_n + 1.0);
    Complex total(0.0, 0.0);
    for (const auto& term : terms) total += term_value(term, probe);
    if (!(std::abs(total - direct) <= 1e-9 * (1.0 + std::abs(direct)))) {
      recombine_ok = false;
      break;
    }
  }
  result.add("partial fractions recombine", recombine_ok);

  std::vector<AntiderivativeTerm> antiderivatives;
  for (const auto& anti : doc.at("antiderivative")) {
    AntiderivativeTerm a;
    a.alpha = complex_from_json(anti.at("alpha"));
    a.log_coeff = complex_from_json(anti.at("log_coeff"));
    a.kind = anti.at("kind").get<std::string>() == "circle" ? QuadratureKind::circle
                                                            : QuadratureKind::hyperbola;
    a.amplitude = complex_from_json(anti.at("amplitude"));
    a.scale = complex_from_json(anti.at("scale"));
    antiderivatives.push_back(a);
  }
  bool derivative_ok = antiderivatives.size() == terms.size();
  const double h = 1e-6;
  for (std::size_t i = 0; derivative_ok && i < antiderivatives.size(); ++i) {
    for (const Complex probe : {Complex(0.31, 0.47), Complex(-0.22, 0.35)}) {
      const Complex derivative = (antiderivative_value(antiderivatives[i], probe + Complex(h, 0)) -
                                  antiderivative_value(antiderivatives[i], probe - Complex(h, 0))) /
                                 Complex(2.0 * h, 0.0);
      const Complex direct = term_value(terms[i], probe);
      if (!(std::abs(derivative - direct) <= 1e-6 * (1.0 + std::abs(direct)))) {
        derivative_ok = false;
        break;
      }
    }
  }
  result.add("antiderivatives differentiate back to the terms", derivative_ok);
}

inline void verify_explore_document(const Json& doc, VerificationResult& result) {
  const int n = doc.at("n").get<int>();
  std::vector<Complex> selected;
  for (const auto& value : doc.at("selected_values")) {
    selected.push_back(complex_from_json(value));
  }
  result.add("selected branch count equals n",
             selected.size() == static_cast<std::size_t>(n));
  result.add("selected tuples are the paired diagonal",
             doc.at("selected_tuples").size() == static_cast<std::size_t>(n));

  const auto expected = cpoly_from_roots(selected);
  std::vector<Complex> stored;
  for (const auto& coeff : doc.at("candidate_coeffs")) {
    stored.push_back(complex_from_json(coeff));
  }
  bool candidate_ok = stored.size() == expected.size();
  double scale = 1.0;
  for (const Complex& c : expected) scale = std::max(scale, std::abs(c));
  for (std::size_t i = 0; candidate_ok && i < stored.size(); ++i) {
    candidate_ok = std::abs(stored[i] - expected[i]) <= 1e-9 * scale;
  }
  result.add("candidate expands the selected values", candidate_ok);
}

}  // namespace detail

/// Re-derives and re-checks everything a report document claims.  Unknown
/// subcommands and malformed documents fail verification rather than throw,
/// except for JSON type errors which surface as ParseError.
inline VerificationResult verify_document(const Json& doc) {
  VerificationResult result;
  try {
    if (!doc.contains("tool") || doc.at("tool") != "radroots") {
      result.add("document was produced by this tool", false);
      return result;
    }
    const std::string subcommand = doc.at("subcommand").get<std::string>();
    if (subcommand == "solve" || subcommand == "moivre") {
      detail::verify_solve_document(doc, result);
    } else if (subcommand == "resolvent") {
      detail::verify_resolvent_document(doc, result);
    } else if (subcommand == "reciprocal-factor") {
      detail::verify_reciprocal_document(doc, result);
    } else if (subcommand == "decompose") {
      detail::verify_decompose_document(doc, result);
    } else if (subcommand == "explore-quintic") {
      detail::verify_explore_document(doc, result);
    } else if (subcommand == "verify") {
      result.add("verification document reports success",
                 doc.contains("ok") && doc.at("ok").is_boolean() && doc.at("ok").get<bool>());
    } else {
      result.add("subcommand recognised", false, subcommand);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report document: ") + e.what());
  }
  return result;
}

inline Json verification_to_json(const VerificationResult& result,
                                 const std::string& target_subcommand) {
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "verify";
  doc["target_subcommand"] = target_subcommand;
  Json checks = Json::array();
  for (const auto& check : result.checks) {
    Json entry;
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    if (!check.detail.empty()) entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  doc["ok"] = result.ok;
  return doc;
}

}  // namespace radroots
