// Command-line driver.
//
// Subcommands: solve, resolvent, reciprocal-factor, moivre, decompose,
// verify, explore-quintic.  Default output is a human-readable table;
// --json emits the machine-readable report document (see
// docs/output-schema.md).  Exit codes: 0 success, 2 parse error, 3 method
// precondition violated, 4 certification failure, 5 numeric non-convergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "radroots/radroots.hpp"

namespace {

using radroots::Complex;
using radroots::Json;
using radroots::Polynomial;
using radroots::Rational;

struct GlobalOptions {
  bool json = false;
  double tol = 1e-9;
  int max_n = 16;
  std::string branch_convention = "principal";
  std::string out_path;
};

struct PolyInput {
  Polynomial poly;
  std::string variable;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) out.push_back(piece);
  return out;
}

PolyInput read_poly_input(const std::string& expr, const std::vector<std::string>& coeffs) {
  if (!expr.empty() && !coeffs.empty()) {
    throw radroots::ParseError("give either a polynomial expression or --coeffs, not both");
  }
  if (expr.empty() && coeffs.empty()) {
    throw radroots::ParseError("missing polynomial: pass an expression or --coeffs");
  }
  if (!expr.empty()) {
    radroots::PolySource source = radroots::parse_polynomial(expr);
    return PolyInput{std::move(source.poly), std::move(source.variable)};
  }
  std::vector<Rational> values;
  for (const std::string& token : coeffs) {
    for (const std::string& piece : split_commas(token)) {
      if (!piece.empty()) values.push_back(radroots::rational_from_string(piece));
    }
  }
  if (values.empty()) throw radroots::ParseError("--coeffs needs at least one coefficient");
  return PolyInput{Polynomial(std::move(values)), "x"};
}

Complex parse_complex(const std::string& text) {
  const auto pieces = split_commas(text);
  if (pieces.empty() || pieces.size() > 2) {
    throw radroots::ParseError("complex value must be \"re\" or \"re,im\": " + text);
  }
  try {
    const double re = std::stod(pieces[0]);
    const double im = pieces.size() == 2 ? std::stod(pieces[1]) : 0.0;
    return Complex(re, im);
  } catch (const std::exception&) {
    throw radroots::ParseError("bad complex value: " + text);
  }
}

void write_output(const std::string& text, const GlobalOptions& g) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path);
  if (!out) throw radroots::Error("cannot open output file: " + g.out_path);
  out << text;
}

// ---------------------------------------------------------------------------
// Human-readable rendering (driven by the JSON document so the two output
// modes can never disagree).
// ---------------------------------------------------------------------------

std::string human_complex(const Json& j) {
  return radroots::complex_to_string(radroots::complex_from_json(j));
}

std::string human_poly(const Json& j) { return j.at("text").get<std::string>(); }

std::string human_solve(const Json& doc) {
  std::ostringstream out;
  out << "method       " << doc.at("method").get<std::string>() << "\n";
  out << "source       " << human_poly(doc.at("source")) << "\n";
  if (!doc.at("resolvent").is_null()) {
    out << "auxiliary    " << human_poly(doc.at("resolvent")) << "\n";
    if (!doc.at("resolvent_roots").empty()) {
      out << "aux roots    ";
      bool first = true;
      for (const auto& z : doc.at("resolvent_roots")) {
        if (!first) out << ",  ";
        out << human_complex(z);
        first = false;
      }
      out << "\n";
    }
  }
  if (doc.contains("form")) {
    out << "family       n = " << doc.at("form").at("n").get<int>() << ", alpha = "
        << doc.at("form").at("alpha").get<std::string>() << ", t = "
        << doc.at("form").at("t").get<std::string>() << "\n";
  }
  out << "roots\n";
  for (const auto& root : doc.at("roots")) {
    const Complex value(root.at("re").get<double>(), root.at("im").get<double>());
    if (!root.at("closed_form").is_null()) {
      out << "  " << root.at("closed_form").get<std::string>() << "\n";
      out << "    = " << radroots::complex_to_string(value) << "   (residual "
          << radroots::double_to_string(root.at("residual").get<double>()) << ")\n";
    } else {
      out << "  " << radroots::complex_to_string(value) << "   (residual "
          << radroots::double_to_string(root.at("residual").get<double>()) << ")\n";
    }
  }
  for (const auto& diag : doc.at("diagnostics")) {
    out << "note         " << diag.get<std::string>() << "\n";
  }
  out << "certified    " << (doc.at("certified").get<bool>() ? "yes" : "NO")
      << " (tolerance " << radroots::double_to_string(doc.at("tolerance").get<double>())
      << ")\n";
  return out.str();
}

std::string human_resolvent(const Json& doc) {
  std::ostringstream out;
  out << "kind         " << doc.at("kind").get<std::string>() << "\n";
  out << "source       " << human_poly(doc.at("source")) << "\n";
  out << "resolvent    " << human_poly(doc.at("resolvent")) << "\n";
  for (const auto& diag : doc.at("diagnostics")) {
    out << "note         " << diag.get<std::string>() << "\n";
  }
  return out.str();
}

std::string human_reciprocal(const Json& doc) {
  std::ostringstream out;
  out << "source       " << human_poly(doc.at("source")) << "\n";
  out << "u-equation   " << human_poly(doc.at("u_equation")) << "\n";
  const int units = doc.at("unit_multiplicity").get<int>();
  const std::string variable = doc.at("source").at("variable").get<std::string>();
  out << "factors\n";
  for (int i = 0; i < units; ++i) out << "  (" << variable << " + 1)\n";
  for (const auto& factor : doc.at("factors")) {
    out << "  (" << variable << "^2 + alpha*" << variable << " + 1) with alpha = ";
    if (!factor.at("exact_alpha").is_null()) {
      out << factor.at("exact_alpha").get<std::string>();
    } else if (!factor.at("closed_form").is_null()) {
      out << factor.at("closed_form").get<std::string>() << " = "
          << human_complex(factor.at("alpha"));
    } else {
      out << human_complex(factor.at("alpha"));
    }
    out << "\n";
  }
  out << "certified    " << (doc.at("certified").get<bool>() ? "yes" : "NO") << "\n";
  return out.str();
}

std::string human_decompose(const Json& doc) {
  std::ostringstream out;
  const int n = doc.at("n").get<int>();
  out << "integrand    1 / (y^" << 2 * n << " + " << doc.at("p").get<std::string>()
      << "*y^" << n << " + 1)\n";
  out << "u-equation   " << human_poly(doc.at("u_equation")) << "\n";
  out << "partial fractions\n";
  for (const auto& term : doc.at("terms")) {
    out << "  (" << human_complex(term.at("lin_coeff")) << ")*y + ("
        << human_complex(term.at("const_coeff")) << ")  over  y^2 + ("
        << human_complex(term.at("alpha")) << ")*y + 1\n";
  }
  out << "antiderivative terms\n";
  for (const auto& anti : doc.at("antiderivative")) {
    const std::string alpha = human_complex(anti.at("alpha"));
    out << "  (" << human_complex(anti.at("log_coeff")) << ")*log(y^2 + (" << alpha
        << ")*y + 1) + (" << human_complex(anti.at("amplitude")) << ")*"
        << (anti.at("kind").get<std::string>() == "circle" ? "atan" : "atanh")
        << "((2y + (" << alpha << ")) / (" << human_complex(anti.at("scale")) << "))\n";
  }
  return out.str();
}

std::string human_explore(const Json& doc) {
  std::ostringstream out;
  out << "n                 " << doc.at("n").get<int>() << "\n";
  out << "inputs            A = " << human_complex(doc.at("inputs").at("A"))
      << ", B = " << human_complex(doc.at("inputs").at("B"))
      << ", C = " << human_complex(doc.at("inputs").at("C"))
      << ", D = " << human_complex(doc.at("inputs").at("D")) << "\n";
  out << "selected branch sums (paired diagonal)\n";
  const auto& tuples = doc.at("selected_tuples");
  const auto& values = doc.at("selected_values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << "  (" << tuples[i][0].get<int>() << "," << tuples[i][1].get<int>() << ","
        << tuples[i][2].get<int>() << "," << tuples[i][3].get<int>() << ")  "
        << human_complex(values[i]) << "\n";
  }
  out << "candidate polynomial coefficients (ascending)\n";
  for (const auto& coeff : doc.at("candidate_coeffs")) {
    out << "  " << human_complex(coeff) << "\n";
  }
  out << "max |imag coeff|  "
      << radroots::double_to_string(doc.at("max_imag_coeff").get<double>()) << "\n";
  out << "|coeff of x^(n-1)| "
      << radroots::double_to_string(doc.at("subleading_abs").get<double>()) << "\n";
  if (doc.contains("tuples")) {
    out << "full enumeration  " << doc.at("tuples").size() << " branch tuples recorded\n";
  }
  return out.str();
}

std::string human_verify(const Json& doc) {
  std::ostringstream out;
  out << "target       " << doc.at("target_subcommand").get<std::string>() << "\n";
  for (const auto& check : doc.at("checks")) {
    out << (check.at("pass").get<bool>() ? "  [PASS] " : "  [FAIL] ")
        << check.at("name").get<std::string>();
    if (check.contains("detail")) out << "  (" << check.at("detail").get<std::string>() << ")";
    out << "\n";
  }
  out << (doc.at("ok").get<bool>() ? "verified" : "VERIFICATION FAILED") << "\n";
  return out.str();
}

int emit(const Json& doc, const GlobalOptions& g,
         std::string (*human)(const Json&)) {
  if (g.json) {
    write_output(doc.dump(2) + "\n", g);
  } else {
    write_output(human(doc), g);
  }
  const bool certified = !doc.contains("certified") || doc.at("certified").get<bool>();
  const bool ok = !doc.contains("ok") || doc.at("ok").get<bool>();
  return (certified && ok) ? 0 : 4;
}

// ---------------------------------------------------------------------------
// Degree >= 5 solve paths
// ---------------------------------------------------------------------------

/// Solve document for a monic palindromic polynomial via unit-quadratic
/// factors.  Roots of y^2 + alpha*y + 1 are written (-alpha +- sqrt(alpha^2
/// - 4)) / 2 when alpha itself has a closed form; the smaller root is
/// stabilised through the exact product 1 of each factor's pair.
Json palindrome_solve_document(const Polynomial& p, const std::string& variable,
                               const GlobalOptions& g,
                               const std::vector<std::string>& extra_diagnostics) {
  const radroots::ReciprocalFactorization fac = radroots::factor_reciprocal(p, g.max_n);
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "solve";
  doc["method"] = radroots::method_tag(radroots::Method::reciprocal);
  doc["tolerance"] = g.tol;
  doc["source"] = radroots::polynomial_to_json(p, variable);
  doc["resolvent"] = radroots::polynomial_to_json(fac.u_poly, "u");
  Json aux_roots = Json::array();
  for (const auto& factor : fac.factors) {
    // The u-equation's roots are exactly the alpha values of the factors.
    aux_roots.push_back(radroots::complex_to_json(factor.alpha));
  }
  doc["resolvent_roots"] = std::move(aux_roots);

  Json roots = Json::array();
  bool certified = true;
  const auto push_root = [&](const std::optional<std::string>& closed_form,
                             const Complex& value) {
    const double residual = radroots::residual_at(p, value);
    certified = certified && residual <= g.tol * radroots::residual_scale(p, value);
    Json root;
    root["closed_form"] = closed_form ? Json(*closed_form) : Json(nullptr);
    root["re"] = value.real();
    root["im"] = value.imag();
    root["residual"] = residual;
    roots.push_back(std::move(root));
  };
  for (int i = 0; i < fac.unit_multiplicity; ++i) {
    push_root(std::string("-1"), Complex(-1.0, 0.0));
  }
  for (const auto& factor : fac.factors) {
    const Complex alpha = factor.alpha;
    const Complex s = radroots::nth_root(alpha * alpha - Complex(4.0, 0.0), 2, 0);
    Complex y_plus = 0.5 * (-alpha + s);
    Complex y_minus = 0.5 * (-alpha - s);
    if (std::abs(y_plus) >= std::abs(y_minus)) {
      if (std::abs(y_plus) > 0) y_minus = 1.0 / y_plus;
    } else {
      y_plus = 1.0 / y_minus;
    }
    std::optional<std::string> plus_form;
    std::optional<std::string> minus_form;
    if (factor.closed_form) {
      const radroots::RadicalExpr alpha_tree = *factor.closed_form;
      const radroots::RadicalExpr disc = radroots::RadicalExpr::sum(
          {radroots::RadicalExpr::product({alpha_tree, alpha_tree}),
           radroots::RadicalExpr::integer(-4)});
      const radroots::RadicalExpr s_tree = radroots::RadicalExpr::root(2, disc, 0);
      const Rational half(1, 2);
      const radroots::RadicalExpr plus_tree = radroots::RadicalExpr::scale(
          half, radroots::RadicalExpr::sum({radroots::RadicalExpr::negate(alpha_tree), s_tree}));
      const radroots::RadicalExpr minus_tree = radroots::RadicalExpr::scale(
          half, radroots::RadicalExpr::sum({radroots::RadicalExpr::negate(alpha_tree),
                                            radroots::RadicalExpr::negate(s_tree)}));
      if (std::abs(plus_tree.eval() - y_plus) <= 1e-6 * (1.0 + std::abs(y_plus)) &&
          std::abs(minus_tree.eval() - y_minus) <= 1e-6 * (1.0 + std::abs(y_minus))) {
        plus_form = plus_tree.render();
        minus_form = minus_tree.render();
      }
    }
    push_root(plus_form, y_plus);
    push_root(minus_form, y_minus);
  }
  doc["roots"] = std::move(roots);
  Json diagnostics = Json::array();
  for (const std::string& diag : extra_diagnostics) diagnostics.push_back(diag);
  doc["diagnostics"] = std::move(diagnostics);
  doc["certified"] = certified;
  return doc;
}

// ---------------------------------------------------------------------------
// Subcommand handlers
// ---------------------------------------------------------------------------

int run_solve(const std::string& expr, const std::vector<std::string>& coeffs,
              const std::string& method, const GlobalOptions& g) {
  PolyInput input = read_poly_input(expr, coeffs);
  const Polynomial& p = input.poly;
  if (p.is_zero() || p.degree() < 1) {
    throw radroots::DegreeTooLow("solving requires degree >= 1");
  }

  if (p.degree() <= 4) {
    if (method == "squared") {
      const radroots::ResolventReport report = radroots::solve_closed_form_squared(p);
      return emit(radroots::solve_report_to_json(report, "solve", g.tol, input.variable),
                  g, human_solve);
    }
    const radroots::ResolventReport report = radroots::solve_closed_form(p);
    return emit(radroots::solve_report_to_json(report, "solve", g.tol, input.variable), g,
                human_solve);
  }
  if (method == "squared") {
    throw radroots::DegreeMismatch("--method squared applies to quartics only");
  }

  // Degree >= 5: special family first, palindrome second, numeric last.
  Polynomial working = p;
  std::vector<std::string> diagnostics;
  if (!working.is_monic()) {
    working = (Rational(1) / working.lead()) * working;
    diagnostics.push_back("input scaled to a monic polynomial; the roots are unchanged");
  }
  if (const auto form = radroots::detect_moivre(working)) {
    if (form->n > g.max_n) {
      throw radroots::DegreeUnsupported("family order exceeds --max-n");
    }
    radroots::ResolventReport report = radroots::solve_moivre(*form);
    for (const std::string& diag : diagnostics) report.diagnostics.push_back(diag);
    return emit(radroots::solve_report_to_json(report, "solve", g.tol, input.variable, *form),
                g, human_solve);
  }
  if (working.is_palindromic()) {
    return emit(palindrome_solve_document(working, input.variable, g, diagnostics), g,
                human_solve);
  }
  diagnostics.push_back(
      "no closed-form method applies at this degree; roots are numeric only");
  const std::vector<Complex> roots = radroots::find_roots_numeric(p);
  Json doc = radroots::numeric_report_to_json(p, roots, g.tol, input.variable);
  for (const std::string& diag : diagnostics) doc["diagnostics"].push_back(diag);
  return emit(doc, g, human_solve);
}

int run_resolvent(const std::string& expr, const std::vector<std::string>& coeffs,
                  const std::string& kind, const GlobalOptions& g) {
  PolyInput input = read_poly_input(expr, coeffs);
  const Polynomial& p = input.poly;
  Json doc;
  doc["tool"] = "radroots";
  doc["subcommand"] = "resolvent";
  doc["kind"] = kind;
  doc["tolerance"] = g.tol;
  doc["source"] = radroots::polynomial_to_json(p, input.variable);
  Json diagnostics = Json::array();

  const radroots::DepressedForm dep = radroots::depress(p);
  if (dep.shift != 0) {
    diagnostics.push_back("the resolvent refers to the depressed form " +
                          radroots::polynomial_to_string(dep.poly, input.variable));
  }
  Polynomial resolvent;
  if (kind == "cubic") {
    if (p.degree() != 3) throw radroots::DegreeMismatch("kind 'cubic' requires degree 3");
    resolvent = radroots::resolvent_of_cubic(-dep.poly.coeff(1), -dep.poly.coeff(0));
  } else {
    if (p.degree() != 4) {
      throw radroots::DegreeMismatch("kind '" + kind + "' requires degree 4");
    }
    const Rational a = -dep.poly.coeff(2);
    const Rational b = -dep.poly.coeff(1);
    const Rational c = -dep.poly.coeff(0);
    resolvent = (kind == "quartic") ? radroots::resolvent_of_quartic(a, b, c)
                                    : radroots::squared_resolvent(a, b, c);
  }
  doc["resolvent"] = radroots::polynomial_to_json(resolvent, "z");
  doc["diagnostics"] = std::move(diagnostics);
  doc["certified"] = true;
  return emit(doc, g, human_resolvent);
}

int run_reciprocal(const std::string& expr, const std::vector<std::string>& coeffs,
                   const GlobalOptions& g) {
  PolyInput input = read_poly_input(expr, coeffs);
  const radroots::ReciprocalFactorization fac =
      radroots::factor_reciprocal(input.poly, g.max_n);
  return emit(radroots::reciprocal_report_to_json(fac, g.tol, input.variable), g,
              human_reciprocal);
}

int run_moivre(const std::string& expr, const std::vector<std::string>& coeffs,
               std::optional<int> n, const std::string& alpha, const std::string& t,
               const GlobalOptions& g) {
  radroots::MoivreForm form;
  std::string variable = "x";
  if (n) {
    if (!expr.empty() || !coeffs.empty()) {
      throw radroots::ParseError("give either a polynomial or --n/--alpha/--t, not both");
    }
    form.n = *n;
    form.alpha = radroots::rational_from_string(alpha.empty() ? "0" : alpha);
    form.t = radroots::rational_from_string(t.empty() ? "0" : t);
  } else {
    PolyInput input = read_poly_input(expr, coeffs);
    variable = input.variable;
    const auto detected = radroots::detect_moivre(input.poly);
    if (!detected) {
      throw radroots::PreconditionError(
          "the polynomial is not in the two-radical family x^n + ... - alpha");
    }
    form = *detected;
  }
  if (form.n > g.max_n) throw radroots::DegreeUnsupported("family order exceeds --max-n");
  const radroots::ResolventReport report = radroots::solve_moivre(form);
  return emit(radroots::solve_report_to_json(report, "moivre", g.tol, variable, form), g,
              human_solve);
}

int run_decompose(int n, const std::string& p_text, const GlobalOptions& g) {
  if (n < 1) throw radroots::PreconditionError("decompose requires n >= 1");
  if (n > g.max_n) throw radroots::DegreeUnsupported("n exceeds --max-n");
  const Rational p = radroots::rational_from_string(p_text);
  const std::vector<Complex> alphas = radroots::arc_division_alphas(n, p);
  const auto terms = radroots::partial_fractions(n, p);
  const auto antiderivatives = radroots::antiderivative_terms(terms);
  return emit(radroots::decompose_report_to_json(n, p, alphas, terms, antiderivatives, g.tol),
              g, human_decompose);
}

int run_verify(const std::string& path, const GlobalOptions& g) {
  Json doc;
  try {
    if (path.empty() || path == "-") {
      doc = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw radroots::ParseError("cannot open report file: " + path);
      doc = Json::parse(in);
    }
  } catch (const Json::exception& e) {
    throw radroots::ParseError(std::string("malformed JSON: ") + e.what());
  }
  const radroots::VerificationResult result = radroots::verify_document(doc);
  const std::string target =
      doc.contains("subcommand") && doc.at("subcommand").is_string()
          ? doc.at("subcommand").get<std::string>()
          : "unknown";
  return emit(radroots::verification_to_json(result, target), g, human_verify);
}

int run_explore(const std::string& a_text, const std::string& b_text,
                const std::string& c_text, const std::string& d_text, int n, bool full,
                const std::string& first_product, const std::string& second_product,
                const GlobalOptions& g) {
  if (n < 1) throw radroots::PreconditionError("explore requires n >= 1");
  if (n > g.max_n) throw radroots::DegreeUnsupported("n exceeds --max-n");
  const Complex A = parse_complex(a_text);
  const Complex B = parse_complex(b_text);
  const Complex C = c_text.empty() ? Complex(0, 0) : parse_complex(c_text);
  const Complex D = d_text.empty() ? Complex(0, 0) : parse_complex(d_text);
  radroots::ExplorerOptions options;
  options.full_enumeration = full;
  if (!first_product.empty()) options.first_pair_product = parse_complex(first_product);
  if (!second_product.empty()) options.second_pair_product = parse_complex(second_product);
  const radroots::ExplorationReport report = radroots::quintic_explorer(A, B, C, D, n, options);
  return emit(radroots::explore_report_to_json(report, A, B, C, D, options, g.tol), g,
              human_explore);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "radroots: closed-form polynomial roots through auxiliary resolvent equations,\n"
      "with every closed form certified against an independent numeric check"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit the machine-readable JSON report");
  app.add_option("--tol", g.tol, "residual certification tolerance")->capture_default_str();
  app.add_option("--max-n", g.max_n, "largest family order / half-degree accepted")
      ->capture_default_str();
  app.add_option("--branch-convention", g.branch_convention,
                 "radical branch convention (only 'principal' is defined)")
      ->check(CLI::IsMember({"principal"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write the report to this file instead of stdout");

  int exit_code = 0;

  auto* solve = app.add_subcommand("solve", "roots with certified closed forms");
  solve->fallthrough();
  std::string solve_expr;
  std::vector<std::string> solve_coeffs;
  std::string solve_method = "auto";
  solve->add_option("expr", solve_expr, "polynomial expression, e.g. \"x^3 - 6*x - 9\"");
  solve->add_option("--coeffs", solve_coeffs, "ascending coefficients c0 c1 ... (rationals)");
  solve->add_option("--method", solve_method, "auto | squared (squared resolvent, quartics)")
      ->check(CLI::IsMember({"auto", "squared"}))
      ->capture_default_str();
  solve->callback([&] { exit_code = run_solve(solve_expr, solve_coeffs, solve_method, g); });

  auto* resolvent = app.add_subcommand("resolvent", "emit only the auxiliary equation");
  resolvent->fallthrough();
  std::string resolvent_expr;
  std::vector<std::string> resolvent_coeffs;
  std::string resolvent_kind = "cubic";
  resolvent->add_option("expr", resolvent_expr, "polynomial expression");
  resolvent->add_option("--coeffs", resolvent_coeffs, "ascending coefficients");
  resolvent->add_option("--kind", resolvent_kind, "cubic | quartic | squared")
      ->check(CLI::IsMember({"cubic", "quartic", "squared"}))
      ->capture_default_str();
  resolvent->callback(
      [&] { exit_code = run_resolvent(resolvent_expr, resolvent_coeffs, resolvent_kind, g); });

  auto* reciprocal =
      app.add_subcommand("reciprocal-factor", "factor a palindromic polynomial");
  reciprocal->fallthrough();
  std::string reciprocal_expr;
  std::vector<std::string> reciprocal_coeffs;
  reciprocal->add_option("expr", reciprocal_expr, "palindromic polynomial expression");
  reciprocal->add_option("--coeffs", reciprocal_coeffs, "ascending coefficients");
  reciprocal->callback(
      [&] { exit_code = run_reciprocal(reciprocal_expr, reciprocal_coeffs, g); });

  auto* moivre = app.add_subcommand("moivre", "solve the two-radical special family");
  moivre->fallthrough();
  std::string moivre_expr;
  std::vector<std::string> moivre_coeffs;
  std::optional<int> moivre_n;
  std::string moivre_alpha;
  std::string moivre_t;
  moivre->add_option("expr", moivre_expr, "polynomial expression (family detected)");
  moivre->add_option("--coeffs", moivre_coeffs, "ascending coefficients");
  moivre->add_option("--n", moivre_n, "family order (direct construction)");
  moivre->add_option("--alpha", moivre_alpha, "constant term alpha (rational)");
  moivre->add_option("--t", moivre_t, "pairing product t (rational)");
  moivre->callback([&] {
    exit_code = run_moivre(moivre_expr, moivre_coeffs, moivre_n, moivre_alpha, moivre_t, g);
  });

  auto* decompose = app.add_subcommand(
      "decompose", "partial fractions and antiderivative of 1/(y^2n + p*y^n + 1)");
  decompose->fallthrough();
  int decompose_n = 0;
  std::string decompose_p;
  decompose->add_option("--n", decompose_n, "exponent parameter n >= 1")->required();
  decompose->add_option("--p", decompose_p, "middle coefficient p (rational)")->required();
  decompose->callback([&] { exit_code = run_decompose(decompose_n, decompose_p, g); });

  auto* verify = app.add_subcommand("verify", "re-certify a report document");
  verify->fallthrough();
  std::string verify_path;
  verify->add_option("file", verify_path, "report file, or '-' for stdin");
  verify->callback([&] { exit_code = run_verify(verify_path, g); });

  auto* explore = app.add_subcommand("explore-quintic",
                                     "branch sums of four n-th radicals");
  explore->fallthrough();
  std::string explore_a;
  std::string explore_b;
  std::string explore_c;
  std::string explore_d;
  int explore_n = 5;
  bool explore_full = false;
  std::string explore_first;
  std::string explore_second;
  explore->add_option("--A", explore_a, "first radicand, \"re\" or \"re,im\"")->required();
  explore->add_option("--B", explore_b, "second radicand")->required();
  explore->add_option("--C", explore_c, "third radicand (default 0)");
  explore->add_option("--D", explore_d, "fourth radicand (default 0)");
  explore->add_option("--n", explore_n, "radical index")->capture_default_str();
  explore->add_flag("--full", explore_full, "record the full n^4 branch enumeration");
  explore->add_option("--first-pair-product", explore_first,
                      "target value for radical(A) * radical(B)");
  explore->add_option("--second-pair-product", explore_second,
                      "target value for radical(C) * radical(D)");
  explore->callback([&] {
    exit_code = run_explore(explore_a, explore_b, explore_c, explore_d, explore_n,
                            explore_full, explore_first, explore_second, g);
  });

  try {
    app.parse(argc, argv);
    return exit_code;
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 2;
  } catch (const radroots::NonConvergence& e) {
    std::cerr << "error (non-convergence): " << e.what() << "\n";
    return 5;
  } catch (const radroots::CertificationError& e) {
    std::cerr << "error (certification): " << e.what() << "\n";
    return 4;
  } catch (const radroots::PreconditionError& e) {
    std::cerr << "error (precondition): " << e.what() << "\n";
    return 3;
  } catch (const radroots::ParseError& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
