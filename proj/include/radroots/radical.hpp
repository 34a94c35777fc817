#pragma once

// Immutable nested-radical expression trees.
//
// Node kinds: exact rational constant, n-ary sum, n-ary product, and the
// branch-indexed n-th root.  Branch k of root(n, v) means the principal root
// (argument of v taken in (-pi, pi]) rotated by exp(2 pi i k / n); the root
// of zero is zero.  Trees share subexpressions through shared_ptr and are
// safe to copy and evaluate concurrently.
//
// Rendering is deterministic: "root(n, radicand, branch)" for roots, " + "
// and " * " joins with sums parenthesised inside products, e.g.
// "root(3, 8, 0) + root(3, 1, 0)" or "1/2 * root(2, 5, 0)".

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radroots/complexval.hpp"
#include "radroots/errors.hpp"
#include "radroots/rational.hpp"

namespace radroots {

class RadicalExpr {
 public:
  enum class Kind { constant, sum, product, root };

  static RadicalExpr constant(Rational value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::constant;
    node->value = std::move(value);
    return RadicalExpr(std::move(node));
  }

  static RadicalExpr integer(long long v) { return constant(Rational(v)); }

  /// Sum of two or more terms.
  static RadicalExpr sum(std::vector<RadicalExpr> terms) {
    if (terms.size() < 2) throw PreconditionError("sum needs at least two terms");
    auto node = std::make_shared<Node>();
    node->kind = Kind::sum;
    node->children = std::move(terms);
    return RadicalExpr(std::move(node));
  }

  /// Product of two or more factors.
  static RadicalExpr product(std::vector<RadicalExpr> factors) {
    if (factors.size() < 2) throw PreconditionError("product needs at least two factors");
    auto node = std::make_shared<Node>();
    node->kind = Kind::product;
    node->children = std::move(factors);
    return RadicalExpr(std::move(node));
  }

  /// Branch `branch` of the index-th root of the radicand.
  static RadicalExpr root(int index, RadicalExpr radicand, int branch) {
    if (index < 2) throw PreconditionError("root index must be >= 2");
    if (branch < 0 || branch >= index) {
      throw PreconditionError("root branch must lie in [0, index)");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::root;
    node->children.push_back(std::move(radicand));
    node->root_index = index;
    node->branch = branch;
    return RadicalExpr(std::move(node));
  }

  /// -expr, as the product (-1) * expr (or a folded constant).
  static RadicalExpr negate(const RadicalExpr& e) {
    if (e.kind() == Kind::constant) return constant(-e.value());
    return product({integer(-1), e});
  }

  /// scalar * expr with the trivial scalars folded away.
  static RadicalExpr scale(const Rational& s, const RadicalExpr& e) {
    if (s == 1) return e;
    if (e.kind() == Kind::constant) return constant(s * e.value());
    return product({constant(s), e});
  }

  Kind kind() const { return node_->kind; }

  /// Constant value (constant nodes only).
  const Rational& value() const {
    if (node_->kind != Kind::constant) throw PreconditionError("not a constant node");
    return node_->value;
  }

  const std::vector<RadicalExpr>& children() const { return node_->children; }

  /// Root index n (root nodes only).
  int root_index() const {
    if (node_->kind != Kind::root) throw PreconditionError("not a root node");
    return node_->root_index;
  }

  /// Branch selector k (root nodes only).
  int branch() const {
    if (node_->kind != Kind::root) throw PreconditionError("not a root node");
    return node_->branch;
  }

  /// Numeric value of the tree.  Internally evaluated in extended precision
  /// to keep nested radicands accurate through cancellation-prone sums.
  Complex eval() const {
    const std::complex<long double> v = eval_ld();
    return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }

  /// Deterministic text form (identical trees render identically).
  std::string render() const { return render_node(/*inside_product=*/false); }

 private:
  struct Node {
    Kind kind = Kind::constant;
    Rational value;                      // constant nodes
    std::vector<RadicalExpr> children;   // sum/product terms; root radicand
    int root_index = 0;                  // root nodes
    int branch = 0;                      // root nodes
  };

  explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::complex<long double> eval_ld() const {
    using CLD = std::complex<long double>;
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    switch (node_->kind) {
      case Kind::constant:
        return CLD(node_->value.convert_to<long double>(), 0.0L);
      case Kind::sum: {
        CLD acc(0.0L, 0.0L);
        for (const auto& c : node_->children) acc += c.eval_ld();
        return acc;
      }
      case Kind::product: {
        CLD acc(1.0L, 0.0L);
        for (const auto& c : node_->children) acc *= c.eval_ld();
        return acc;
      }
      case Kind::root: {
        const CLD v = node_->children.front().eval_ld();
        if (v == CLD(0.0L, 0.0L)) return CLD(0.0L, 0.0L);
        long double theta = std::arg(v);
        if (theta == -pi) theta = pi;
        const long double n = static_cast<long double>(node_->root_index);
        const long double magnitude = std::pow(std::abs(v), 1.0L / n);
        const long double angle = (theta + 2.0L * pi * node_->branch) / n;
        return std::polar(magnitude, angle);
      }
    }
    return std::complex<long double>(0.0L, 0.0L);
  }

  std::string render_node(bool inside_product) const {
    switch (node_->kind) {
      case Kind::constant: {
        std::string text = rational_to_string(node_->value);
        if (inside_product && node_->value < 0) return "(" + text + ")";
        return text;
      }
      case Kind::sum: {
        std::string out;
        bool first = true;
        for (const auto& c : node_->children) {
          std::string part = c.render_node(false);
          if (first) {
            out = std::move(part);
            first = false;
          } else if (!part.empty() && part.front() == '-') {
            out += " - " + part.substr(1);
          } else {
            out += " + " + std::move(part);
          }
        }
        if (inside_product) return "(" + out + ")";
        return out;
      }
      case Kind::product: {
        std::string out;
        bool first = true;
        for (const auto& c : node_->children) {
          if (!first) out += " * ";
          out += c.render_node(/*inside_product=*/!first || c.kind() == Kind::sum);
          first = false;
        }
        return out;
      }
      case Kind::root:
        return "root(" + std::to_string(node_->root_index) + ", " +
               node_->children.front().render_node(false) + ", " +
               std::to_string(node_->branch) + ")";
    }
    return {};
  }

  std::shared_ptr<const Node> node_;
};

/// One n-th root of unity: exact radical form when the table knows one
/// (all n <= 6), always the numeric value exp(2 pi i k / n).
struct UnityRoot {
  std::optional<RadicalExpr> exact;
  Complex value;
};

namespace detail {

/// Exact surd for exp(2 pi i k / n), n <= 6.  The quintic entries use the
/// classical quarter-surds (-1 +- sqrt5 +- sqrt(-10 -+ 2 sqrt5))/4.
inline std::optional<RadicalExpr> unity_exact(int n, int k) {
  using RE = RadicalExpr;
  const auto quarter = [](int sign5, int sign_inner_combo, int sign_outer) {
    // (-1 + sign5*sqrt5 + sign_outer*sqrt(-10 + sign_inner_combo*2*sqrt5)) / 4
    RE sqrt5 = RE::root(2, RE::integer(5), 0);
    RE inner = RE::sum({RE::integer(-10), RE::scale(Rational(sign_inner_combo * 2), sqrt5)});
    RE outer = RE::root(2, inner, 0);
    return RE::scale(
        Rational(1, 4),
        RE::sum({RE::integer(-1), RE::scale(Rational(sign5), sqrt5),
                 RE::scale(Rational(sign_outer), outer)}));
  };
  const auto half = [](int re_sign, int im_sign) {
    // (re_sign*1 + im_sign*sqrt(-3)) / 2
    return RadicalExpr::scale(
        Rational(1, 2),
        RadicalExpr::sum({RadicalExpr::integer(re_sign),
                          RadicalExpr::scale(Rational(im_sign),
                                             RadicalExpr::root(2, RadicalExpr::integer(-3), 0))}));
  };
  switch (n) {
    case 1:
      return RE::integer(1);
    case 2:
      return k == 0 ? RE::integer(1) : RE::integer(-1);
    case 3:
      if (k == 0) return RE::integer(1);
      return half(-1, k == 1 ? 1 : -1);
    case 4:
      switch (k) {
        case 0: return RE::integer(1);
        case 1: return RE::root(2, RE::integer(-1), 0);
        case 2: return RE::integer(-1);
        default: return RE::root(2, RE::integer(-1), 1);
      }
    case 5:
      switch (k) {
        case 0: return RE::integer(1);
        case 1: return quarter(+1, -1, +1);   // exp(2 pi i/5)
        case 2: return quarter(-1, +1, +1);   // exp(4 pi i/5)
        case 3: return quarter(-1, +1, -1);   // exp(6 pi i/5)
        default: return quarter(+1, -1, -1);  // exp(8 pi i/5)
      }
    case 6:
      switch (k) {
        case 0: return RE::integer(1);
        case 1: return half(1, 1);
        case 2: return half(-1, 1);
        case 3: return RE::integer(-1);
        case 4: return half(-1, -1);
        default: return half(1, -1);
      }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

/// All n-th roots of unity in rotation order (entry k is exp(2 pi i k / n)).
/// Exact radical forms are attached for every n <= 6.
inline std::vector<UnityRoot> roots_of_unity(int n) {
  if (n < 1) throw PreconditionError("roots_of_unity requires n >= 1");
  constexpr double two_pi = 6.283185307179586476925286766559005768;
  std::vector<UnityRoot> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    UnityRoot r;
    r.value = std::polar(1.0, two_pi * static_cast<double>(k) / static_cast<double>(n));
    r.exact = detail::unity_exact(n, k);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace radroots
