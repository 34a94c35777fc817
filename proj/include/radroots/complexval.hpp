#pragma once

// Double-precision complex values and the branch-indexed n-th root.
//
// Branch convention used everywhere in the library: the principal argument
// lies in (-pi, pi] and branch k of an n-th root multiplies the principal
// branch by exp(2 pi i k / n).  The n-th root of zero is zero for every
// branch.

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>

#include "radroots/errors.hpp"
#include "radroots/rational.hpp"

namespace radroots {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal argument normalised to (-pi, pi]: -pi (reachable through a
/// negative-zero imaginary part) is mapped to +pi so equal values always get
/// equal arguments.
inline double principal_arg(const Complex& z) {
  constexpr double pi = 3.141592653589793238462643383279502884;
  double theta = std::arg(z);
  if (theta == -pi) theta = pi;
  return theta;
}

/// Branch k of the n-th root: |z|^(1/n) * exp(i (arg(z) + 2 pi k) / n).
/// Total: the root of 0 is 0.  Requires n >= 1; k is reduced mod n.
inline Complex nth_root(const Complex& z, int n, int branch = 0) {
  if (n < 1) throw PreconditionError("root index must be >= 1");
  if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  const double two_pi = 6.283185307179586476925286766559005768;
  const int k = ((branch % n) + n) % n;
  const double magnitude = std::pow(std::abs(z), 1.0 / static_cast<double>(n));
  const double angle = (principal_arg(z) + two_pi * k) / static_cast<double>(n);
  return std::polar(magnitude, angle);
}

/// Round-trip-precision decimal rendering (shortest is not required; 17
/// significant digits always round-trip a double).
inline std::string double_to_string(double x) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << x;
  return out.str();
}

inline std::string complex_to_string(const Complex& z) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  const double re = z.real() == 0.0 ? 0.0 : z.real();  // fold -0.0 for display
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  out << re;
  if (im >= 0 || std::isnan(im)) {
    out << " + " << im << "i";
  } else {
    out << " - " << -im << "i";
  }
  return out.str();
}

}  // namespace radroots
