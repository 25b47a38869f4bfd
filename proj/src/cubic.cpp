#include "sgspec/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "sgspec/error.hpp"

namespace sgspec::verify {

Int cubic_discriminant(const CubicCoeffs& c) {
  const Int& a = c[3];
  const Int& b = c[2];
  const Int& cc = c[1];
  const Int& d = c[0];
  Int disc = 18 * a * b * cc * d;
  disc -= 4 * b * b * b * d;
  disc += b * b * cc * cc;
  disc -= 4 * a * cc * cc * cc;
  disc -= 27 * a * a * d * d;
  return disc;
}

long double cubic_eval(const CubicCoeffs& c, long double x) {
  long double acc = 0;
  for (int i = 3; i >= 0; --i) acc = acc * x + static_cast<long double>(c[static_cast<std::size_t>(i)].get_d());
  return acc;
}

namespace {

long double cubic_derivative(const CubicCoeffs& c, long double x) {
  const long double c1 = c[1].get_d();
  const long double c2 = c[2].get_d();
  const long double c3 = c[3].get_d();
  return (3 * c3 * x + 2 * c2) * x + c1;
}

long double polish(const CubicCoeffs& c, long double x, double tol) {
  for (int it = 0; it < 60; ++it) {
    const long double f = cubic_eval(c, x);
    if (std::fabs(f) <= tol * 1e-3L) break;
    const long double df = cubic_derivative(c, x);
    if (df == 0) break;
    const long double next = x - f / df;
    if (std::fabs(cubic_eval(c, next)) >= std::fabs(f)) break;
    x = next;
  }
  return x;
}

}  // namespace

std::array<double, 3> cubic_roots(const CubicCoeffs& c, double tol) {
  if (sgn(c[3]) == 0) throw DegenerateLeading("leading coefficient of the cubic is zero");
  const Int disc = cubic_discriminant(c);
  if (sgn(disc) < 0) throw ComplexRoots("cubic has a complex conjugate root pair (discriminant " +
                                        disc.get_str() + ")");

  const long double a = c[3].get_d();
  const long double b = c[2].get_d() / a;
  const long double cc = c[1].get_d() / a;
  const long double d = c[0].get_d() / a;
  // x = t - b/3 gives t^3 + pt + q.
  const long double shift = -b / 3;
  const long double p = cc - b * b / 3;
  const long double q = 2 * b * b * b / 27 - b * cc / 3 + d;

  std::array<long double, 3> t{};
  if (sgn(disc) == 0) {
    // b^2 == 3ac exactly means p == 0: triple root.
    const Int triple_test = c[2] * c[2] - 3 * c[3] * c[1];
    if (sgn(triple_test) == 0) {
      t = {0, 0, 0};
    } else {
      t = {3 * q / p, -3 * q / (2 * p), -3 * q / (2 * p)};
    }
  } else {
    const long double m = 2 * std::sqrt(-p / 3);
    long double arg = 3 * q / (p * m);  // (3q / 2p) sqrt(-3/p)
    arg = std::clamp(arg, -1.0L, 1.0L);
    const long double theta = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) {
      t[static_cast<std::size_t>(k)] = m * std::cos(theta - 2 * std::numbers::pi_v<long double> * k / 3);
    }
  }

  std::array<double, 3> roots{};
  for (std::size_t i = 0; i < 3; ++i) {
    roots[i] = static_cast<double>(polish(c, t[i] + shift, tol));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace sgspec::verify
