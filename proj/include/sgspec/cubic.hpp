#pragma once

#include <array>

#include "sgspec/rational.hpp"

namespace sgspec {

/// Integer cubic c0 + c1*x + c2*x^2 + c3*x^3, coefficients in ascending order.
using CubicCoeffs = std::array<Int, 4>;

namespace verify {

/// Exact discriminant 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 with
/// a = c3, b = c2, c = c1, d = c0.
Int cubic_discriminant(const CubicCoeffs& c);

/// The three real roots, sorted descending (repeated roots repeated).
/// Negative exact discriminant raises ComplexRoots; c3 == 0 raises
/// DegenerateLeading. Roots are Newton-polished until |s(root)| <= tol or
/// no further progress is possible.
std::array<double, 3> cubic_roots(const CubicCoeffs& c, double tol = 1e-9);

/// Horner evaluation in extended precision.
long double cubic_eval(const CubicCoeffs& c, long double x);

}  // namespace verify
}  // namespace sgspec
