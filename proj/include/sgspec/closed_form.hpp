#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "sgspec/cubic.hpp"
#include "sgspec/graph_family.hpp"
#include "sgspec/matrix.hpp"
#include "sgspec/poly.hpp"
#include "sgspec/spectrum.hpp"

namespace sgspec::closed {

/// aI_n + bJ_n.
struct ScalarMatrixSpec {
  RatScalar a;
  RatScalar b;
  std::size_t n = 1;

  RatMatrix realize() const;
};

/// {a + bn: 1, a: n - 1}.
Spectrum spectrum_aI_bJ(const ScalarMatrixSpec& spec);

/// Spectrum of the t x t block matrix with diagonal blocks A (order m, row
/// sum r, secondary eigenvalue d, sharing the eigenvectors of aI + bJ) and
/// off-diagonal blocks bJ_m:
///   {r + b m (t - 1): 1, r - b m: t - 1, d: t (m - 1)}.
Spectrum spectrum_uniform_blocks(const RatScalar& r, const RatScalar& d, const RatScalar& b,
                                 std::size_t m, std::size_t t);

/// The unique aI_m + bJ_m block with row sum r and secondary eigenvalue d,
/// ((r - d) / m) J + d I, assembled into the t x t uniform block matrix.
RatMatrix assemble_uniform_blocks(const RatScalar& r, const RatScalar& d, const RatScalar& b,
                                  std::size_t m, std::size_t t);

/// (1 - lambda)^(n-1) (1 - n - lambda) = det(-K_n - lambda I).
UniPoly cp_poly(int n);

/// adj(-K_n - lambda I) = diag * I + offdiag * (J - I), n >= 2.
struct NegKAdjugate {
  UniPoly diag;     // C_p(n - 1)
  UniPoly offdiag;  // (1 - lambda)^(n-2)

  PolyMatrix realize(std::size_t n) const;
};
NegKAdjugate adjugate_negK_closed(int n);

/// c(lambda) with X' adj(-K_h - lambda I) X'^T = c(lambda) J_{(k-1)p}:
///   (C_p(h-1) - (1-lambda)^(h-2)) h + (2p - h)^2 (1-lambda)^(h-2).
UniPoly sandwich_closed(const family::FamilyParams& params);

/// Coefficients of the cubic factor s, ascending; c3 = -1.
CubicCoeffs cubic_s(const family::FamilyParams& params);

/// F(lambda) = (root1 - lambda)^e1 (root2 - lambda)^e2 s(lambda), in the
/// det(S - lambda I) convention.
struct FactoredCharPoly {
  Int root1;  // 1 - 2p
  int e1 = 0;  // (n - h)/p - 1
  Int root2;  // 1
  int e2 = 0;  // n - 2 - (n - h)/p
  CubicCoeffs cubic;

  int degree() const { return e1 + e2 + 3; }
  UniPoly cubic_poly() const;
  UniPoly expand() const;
  /// "(−1−λ)^1 · (−λ^3 + …)" style, zero-exponent factors omitted.
  std::string to_string() const;
};

/// Throws DegenerateFamily for k = 1, UnsupportedShape if e2 < 0.
FactoredCharPoly charpoly_closed(const family::FamilyParams& params);

/// {1 - 2p: e1} + {1: e2} + roots of s. Integer roots of s are detected by
/// exact evaluation and reported exactly; the rest stay symbolic.
Spectrum spectrum_closed(const family::FamilyParams& params, double tol = 1e-9);

}  // namespace sgspec::closed
