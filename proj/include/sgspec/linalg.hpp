#pragma once

#include <cstddef>
#include <utility>

#include "sgspec/matrix.hpp"

namespace sgspec::linalg {

/// Fraction-free (Bareiss) determinant over any exact integral domain that
/// provides is_zero() and exact_div(). All divisions performed are exact.
template <class T>
T det_bareiss(Matrix<T> m) {
  const std::size_t n = m.dim();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m(piv, k))) ++piv;
      if (piv == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(0) - d : d;
}

/// Exact integer determinant.
Int det_exact(const IntMatrix& m);

/// adj(m) by cofactors: adj(m)(i, j) = (-1)^(i+j) det(minor(j, i)).
/// m * adj(m) = det(m) * I holds for singular m as well.
template <class T>
Matrix<T> adjugate_exact(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T cof = det_bareiss(m.minor(j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? cof : T(0) - cof;
    }
  }
  return adj;
}

/// det(m - lambda*I) by Faddeev-LeVerrier in exact integers. Leading
/// coefficient (-1)^n. Uses nothing from the closed-form module.
UniPoly charpoly_oracle(const IntMatrix& m);

/// Converts between det(M - lambda I) and the monic det(lambda I - M).
/// The map is its own inverse: both differ by the factor (-1)^n.
UniPoly flip_charpoly_convention(const UniPoly& p, std::size_t n);

/// m - lambda*I as a polynomial matrix.
PolyMatrix shift_by_lambda(const IntMatrix& m);

/// Coefficients (a', b') with (aI_n + bJ_n)^-1 = a'I_n + b'J_n.
struct ScalarPairInverse {
  RatScalar identity_coeff;
  RatScalar ones_coeff;
};

/// Sherman-Morrison inverse of aI_n + bJ_n. Throws SingularInput when
/// a == 0 or a + b*n == 0.
ScalarPairInverse sherman_morrison_inverse(const RatScalar& a, const RatScalar& b, std::size_t n);

/// Exact inverse by Gauss-Jordan over the rationals; throws SingularBlock.
RatMatrix inverse_exact(const RatMatrix& m);

/// det([[A, B], [C, D]]) as det(D) * det(A - B D^-1 C) over exact
/// rationals. A is n x n, B is n x m, C is m x n, D is m x m.
/// Throws SingularBlock when det(D) == 0, DimensionMismatch when the
/// blocks do not fit together.
Int schur_block_det(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);

/// Same determinant through det(det(D) A - B adj(D) C) / det(D)^(n-1),
/// integers throughout until the final exact division.
Int schur_block_det_adjugate(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                             const IntMatrix& d);

}  // namespace sgspec::linalg
