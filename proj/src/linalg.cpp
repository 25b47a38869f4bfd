#include "sgspec/linalg.hpp"

#include <string>

namespace sgspec::linalg {

namespace {

void check_blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  if (!a.is_square() || !d.is_square()) throw DimensionMismatch("A and D blocks must be square");
  if (b.rows() != a.rows() || b.cols() != d.rows() || c.rows() != d.rows() ||
      c.cols() != a.rows()) {
    throw DimensionMismatch("B must be n x m and C must be m x n");
  }
}

// Product of a small-entry matrix (entries fit a long) with a big one.
// The Seidel matrices fed to the oracle have entries in {-1, 0, 1}, which
// turns every multiply-accumulate into an add or subtract.
IntMatrix small_times(const IntMatrix& small, const IntMatrix& big) {
  const std::size_t n = small.rows();
  IntMatrix out(n, big.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < small.cols(); ++k) {
      const Int& s = small(i, k);
      if (sgn(s) == 0) continue;
      if (s == 1) {
        for (std::size_t j = 0; j < big.cols(); ++j) out(i, j) += big(k, j);
      } else if (s == -1) {
        for (std::size_t j = 0; j < big.cols(); ++j) out(i, j) -= big(k, j);
      } else {
        for (std::size_t j = 0; j < big.cols(); ++j)
          mpz_addmul(out(i, j).get_mpz_t(), s.get_mpz_t(), big(k, j).get_mpz_t());
      }
    }
  }
  return out;
}

}  // namespace

Int det_exact(const IntMatrix& m) { return det_bareiss(m); }

UniPoly charpoly_oracle(const IntMatrix& m) {
  const std::size_t n = m.dim();
  // Monic coefficients of det(lambda I - A):
  //   M_1 = I;  c_{n-k} = -tr(A M_k) / k;  M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix amk = small_times(m, mk);
    c[n - k] = exact_div(-amk.trace(), Int(static_cast<unsigned long>(k)));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) amk(i, i) += c[n - k];
    mk = std::move(amk);
  }
  return flip_charpoly_convention(UniPoly(std::move(c)), n);
}

UniPoly flip_charpoly_convention(const UniPoly& p, std::size_t n) { return n % 2 == 0 ? p : -p; }

PolyMatrix shift_by_lambda(const IntMatrix& m) {
  PolyMatrix out = to_poly(m);
  for (std::size_t i = 0; i < out.dim(); ++i) out(i, i) -= UniPoly::lambda();
  return out;
}

ScalarPairInverse sherman_morrison_inverse(const RatScalar& a, const RatScalar& b, std::size_t n) {
  if (n == 0) throw SingularInput("dimension must be positive");
  if (a.is_zero()) throw SingularInput("a = 0: aI + bJ is singular");
  const RatScalar denom = a + b * RatScalar(static_cast<long>(n));
  if (denom.is_zero()) throw SingularInput("a + b*n = 0: aI + bJ is singular");
  // (aI + u v^T)^-1 with u v^T = bJ: 1/a I - (b/a^2) J / (1 + b n / a).
  return {RatScalar(1) / a, -b / (a * denom)};
}

RatMatrix inverse_exact(const RatMatrix& m) {
  const std::size_t n = m.dim();
  RatMatrix work = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularBlock("matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(piv, j), work(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const RatScalar p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      const RatScalar f = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Int schur_block_det(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  check_blocks(a, b, c, d);
  const Int det_d = det_exact(d);
  if (sgn(det_d) == 0) throw SingularBlock("D block is singular");
  const RatMatrix schur = to_rational(a) - to_rational(b) * inverse_exact(to_rational(d)) * to_rational(c);
  const RatScalar value = RatScalar(det_d) * det_bareiss(schur);
  if (!value.is_integer()) throw InternalError("Schur determinant is not an integer: " + value.to_string());
  return value.numerator();
}

Int schur_block_det_adjugate(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                             const IntMatrix& d) {
  check_blocks(a, b, c, d);
  const Int det_d = det_exact(d);
  if (sgn(det_d) == 0) throw SingularBlock("D block is singular");
  const std::size_t n = a.rows();
  if (n == 0) return det_d;
  const IntMatrix reduced = det_d * a - b * adjugate_exact(d) * c;
  Int denom;
  mpz_pow_ui(denom.get_mpz_t(), det_d.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return exact_div(det_exact(reduced), denom);
}

}  // namespace sgspec::linalg
