#include "sgspec/eig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sgspec::verify {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const RealMatrix& a, const simd::KernelTable& k) {
  const std::size_t n = a.rows();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double* tail = a.row_data(i) + i + 1;
    acc += k.dot(tail, tail, n - i - 1);
  }
  return std::sqrt(2.0 * acc);
}

}  // namespace

std::vector<double> eig_numeric(const RealMatrix& m, double tol, const simd::KernelTable& kernels) {
  if (!m.is_symmetric()) throw NotSymmetric("eig_numeric needs an exactly symmetric matrix");
  const std::size_t n = m.rows();
  RealMatrix a = m;

  int sweep = 0;
  while (off_diagonal_norm(a, kernels) > tol) {
    if (++sweep > kMaxSweeps) throw NotConverged("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rows p and q of J^T A; columns follow by symmetry.
        kernels.rotate(a.row_data(p), a.row_data(q), n, c, s);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a(i, p) = a(p, i);
          a(i, q) = a(q, i);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> eig_numeric(const RealMatrix& m, double tol) {
  return eig_numeric(m, tol, simd::active_kernels());
}

std::vector<double> eig_numeric(const IntMatrix& m, double tol) { return eig_numeric(to_real(m), tol); }

}  // namespace sgspec::verify
