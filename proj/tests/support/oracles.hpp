#pragma once

// Test-only oracles. These deliberately share no code with the library's
// elimination, Faddeev-LeVerrier or closed-form paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sgspec/matrix.hpp"

namespace sgspec::testing {

/// Leibniz expansion over all permutations; n <= 8 keeps it cheap.
template <class T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(m - x I) sampled at x = 0..n by Leibniz, then Lagrange-interpolated
/// over the rationals. Every coefficient must come out integral.
inline UniPoly interpolated_charpoly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<RatScalar> xs;
  std::vector<RatScalar> ys;
  for (std::size_t s = 0; s <= n; ++s) {
    IntMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= static_cast<long>(s);
    xs.emplace_back(static_cast<long>(s));
    ys.emplace_back(leibniz_det(shifted));
  }
  std::vector<RatScalar> coeffs(n + 1, RatScalar(0));
  for (std::size_t i = 0; i <= n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<RatScalar> basis{RatScalar(1)};
    RatScalar denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<RatScalar> next(basis.size() + 1, RatScalar(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += ys[i] * basis[d] / denom;
  }
  std::vector<Int> out;
  for (const auto& c : coeffs) {
    if (!c.is_integer()) throw InternalError("interpolated coefficient is not integral");
    out.push_back(c.numerator());
  }
  return UniPoly(std::move(out));
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -3,
                                   int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

}  // namespace sgspec::testing

namespace sgspec::testing {

struct BlockInstance {
  IntMatrix a, b, c, d;
};

/// Random [[A, B], [C, D]] with total dimension in [2, 8], entries in
/// [-3, 3] and D invertible (checked with the Leibniz oracle).
inline BlockInstance random_block_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> total_dist(2, 8);
  const int total = total_dist(rng);
  std::uniform_int_distribution<int> split(1, total - 1);
  const auto n = static_cast<std::size_t>(split(rng));
  const auto m = static_cast<std::size_t>(total) - n;
  for (;;) {
    BlockInstance inst{random_int_matrix(rng, n, n), random_int_matrix(rng, n, m), random_int_matrix(rng, m, n),
                       random_int_matrix(rng, m, m)};
    if (sgn(leibniz_det(inst.d)) != 0) return inst;
  }
}

}  // namespace sgspec::testing
