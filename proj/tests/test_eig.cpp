#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "sgspec/eig.hpp"
#include "sgspec/graph_family.hpp"
#include "support/oracles.hpp"

using namespace sgspec;
using verify::eig_numeric;

TEST_CASE("eig_numeric examples") {
  auto e = eig_numeric(IntMatrix::identity(3));
  CHECK(e == std::vector<double>{1.0, 1.0, 1.0});

  e = eig_numeric(family::seidel_matrix(family::make_params(3, 1, 2)));
  REQUIRE(e.size() == 4);
  CHECK(std::fabs(e[0] - std::sqrt(5.0)) <= 1e-9);
  CHECK(std::fabs(e[1] - 1.0) <= 1e-9);
  CHECK(std::fabs(e[2] + 1.0) <= 1e-9);
  CHECK(std::fabs(e[3] + std::sqrt(5.0)) <= 1e-9);

  e = eig_numeric(IntMatrix::ones(4));
  CHECK(std::fabs(e[0] - 4.0) <= 1e-9);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::fabs(e[i]) <= 1e-9);
}

TEST_CASE("eig_numeric rejects non-symmetric input") {
  CHECK_THROWS_AS(eig_numeric(IntMatrix::from_rows({{0, 1}, {2, 0}})), NotSymmetric);
}

TEST_CASE("eig_numeric preserves trace and Frobenius norm on random symmetric matrices") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 12);
    const IntMatrix m = sgspec::testing::random_symmetric(rng, n);
    const auto e = eig_numeric(m);
    REQUIRE(e.size() == n);
    CHECK(std::is_sorted(e.rbegin(), e.rend()));
    double sum = std::accumulate(e.begin(), e.end(), 0.0);
    double sq = 0.0;
    for (double v : e) sq += v * v;
    double fro = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) fro += m(i, j).get_d() * m(i, j).get_d();
    CHECK(std::fabs(sum - m.trace().get_d()) <= 1e-9 * static_cast<double>(n));
    CHECK(std::fabs(sq - fro) <= 1e-9 * fro + 1e-9);
  }
}

TEST_CASE("Seidel spectra satisfy the trace and sum-of-squares identities") {
  for (int h = 2; h <= 7; ++h)
    for (int p = 1; p <= h; ++p)
      for (int k = 1; k <= 5; ++k) {
        const auto fp = family::make_params(h, p, k);
        const auto e = eig_numeric(family::seidel_matrix(fp));
        const double n = fp.n();
        const double tol = 1e-9;
        double sum = 0.0;
        double sq = 0.0;
        for (double v : e) {
          sum += v;
          sq += v * v;
        }
        CHECK(std::fabs(sum) <= tol * n);
        CHECK(std::fabs(sq - n * (n - 1)) <= tol * n * n);
      }
}
