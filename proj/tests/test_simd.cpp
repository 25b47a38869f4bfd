#include <doctest.h>

#include <cmath>
#include <random>

#include "sgspec/eig.hpp"
#include "sgspec/graph_family.hpp"
#include "sgspec/simd/kernels.hpp"

using namespace sgspec;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("every available kernel matches the scalar reference") {
  std::mt19937_64 rng(42);
  const auto& ref = simd::kernels_for(simd::Isa::scalar);
  for (simd::Isa isa : simd::available_isas()) {
    CAPTURE(simd::isa_name(isa));
    const auto& k = simd::kernels_for(isa);
    for (std::size_t n : {0UL, 1UL, 3UL, 4UL, 5UL, 7UL, 8UL, 9UL, 16UL, 33UL, 40UL}) {
      const auto x0 = random_vec(rng, n);
      const auto y0 = random_vec(rng, n);
      const double c = std::cos(0.3);
      const double s = std::sin(0.3);

      auto xr = x0, yr = y0, xk = x0, yk = y0;
      ref.rotate(xr.data(), yr.data(), n, c, s);
      k.rotate(xk.data(), yk.data(), n, c, s);
      // No FMA and elementwise work: rotation must be bit-identical.
      CHECK(xk == xr);
      CHECK(yk == yr);

      const double dr = ref.dot(x0.data(), y0.data(), n);
      const double dk = k.dot(x0.data(), y0.data(), n);
      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::fabs(x0[i] * y0[i]);
      CHECK(std::fabs(dr - dk) <= 1e-14 * mag + 1e-300);
    }
  }
}

TEST_CASE("Jacobi results agree across kernels") {
  for (simd::Isa isa : simd::available_isas()) {
    CAPTURE(simd::isa_name(isa));
    for (auto [h, p, k] : {std::tuple{3, 1, 2}, std::tuple{4, 2, 3}, std::tuple{7, 3, 5}}) {
      const RealMatrix s = to_real(family::seidel_matrix(family::make_params(h, p, k)));
      const auto ref = verify::eig_numeric(s, 1e-9, simd::kernels_for(simd::Isa::scalar));
      const auto got = verify::eig_numeric(s, 1e-9, simd::kernels_for(isa));
      REQUIRE(ref.size() == got.size());
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::fabs(ref[i] - got[i]) <= 1e-12);
    }
  }
}

TEST_CASE("dispatch selection and override") {
  CHECK(simd::isa_supported(simd::Isa::scalar));
  CHECK(simd::parse_isa("avx2") == simd::Isa::avx2);
  CHECK_THROWS_AS(simd::parse_isa("sse9"), InvalidParams);

  simd::set_active_isa(simd::Isa::scalar);
  CHECK(simd::active_kernels().isa == simd::Isa::scalar);
  simd::reset_active_isa();
  const simd::Isa best = simd::active_kernels().isa;
  CHECK(simd::isa_supported(best));
  if (simd::isa_supported(simd::Isa::avx2)) CHECK(best == simd::Isa::avx2);
  for (simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (!simd::isa_supported(isa)) CHECK_THROWS_AS(simd::set_active_isa(isa), InvalidParams);
  }
}
