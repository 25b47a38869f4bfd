#include <doctest.h>

#include <cmath>

#include "sgspec/closed_form.hpp"
#include "sgspec/cubic.hpp"
#include "sgspec/error.hpp"

using namespace sgspec;
using verify::cubic_roots;

TEST_CASE("cubic roots of the worked examples") {
  // -(λ + 1)(λ^2 - 5)
  auto r = cubic_roots({5, 5, -1, -1});
  CHECK(r[0] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r[2] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-15));

  // -(λ - 3)(λ + 1)^2, zero discriminant
  CHECK(verify::cubic_discriminant({3, 5, 1, -1}) == 0);
  r = cubic_roots({3, 5, 1, -1});
  CHECK(r[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r[2] == doctest::Approx(-1.0).epsilon(1e-15));

  r = cubic_roots({0, 0, 0, -1});
  CHECK(r == std::array<double, 3>{0.0, 0.0, 0.0});
}

TEST_CASE("cubic error paths") {
  CHECK_THROWS_AS(cubic_roots({1, 0, 1, 0}), DegenerateLeading);
  // x^3 + 1 has a complex pair.
  CHECK(verify::cubic_discriminant({1, 0, 0, 1}) < 0);
  CHECK_THROWS_AS(cubic_roots({1, 0, 0, 1}), ComplexRoots);
}

TEST_CASE("cubic roots from integer roots") {
  for (long a = -6; a <= 6; ++a)
    for (long b = a; b <= 6; ++b)
      for (long c = b; c <= 6; ++c) {
        // -(x - a)(x - b)(x - c)
        const CubicCoeffs coeffs{Int(a * b * c), Int(-(a * b + a * c + b * c)), Int(a + b + c), Int(-1)};
        const auto r = cubic_roots(coeffs);
        CHECK(r[0] == doctest::Approx(static_cast<double>(c)).epsilon(1e-7));
        CHECK(r[1] == doctest::Approx(static_cast<double>(b)).epsilon(1e-7));
        CHECK(r[2] == doctest::Approx(static_cast<double>(a)).epsilon(1e-7));
      }
}

TEST_CASE("cubic_s residuals stay within tolerance over the family grid") {
  for (int h = 2; h <= 7; ++h)
    for (int p = 1; p <= h; ++p)
      for (int k = 2; k <= 5; ++k) {
        const auto c = closed::cubic_s(family::make_params(h, p, k));
        CHECK(verify::cubic_discriminant(c) >= 0);
        for (double root : cubic_roots(c)) CHECK(std::fabs(static_cast<double>(verify::cubic_eval(c, root))) <= 1e-9);
      }
}
