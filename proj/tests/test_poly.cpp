#include <doctest.h>

#include <random>

#include "sgspec/error.hpp"
#include "sgspec/poly.hpp"

using sgspec::Int;
using sgspec::RatScalar;
using sgspec::UniPoly;

namespace {

UniPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coef(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial and trimming") {
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly{3, 0, 0}.degree() == 0);
  CHECK(UniPoly{1, -1} - UniPoly{1, -1} == UniPoly());
  CHECK(UniPoly(0L).coeffs().empty());
}

TEST_CASE("ring laws hold pointwise at integer samples") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly f = random_poly(rng);
    const UniPoly g = random_poly(rng);
    for (long x = -4; x <= 4; ++x) {
      const Int xi(x);
      CHECK((f + g).eval(xi) == f.eval(xi) + g.eval(xi));
      CHECK((f - g).eval(xi) == f.eval(xi) - g.eval(xi));
      CHECK((f * g).eval(xi) == f.eval(xi) * g.eval(xi));
    }
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly f = random_poly(rng);
    const UniPoly g = random_poly(rng);
    if (g.is_zero()) continue;
    CHECK(UniPoly::divexact(f * g, g) == f);
  }
  CHECK_THROWS_AS(UniPoly::divexact(UniPoly{1, 1}, UniPoly{0, 2}), sgspec::InternalError);
  CHECK_THROWS_AS(UniPoly::divexact(UniPoly{1, 0, 1}, UniPoly{1, 1}), sgspec::InternalError);
  CHECK_THROWS_AS(UniPoly::divexact(UniPoly{1}, UniPoly()), sgspec::InternalError);
}

TEST_CASE("power and rendering") {
  const UniPoly one_minus = UniPoly{1, -1};
  CHECK(one_minus.pow(0) == UniPoly(1L));
  CHECK(one_minus.pow(2) == (UniPoly{1, -2, 1}));
  CHECK(UniPoly{3, 5, 1, -1}.to_string() == "-λ^3 + λ^2 + 5λ + 3");
  CHECK(UniPoly{-2, 3, 0, -1}.to_string("x") == "-x^3 + 3x - 2");
  CHECK(UniPoly().to_string() == "0");
}

TEST_CASE("rational evaluation agrees with integer evaluation") {
  const UniPoly f{5, 0, -6, 0, 1};
  CHECK(f.eval(RatScalar(2)) == RatScalar(f.eval(Int(2))));
  CHECK(f.eval(RatScalar(Int(1), Int(2))) == RatScalar(Int(5 * 16 - 6 * 4 + 1), Int(16)));
}

TEST_CASE("rational scalar stays canonical") {
  const RatScalar r(Int(6), Int(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r == RatScalar(Int(-3), Int(2)));
  CHECK(r.to_string() == "-3/2");
  CHECK_THROWS_AS(RatScalar(Int(1), Int(0)), sgspec::SingularInput);
  CHECK_THROWS_AS(RatScalar(1) / RatScalar(0), sgspec::SingularInput);
}
