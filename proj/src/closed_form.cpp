#include "sgspec/closed_form.hpp"

#include <cmath>

namespace sgspec::closed {

namespace {

UniPoly one_minus_lambda_pow(int e) { return UniPoly{1, -1}.pow(static_cast<unsigned>(e)); }

void require_pair_family(const family::FamilyParams& params) {
  if (params.k() < 2) throw DegenerateFamily("k = 1: the closed forms need at least two cliques (k >= 2)");
}

}  // namespace

RatMatrix ScalarMatrixSpec::realize() const {
  RatMatrix m(n, n, b);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += a;
  return m;
}

Spectrum spectrum_aI_bJ(const ScalarMatrixSpec& spec) {
  if (spec.n == 0) throw InvalidParams("n must be positive");
  const RatScalar n(static_cast<long>(spec.n));
  return Spectrum::canonical({{spec.a + spec.b * n, 1}, {spec.a, static_cast<int>(spec.n) - 1}});
}

Spectrum spectrum_uniform_blocks(const RatScalar& r, const RatScalar& d, const RatScalar& b,
                                 std::size_t m, std::size_t t) {
  if (m == 0 || t == 0) throw InvalidParams("block order and block count must be positive");
  const RatScalar bm = b * RatScalar(static_cast<long>(m));
  const int ti = static_cast<int>(t);
  const int mi = static_cast<int>(m);
  return Spectrum::canonical({
      {r + bm * RatScalar(static_cast<long>(t - 1)), 1},
      {r - bm, ti - 1},
      {d, ti * (mi - 1)},
  });
}

RatMatrix assemble_uniform_blocks(const RatScalar& r, const RatScalar& d, const RatScalar& b,
                                  std::size_t m, std::size_t t) {
  if (m == 0 || t == 0) throw InvalidParams("block order and block count must be positive");
  const RatScalar ones_coeff = (r - d) / RatScalar(static_cast<long>(m));
  RatMatrix out(m * t, m * t, b);
  for (std::size_t blk = 0; blk < t; ++blk) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        out(blk * m + i, blk * m + j) = ones_coeff + (i == j ? d : RatScalar(0));
      }
    }
  }
  return out;
}

UniPoly cp_poly(int n) {
  if (n < 1) throw InvalidParams("cp_poly needs n >= 1");
  return one_minus_lambda_pow(n - 1) * UniPoly::linear(Int(1 - n), Int(-1));
}

PolyMatrix NegKAdjugate::realize(std::size_t n) const {
  PolyMatrix m(n, n, offdiag);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag;
  return m;
}

NegKAdjugate adjugate_negK_closed(int n) {
  if (n < 2) throw InvalidParams("adjugate_negK_closed needs n >= 2");
  return {cp_poly(n - 1), one_minus_lambda_pow(n - 2)};
}

UniPoly sandwich_closed(const family::FamilyParams& params) {
  require_pair_family(params);
  const int h = params.h();
  const int skew = x_prime_row_sum(params);
  const UniPoly off = one_minus_lambda_pow(h - 2);
  // X' X'^T = h J and X' J X'^T = (2p - h)^2 J because all rows of X' agree.
  return (cp_poly(h - 1) - off) * UniPoly(Int(h)) + UniPoly(Int(skew * skew)) * off;
}

CubicCoeffs cubic_s(const family::FamilyParams& params) {
  require_pair_family(params);
  const Int h = params.h();
  const Int n = params.n();
  const Int p = params.p();
  CubicCoeffs c;
  c[3] = -1;
  c[2] = -(2 * h - n + 2 * p - 3);
  c[1] = -(2 * h * h - 2 * (h - 1) * n + 2 * (h - 2) * p - 4 * h + 3);
  c[0] = 2 * h * h - (2 * h - 1) * n - 2 * (2 * h * h - 2 * h * n - h + 1) * p - 2 * h +
         4 * (h - n) * p * p + 1;
  return c;
}

UniPoly FactoredCharPoly::cubic_poly() const { return UniPoly(std::vector<Int>(cubic.begin(), cubic.end())); }

UniPoly FactoredCharPoly::expand() const {
  return UniPoly::linear(root1, Int(-1)).pow(static_cast<unsigned>(e1)) *
         UniPoly::linear(root2, Int(-1)).pow(static_cast<unsigned>(e2)) * cubic_poly();
}

std::string FactoredCharPoly::to_string() const {
  std::string out;
  auto factor = [&out](const Int& root, int e) {
    if (e == 0) return;
    out += "(" + root.get_str() + "-λ)^" + std::to_string(e) + " · ";
  };
  factor(root1, e1);
  factor(root2, e2);
  return out + "(" + cubic_poly().to_string() + ")";
}

FactoredCharPoly charpoly_closed(const family::FamilyParams& params) {
  require_pair_family(params);
  FactoredCharPoly f;
  f.root1 = 1 - 2 * params.p();
  f.e1 = params.private_blocks() - 1;
  f.root2 = 1;
  f.e2 = params.n() - 2 - params.private_blocks();
  if (f.e2 < 0) throw UnsupportedShape("exponent n - 2 - (n-h)/p is negative");
  f.cubic = cubic_s(params);
  return f;
}

Spectrum spectrum_closed(const family::FamilyParams& params, double tol) {
  const FactoredCharPoly f = charpoly_closed(params);
  std::vector<SpectrumEntry> entries;
  entries.push_back({RatScalar(f.root1), f.e1});
  entries.push_back({RatScalar(f.root2), f.e2});
  const auto roots = verify::cubic_roots(f.cubic, tol);
  const UniPoly s = f.cubic_poly();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    // Leading coefficient -1: every rational root is an integer.
    const Int candidate = static_cast<long>(std::llround(roots[i]));
    if (sgn(s.eval(candidate)) == 0) {
      entries.push_back({RatScalar(candidate), 1});
    } else {
      entries.push_back({CubicRoot{f.cubic, static_cast<int>(i), roots[i]}, 1});
    }
  }
  return Spectrum::canonical(std::move(entries), tol);
}

}  // namespace sgspec::closed
