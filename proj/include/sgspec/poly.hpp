#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgspec/rational.hpp"

namespace sgspec {

/// Univariate polynomial in lambda with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of lambda^i; trailing zeros
/// are never stored, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(Int(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(const Int& c);                // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Int> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  /// The polynomial lambda.
  static UniPoly lambda();
  /// c0 + c1*lambda.
  static UniPoly linear(const Int& c0, const Int& c1);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of lambda^i (zero beyond the degree).
  Int coeff(int i) const;
  Int leading() const;

  Int eval(const Int& x) const;
  RatScalar eval(const RatScalar& x) const;
  long double eval(long double x) const;

  UniPoly pow(unsigned e) const;
  /// Exact quotient a / b; throws InternalError if the division leaves a
  /// remainder or needs non-integer coefficients.
  static UniPoly divexact(const UniPoly& a, const UniPoly& b);

  /// Human form such as "-λ^3 + λ^2 + 5λ + 3".
  std::string to_string(const std::string& var = "λ") const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return UniPoly::divexact(a, b); }

}  // namespace sgspec
