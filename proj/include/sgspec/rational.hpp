#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace sgspec {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Equality is value equality.
class RatScalar {
 public:
  RatScalar() = default;
  RatScalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  RatScalar(const Int& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws SingularInput when den == 0.
  RatScalar(const Int& num, const Int& den);

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  RatScalar& operator+=(const RatScalar& o);
  RatScalar& operator-=(const RatScalar& o);
  RatScalar& operator*=(const RatScalar& o);
  /// Throws SingularInput on division by zero.
  RatScalar& operator/=(const RatScalar& o);

  friend RatScalar operator+(RatScalar a, const RatScalar& b) { return a += b; }
  friend RatScalar operator-(RatScalar a, const RatScalar& b) { return a -= b; }
  friend RatScalar operator*(RatScalar a, const RatScalar& b) { return a *= b; }
  friend RatScalar operator/(RatScalar a, const RatScalar& b) { return a /= b; }
  friend RatScalar operator-(const RatScalar& a);

  friend bool operator==(const RatScalar& a, const RatScalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const RatScalar& a, const RatScalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit RatScalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const RatScalar& r);

// Ring hooks used by the generic elimination routines.
inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const RatScalar& v) { return v.is_zero(); }
/// Exact quotient; throws InternalError if b does not divide a.
Int exact_div(const Int& a, const Int& b);
inline RatScalar exact_div(const RatScalar& a, const RatScalar& b) { return a / b; }

}  // namespace sgspec
