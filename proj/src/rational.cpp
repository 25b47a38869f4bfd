#include "sgspec/rational.hpp"

#include <ostream>

#include "sgspec/error.hpp"

namespace sgspec {

RatScalar::RatScalar(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw SingularInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

std::string RatScalar::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

RatScalar& RatScalar::operator+=(const RatScalar& o) {
  q_ += o.q_;
  return *this;
}

RatScalar& RatScalar::operator-=(const RatScalar& o) {
  q_ -= o.q_;
  return *this;
}

RatScalar& RatScalar::operator*=(const RatScalar& o) {
  q_ *= o.q_;
  return *this;
}

RatScalar& RatScalar::operator/=(const RatScalar& o) {
  if (o.is_zero()) throw SingularInput("rational division by zero");
  q_ /= o.q_;
  return *this;
}

RatScalar operator-(const RatScalar& a) { return RatScalar(mpq_class(-a.q_)); }

std::ostream& operator<<(std::ostream& os, const RatScalar& r) { return os << r.to_string(); }

Int exact_div(const Int& a, const Int& b) {
  if (sgn(b) == 0) throw InternalError("exact_div by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InternalError("exact_div: " + b.get_str() + " does not divide " + a.get_str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace sgspec
