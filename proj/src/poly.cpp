#include "sgspec/poly.hpp"

#include <algorithm>
#include <ostream>

#include "sgspec/error.hpp"

namespace sgspec {

UniPoly::UniPoly(const Int& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::lambda() { return UniPoly{0, 1}; }

UniPoly UniPoly::linear(const Int& c0, const Int& c1) { return UniPoly(std::vector<Int>{c0, c1}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Int UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Int UniPoly::leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

Int UniPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatScalar UniPoly::eval(const RatScalar& x) const {
  RatScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + RatScalar(*it);
  return acc;
}

long double UniPoly::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->get_d());
  }
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(1);
  UniPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::divexact(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("polynomial division is not exact");
  std::vector<Int> rem = a.coeffs_;
  std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Int& lead = b.coeffs_.back();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Int& top = rem[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InternalError("polynomial division is not exact over the integers");
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs_[j];
    quot[i] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Int& c) { return sgn(c) != 0; })) {
    throw InternalError("polynomial division leaves a remainder");
  }
  return UniPoly(std::move(quot));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    Int mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

}  // namespace sgspec
