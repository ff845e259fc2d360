#include "fitkernel/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "fitkernel/error.hpp"

namespace fitkernel {

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }
unsigned long lcm_ul(unsigned long a, unsigned long b) { return std::lcm(a, b); }

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> unit_group(unsigned long e) {
  if (e <= 2) return {1};
  std::vector<unsigned long> u;
  for (unsigned long k = 1; k < e; ++k)
    if (std::gcd(k, e) == 1) u.push_back(k);
  return u;
}

namespace {

std::vector<long> compute_cyclotomic(unsigned long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const long c = poly[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned long e) {
  if (e == 0) throw DomainError("cyclotomic conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned long, std::vector<long>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly = compute_cyclotomic(e);
  std::lock_guard lock(mu);
  return cache.emplace(e, std::move(poly)).first->second;
}

CycNum::CycNum() : conductor_(1), coeffs_{Rational(0)} {}
CycNum::CycNum(const Rational& q) : conductor_(1), coeffs_{q} {}
CycNum::CycNum(long q) : conductor_(1), coeffs_{Rational(q)} {}
CycNum::CycNum(unsigned long e, std::vector<Rational> reduced)
    : conductor_(e), coeffs_(std::move(reduced)) {}

void CycNum::reduce_in_place(std::vector<Rational>& poly) const {
  const auto& phi = cyclotomic_polynomial(conductor_);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j]) poly[i - d + j] -= c * phi[j];
  }
  poly.resize(d, Rational(0));
}

CycNum CycNum::zeta(unsigned long e, long k) {
  if (e == 0) throw DomainError("cyclotomic conductor must be positive");
  long r = k % static_cast<long>(e);
  if (r < 0) r += static_cast<long>(e);
  std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
  poly[static_cast<std::size_t>(r)] = 1;
  return from_powers(e, poly);
}

CycNum CycNum::from_powers(unsigned long e, const std::vector<Rational>& coeffs) {
  CycNum out(e, coeffs);
  out.reduce_in_place(out.coeffs_);
  return out;
}

CycNum CycNum::lifted(unsigned long e) const {
  if (e == conductor_) return *this;
  if (e % conductor_) throw DomainError("lift target is not a multiple of the conductor");
  const unsigned long step = e / conductor_;
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  return from_powers(e, poly);
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c)) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j])) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return coeffs_[0];
}

CycNum CycNum::galois(long k) const {
  const long e = static_cast<long>(conductor_);
  long kk = k % e;
  if (kk < 0) kk += e;
  if (std::gcd(static_cast<unsigned long>(kk), conductor_) != 1 && conductor_ > 1)
    throw DomainError("galois exponent not coprime to the conductor");
  if (conductor_ <= 2 || kk == 1) return *this;
  std::vector<Rational> poly(conductor_, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j])) poly[(j * static_cast<std::size_t>(kk)) % conductor_] += coeffs_[j];
  return from_powers(conductor_, poly);
}

Rational CycNum::norm() const {
  CycNum prod(1L);
  for (unsigned long k : unit_group(conductor_)) prod *= galois(static_cast<long>(k));
  return prod.to_rational();
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (is_rational()) return CycNum(Rational(1) / coeffs_[0]);
  CycNum prod(1L);
  for (unsigned long k : unit_group(conductor_))
    if (k != 1) prod *= galois(static_cast<long>(k));
  const Rational n = (*this * prod).to_rational();
  return prod * CycNum(Rational(1) / n);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (conductor_ != o.conductor_) {
    const unsigned long e = std::lcm(conductor_, o.conductor_);
    *this = lifted(e);
    return *this += o.lifted(e);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    const Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (conductor_ != o.conductor_) {
    const unsigned long e = std::lcm(conductor_, o.conductor_);
    *this = lifted(e);
    return *this *= o.lifted(e);
  }
  std::vector<Rational> poly(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (sgn(o.coeffs_[j])) poly[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_in_place(poly);
  coeffs_ = std::move(poly);
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const unsigned long e = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(e).coeffs_ == b.lifted(e).coeffs_;
}

}  // namespace fitkernel
