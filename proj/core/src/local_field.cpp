#include "fitkernel/local_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fitkernel/error.hpp"
#include "fitkernel/lattice.hpp"

namespace fitkernel {

namespace {

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long e) { return (a * b) % e; }

std::set<unsigned long> closure_product(const std::vector<unsigned long>& a,
                                        const std::vector<unsigned long>& b, unsigned long e) {
  std::set<unsigned long> out;
  for (auto x : a)
    for (auto y : b) out.insert(e <= 2 ? 1 : mulmod(x, y, e));
  return out;
}

}  // namespace

std::vector<unsigned long> decomposition_group(unsigned long e, unsigned long p) {
  unsigned long m = e;
  while (m % p == 0) m /= p;
  std::set<unsigned long> powers;
  unsigned long x = 1 % std::max(m, 1UL);
  for (unsigned long i = 0; i <= m; ++i) {
    powers.insert(m == 1 ? 0 : x);
    x = m == 1 ? 0 : (x * (p % m)) % m;
  }
  std::vector<unsigned long> d;
  for (unsigned long k : unit_group(e))
    if (powers.count(m == 1 ? 0 : k % m)) d.push_back(k);
  return d;
}

LocalField::LocalField(unsigned long e, unsigned long p, std::vector<unsigned long> fixing)
    : e_(e), p_(p), fixing_(std::move(fixing)) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  const auto units = unit_group(e);
  if (e <= 2) fixing_ = {1};
  std::sort(fixing_.begin(), fixing_.end());
  fixing_.erase(std::unique(fixing_.begin(), fixing_.end()), fixing_.end());
  for (auto h : fixing_)
    if (!std::binary_search(units.begin(), units.end(), h))
      throw DomainError("fixing group element is not a unit mod e");
  if (closure_product(fixing_, fixing_, e).size() != fixing_.size())
    throw DomainError("fixing set is not a subgroup");

  const auto decomp = decomposition_group(e, p);
  if (closure_product(decomp, fixing_, e).size() != units.size())
    throw UnsupportedField("more than one prime above " + std::to_string(p) + " in the subfield of Q(zeta_" +
                           std::to_string(e) + ")");

  std::set<unsigned long> seen;
  for (auto k : units) {
    if (seen.count(k)) continue;
    cosets_.push_back(k);
    for (auto h : fixing_) seen.insert(e <= 2 ? 1 : mulmod(k, h, e));
  }

  // Inertia: k = 1 mod m. e_F = |I| / |I cap H|.
  unsigned long m = e;
  while (m % p == 0) m /= p;
  std::size_t inertia = 0, inertia_fixed = 0;
  for (auto k : units) {
    if (m > 1 && k % m != 1) continue;
    ++inertia;
    if (std::binary_search(fixing_.begin(), fixing_.end(), k)) ++inertia_fixed;
  }
  ram_ = inertia / inertia_fixed;
}

LocalField LocalField::cyclotomic(unsigned long e, unsigned long p) { return LocalField(e, p, {1}); }
LocalField LocalField::rationals(unsigned long p) { return LocalField(1, p, {1}); }

LocalField LocalField::generated_by(std::span<const CycNum> values, unsigned long e, unsigned long p) {
  std::vector<unsigned long> fixing;
  for (auto k : unit_group(e)) {
    bool fixes = true;
    for (const auto& v : values)
      if (!(v.lifted(e).galois(static_cast<long>(k)) == v)) {
        fixes = false;
        break;
      }
    if (fixes) fixing.push_back(k);
  }
  return LocalField(e, p, std::move(fixing));
}

bool LocalField::contains(const CycNum& a) const {
  if (e_ % a.conductor()) return false;
  const CycNum x = a.lifted(e_);
  for (auto h : fixing_)
    if (!(x.galois(static_cast<long>(h)) == x)) return false;
  return true;
}

Rational LocalField::norm(const CycNum& a) const {
  if (!contains(a)) throw DomainError("element does not lie in the field");
  const CycNum x = a.lifted(e_);
  CycNum prod(1L);
  for (auto k : cosets_) prod *= x.galois(static_cast<long>(k));
  return prod.to_rational();
}

Rational LocalField::trace(const CycNum& a) const {
  if (!contains(a)) throw DomainError("element does not lie in the field");
  const CycNum x = a.lifted(e_);
  CycNum sum;
  for (auto k : cosets_) sum += x.galois(static_cast<long>(k));
  return sum.to_rational();
}

Valuation LocalField::valuation(const CycNum& a) const {
  if (a.is_zero()) return std::nullopt;
  if (a.is_rational()) return valuation(a.to_rational());
  const long v = *p_valuation(norm(a), p_);
  const long f = static_cast<long>(residue_degree());
  if (v % f) throw DomainError("norm valuation not divisible by the residue degree");
  return v / f;
}

Valuation LocalField::valuation(const Rational& q) const {
  const Valuation v = p_valuation(q, p_);
  if (!v) return v;
  return *v * static_cast<long>(ram_);
}

std::vector<CycNum> LocalField::integral_basis() const {
  const unsigned long phi = euler_phi(e_);
  if (degree() == 1) return {CycNum(1L)};
  // Periods sum_{h in H} zeta^(j h) span F over Q.
  RatMatrix rows(0, phi);
  for (unsigned long j = 0; j < e_; ++j) {
    CycNum period;
    for (auto h : fixing_) period += CycNum::zeta(e_, static_cast<long>(j * h));
    std::vector<Rational> c = period.lifted(e_).coeffs();
    rows.append_row(c);
  }
  const RatMatrix sat = saturate(rows, p_);
  std::vector<CycNum> basis;
  for (std::size_t i = 0; i < sat.rows(); ++i)
    basis.push_back(CycNum::from_powers(e_, std::vector<Rational>(sat.row(i).begin(), sat.row(i).end())));
  return basis;
}

CycNum LocalField::uniformizer() const {
  if (ram_ == 1) return CycNum(static_cast<long>(p_));
  // Norm from Q(zeta_e) to F of 1 - zeta_{p^a} has valuation f(K/F); combine
  // with p (valuation e_F) through a Bezout relation when coprime.
  unsigned long pa = 1;
  for (unsigned long m = e_; m % p_ == 0; m /= p_) pa *= p_;
  const CycNum one_minus = CycNum(1L) - CycNum::zeta(e_, static_cast<long>(e_ / pa));
  CycNum rel_norm(1L);
  for (auto h : fixing_) rel_norm *= one_minus.galois(static_cast<long>(h));
  const long vn = *valuation(rel_norm);
  const long ve = static_cast<long>(ram_);
  // Find i, j >= 0 with j*vn - i*ve = 1.
  for (long j = 1; j <= ve; ++j) {
    if ((j * vn - 1) % ve) continue;
    const long i = (j * vn - 1) / ve;
    CycNum pi(1L);
    for (long t = 0; t < j; ++t) pi *= rel_norm;
    return pi * CycNum(prime_power(p_, -i));
  }
  // Fallback: small integral combinations of the integral basis.
  const auto basis = integral_basis();
  std::vector<long> digits(basis.size(), 0);
  for (std::size_t tries = 0; tries < 4096; ++tries) {
    CycNum cand;
    for (std::size_t k = 0; k < basis.size(); ++k) cand += basis[k] * CycNum(digits[k]);
    if (valuation(cand) == Valuation(1)) return cand;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (++digits[k] < static_cast<long>(p_)) break;
      digits[k] = 0;
    }
  }
  throw UnsupportedField("no uniformizer found");
}

long LocalField::different_exponent() const {
  const auto basis = integral_basis();
  RatMatrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = trace(basis[i] * basis[j]);
  const Rational disc = determinant(gram, Rational(0), Rational(1));
  const long v = *p_valuation(disc, p_);
  return v / static_cast<long>(residue_degree());
}

long different_by_derivative(const LocalField& field, const CycNum& theta) {
  // Minimal polynomial prod (X - sigma(theta)) over the embeddings; its
  // derivative at theta is prod_{sigma != id} (theta - sigma(theta)).
  const CycNum t = theta.lifted(field.conductor());
  CycNum deriv(1L);
  for (auto k : field.embeddings()) {
    const CycNum s = t.galois(static_cast<long>(k));
    if (s == t) continue;
    deriv *= t - s;
  }
  return *field.valuation(deriv);
}

}  // namespace fitkernel
