#pragma once

#include <vector>

#include "fitkernel/rational.hpp"

namespace fitkernel {

unsigned long euler_phi(unsigned long n);
unsigned long lcm_ul(unsigned long a, unsigned long b);
unsigned long gcd_ul(unsigned long a, unsigned long b);

// Integer coefficients of the e-th cyclotomic polynomial, constant term
// first. Computed once per conductor and cached.
const std::vector<long>& cyclotomic_polynomial(unsigned long e);

// Units of Z/eZ in increasing order; {1} for e = 1 and e = 2.
std::vector<unsigned long> unit_group(unsigned long e);

// Element of Q(zeta_e) in the power basis 1, zeta_e, ..., zeta_e^(phi(e)-1).
class CycNum {
 public:
  CycNum();
  CycNum(const Rational& q);  // NOLINT: rationals embed implicitly
  CycNum(long q);             // NOLINT

  // zeta_e^k, k reduced modulo e.
  static CycNum zeta(unsigned long e, long k = 1);
  // sum_j coeffs[j] zeta_e^j with any number of coefficients, reduced.
  static CycNum from_powers(unsigned long e, const std::vector<Rational>& coeffs);

  unsigned long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Same number expressed at conductor e, a multiple of conductor().
  CycNum lifted(unsigned long e) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws DomainError if not rational

  // zeta_e -> zeta_e^k; k must be coprime to the conductor.
  CycNum galois(long k) const;
  // Absolute norm from Q(zeta_e) down to Q.
  Rational norm() const;
  CycNum inverse() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  CycNum(unsigned long e, std::vector<Rational> reduced);
  void reduce_in_place(std::vector<Rational>& poly) const;

  unsigned long conductor_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycNum& a) { return a.is_zero(); }

}  // namespace fitkernel
