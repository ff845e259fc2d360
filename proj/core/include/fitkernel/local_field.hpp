#pragma once

#include <span>
#include <vector>

#include "fitkernel/cyclotomic.hpp"
#include "fitkernel/rational.hpp"

namespace fitkernel {

// The completion at p of the subfield F of Q(zeta_e) fixed by a subgroup H
// of (Z/eZ)^x. Only the case of a single prime of F above p is supported;
// other combinations raise UnsupportedField. Elements are global
// representatives (CycNum of conductor dividing e).
class LocalField {
 public:
  LocalField(unsigned long e, unsigned long p, std::vector<unsigned long> fixing);

  static LocalField cyclotomic(unsigned long e, unsigned long p);
  static LocalField rationals(unsigned long p);
  // Smallest subfield of Q(zeta_e) containing the given values.
  static LocalField generated_by(std::span<const CycNum> values, unsigned long e, unsigned long p);

  unsigned long conductor() const { return e_; }
  unsigned long prime() const { return p_; }
  const std::vector<unsigned long>& fixing_group() const { return fixing_; }
  // Representatives of (Z/eZ)^x / H, i.e. the embeddings of F.
  const std::vector<unsigned long>& embeddings() const { return cosets_; }

  unsigned long degree() const { return cosets_.size(); }
  unsigned long ramification() const { return ram_; }
  unsigned long residue_degree() const { return degree() / ram_; }

  bool contains(const CycNum& a) const;
  Rational norm(const CycNum& a) const;
  Rational trace(const CycNum& a) const;

  // Normalized valuation: v(uniformizer) = 1.
  Valuation valuation(const CycNum& a) const;
  Valuation valuation(const Rational& q) const;

  // Z_(p)-basis of the valuation ring of F, as elements of Q(zeta_e).
  std::vector<CycNum> integral_basis() const;
  CycNum uniformizer() const;

  // Exponent of the different of F/Q_p, from the discriminant of
  // integral_basis(): v_p(disc) = f * exponent.
  long different_exponent() const;

  friend bool operator==(const LocalField& a, const LocalField& b) {
    return a.e_ == b.e_ && a.p_ == b.p_ && a.fixing_ == b.fixing_;
  }

 private:
  unsigned long e_;
  unsigned long p_;
  std::vector<unsigned long> fixing_;
  std::vector<unsigned long> cosets_;
  unsigned long ram_ = 1;
};

// Decomposition subgroup of p in (Z/eZ)^x: k with k mod m in <p mod m>,
// where e = p^a m.
std::vector<unsigned long> decomposition_group(unsigned long e, unsigned long p);

// Different exponent of Q_p(theta) computed as v(f'(theta)) for the minimal
// polynomial f of theta over Q, valued in the given field. The generator
// must satisfy Z_(p)[theta] = valuation ring; used as an oracle in tests.
long different_by_derivative(const LocalField& field, const CycNum& theta);

}  // namespace fitkernel
