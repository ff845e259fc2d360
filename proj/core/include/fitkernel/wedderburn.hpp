#pragma once

#include <vector>

#include "fitkernel/cyclotomic.hpp"
#include "fitkernel/group.hpp"
#include "fitkernel/local_field.hpp"

namespace fitkernel {

using CycMatrix = Matrix<CycNum>;

// One simple component A_i of Q_p[G].
struct WedderburnComponent {
  std::size_t index = 0;
  std::vector<CycNum> character;            // representative chi_i, per element
  std::vector<unsigned long> orbit;         // Galois exponents k: chi_i^(sigma_k) runs over the orbit
  unsigned long degree = 1;                 // chi_i(1)
  unsigned long matrix_size = 1;            // n_i
  unsigned long schur_index = 1;            // s_i
  std::vector<CycMatrix> representation;    // rho_i(g), affording chi_i
  LocalField field;                         // F_i
  long different_exponent = 0;              // v(D(o_i'/o)) in F_i units
  std::vector<CycNum> integral_basis;       // Z_(p)-basis of o_i'
  CycNum uniformizer;
};

// Per-component values in the centre of Q_p[G].
struct CentralElem {
  std::vector<CycNum> values;
  friend bool operator==(const CentralElem&, const CentralElem&) = default;
};

class WedderburnData {
 public:
  GroupPtr group() const { return group_; }
  unsigned long prime() const { return p_; }
  std::size_t size() const { return components_.size(); }
  const WedderburnComponent& component(std::size_t i) const { return components_.at(i); }
  const std::vector<WedderburnComponent>& components() const { return components_; }

  // Central element of Q[G] equal to alpha in component i and 0 elsewhere;
  // alpha must lie in F_i.
  GroupRingElem embed(std::size_t i, const CycNum& alpha) const;
  GroupRingElem idempotent(std::size_t i) const { return embed(i, CycNum(1L)); }
  GroupRingElem to_group_ring(const CentralElem& c) const;
  // Components of a central element z: chi_i(z) / chi_i(1).
  CentralElem central_components(const GroupRingElem& z) const;

  // rho_i applied entrywise: an (a d) x (b d) matrix.
  CycMatrix apply(std::size_t i, const GRMatrix& h) const;
  CycMatrix apply(std::size_t i, const GroupRingElem& x) const;

  CentralElem one() const;
  CentralElem zero() const;

 private:
  friend WedderburnData wedderburn_data(GroupPtr g, unsigned long p);
  GroupPtr group_;
  unsigned long p_ = 0;
  std::vector<WedderburnComponent> components_;
};

// Throws UnsupportedField when a global character orbit splits locally.
WedderburnData wedderburn_data(GroupPtr g, unsigned long p);

std::vector<GroupRingElem> central_idempotents(const WedderburnData& w);

CentralElem reduced_norm(const WedderburnData& w, const GRMatrix& h);
CentralElem reduced_norm(const WedderburnData& w, const GroupRingElem& x);

// Characteristic polynomial of rho_i(H), coefficients alpha_0, ..., alpha_m
// (alpha_m = 1).
std::vector<CycNum> reduced_charpoly(const WedderburnData& w, const GRMatrix& h, std::size_t i);

// Characteristic polynomial by Faddeev-LeVerrier.
std::vector<CycNum> characteristic_polynomial(const CycMatrix& m);

// H* = sum_i (-1)^(m_i+1) sum_{j=1}^{m_i} alpha_ij H^(j-1) e_i.
GRMatrix generalized_adjoint(const WedderburnData& w, const GRMatrix& h);

// Componentwise product.
CentralElem operator*(const CentralElem& x, const CentralElem& y);

}  // namespace fitkernel
