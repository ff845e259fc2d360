#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fitkernel/lattice.hpp"
#include "fitkernel/rational.hpp"

namespace fitkernel {

enum class Family { Cyclic, AbelianProduct, Dihedral, Quaternion8, Alternating4, Metacyclic };

// Catalog entry. Parameters: Cyclic {n}; AbelianProduct {n1, n2, ...};
// Dihedral {2n} (the group order); Quaternion8 {}; Alternating4 {};
// Metacyclic {p, q, r} with r of multiplicative order q modulo p.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<unsigned long> params;

  std::string name() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws NotInCatalog

// Finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> make(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return labels_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return 0; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  std::size_t index_of(const std::string& label) const;  // throws SchemaError
  std::size_t element_order(std::size_t a) const;
  std::size_t power(std::size_t a, long k) const;

  // Family-specific normal-form exponents of an element: Cyclic {i};
  // AbelianProduct (i1, ...); Dihedral, Quaternion8, Metacyclic {i, j} for
  // x^i y^j; Alternating4 the permutation images (0-based).
  const std::vector<long>& coords(std::size_t a) const { return coords_[a]; }

  // Least common conductor of all character values (see wedderburn).
  unsigned long character_conductor() const { return conductor_; }

  bool is_abelian() const;
  std::vector<std::size_t> subgroup_generated(const std::vector<std::size_t>& gens) const;
  bool is_normal(const std::vector<std::size_t>& subgroup) const;
  // Conjugacy classes, each sorted, ordered by smallest element.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

 private:
  FiniteGroup() = default;
  void finish();

  GroupSpec spec_;
  std::vector<std::string> labels_;
  std::vector<std::vector<long>> coords_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  unsigned long conductor_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

std::vector<std::size_t> commutator_subgroup(const FiniteGroup& g);

// Nice at p: abelian p-Sylow subgroup with a normal p-complement.
struct NiceWitness {
  bool nice = false;
  std::size_t commutator_order = 0;
  std::vector<std::size_t> sylow;       // a p-Sylow subgroup
  bool sylow_abelian = false;
  std::vector<std::size_t> complement;  // normal p-complement, empty if none
};

NiceWitness classify_nice(const FiniteGroup& g, unsigned long p);
std::vector<std::size_t> sylow_subgroup(const FiniteGroup& g, unsigned long p);

// Element of Q[G] (coefficients indexed by group element).
class GroupRingElem {
 public:
  explicit GroupRingElem(GroupPtr g);
  GroupRingElem(GroupPtr g, std::vector<Rational> coeffs);
  static GroupRingElem basis(GroupPtr g, std::size_t element, const Rational& c = 1);
  static GroupRingElem scalar(GroupPtr g, const Rational& c);
  // Sum of the listed group elements.
  static GroupRingElem sum_of(GroupPtr g, const std::vector<std::size_t>& elements);

  const GroupPtr& group() const { return group_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t g) const { return coeffs_[g]; }

  bool is_zero() const;
  bool is_p_integral(unsigned long p) const;
  bool is_central() const;
  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(const Rational& s);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(GroupRingElem a, const Rational& s) { return a *= s; }
  friend GroupRingElem operator*(const Rational& s, GroupRingElem a) { return a *= s; }
  GroupRingElem operator-() const;
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);

 private:
  GroupPtr group_;
  std::vector<Rational> coeffs_;
};

// Matrices over Q[G].
using GRMatrix = Matrix<GroupRingElem>;
GRMatrix gr_zero(GroupPtr g, std::size_t rows, std::size_t cols);
GRMatrix gr_identity(GroupPtr g, std::size_t n);
GRMatrix gr_multiply(const GRMatrix& a, const GRMatrix& b);
GRMatrix gr_scale(const GroupRingElem& z, const GRMatrix& m);

// |G'|^{-1} Tr_{G'}.
GroupRingElem trace_idempotent(GroupPtr g);

// Class sums: a Z_(p)-basis of the centre of Z_(p)[G].
std::vector<GroupRingElem> centre_basis(GroupPtr g);

// Lattice in group-ring coordinates spanned by the given elements.
IntLattice lattice_of(const std::vector<GroupRingElem>& elements);

struct OrderDescriptor {
  enum class Kind { GroupRing, Maximal, Hybrid };
  Kind kind = Kind::GroupRing;
  GroupPtr group;
  unsigned long p = 0;
};

}  // namespace fitkernel
