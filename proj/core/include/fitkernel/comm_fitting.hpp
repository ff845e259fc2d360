#pragma once

#include <string>
#include <vector>

#include "fitkernel/lattice.hpp"
#include "fitkernel/matrix.hpp"
#include "fitkernel/rational.hpp"

namespace fitkernel {

// Z, Z/mZ or Z_(p). Elements are stored as rationals: integers for the
// first two (canonical residues in [0, m) for Z/mZ), p-integral rationals
// for the third.
class CommRing {
 public:
  enum class Kind { Integers, IntegersMod, LocalizedIntegers };

  static CommRing integers() { return CommRing(Kind::Integers, 0); }
  static CommRing integers_mod(unsigned long m);
  static CommRing localized(unsigned long p);

  Kind kind() const { return kind_; }
  unsigned long parameter() const { return param_; }

  bool contains(const Rational& x) const;
  // Canonical form of an element; throws DomainError if x is not an element.
  Rational canonical(const Rational& x) const;

  std::string name() const;

  friend bool operator==(const CommRing& a, const CommRing& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  CommRing(Kind k, unsigned long param) : kind_(k), param_(param) {}
  Kind kind_;
  unsigned long param_;
};

// Finitely generated ideal with its one-generator normal form:
// |g| over Z, gcd(g, m) over Z/mZ (the ideal (m) = (0) is stored as 0),
// p^v over Z_(p). The zero ideal has normal form 0.
class IdealFG {
 public:
  IdealFG(CommRing ring, std::vector<Rational> generators);
  static IdealFG zero(CommRing ring) { return IdealFG(ring, {Rational(0)}); }
  static IdealFG unit(CommRing ring) { return IdealFG(ring, {Rational(1)}); }

  const CommRing& ring() const { return ring_; }
  const std::vector<Rational>& generators() const { return gens_; }
  const Rational& normal_form() const { return normal_; }
  bool is_zero() const { return sgn(normal_) == 0; }

  friend bool operator==(const IdealFG& a, const IdealFG& b);

 private:
  CommRing ring_;
  std::vector<Rational> gens_;
  Rational normal_;
};

IdealFG ideal_mul(const IdealFG& x, const IdealFG& y);
IdealFG ideal_pow(const IdealFG& x, unsigned n);
bool ideal_eq(const IdealFG& x, const IdealFG& y);
bool ideal_contains(const IdealFG& x, const Rational& element);
// y contained in x.
bool ideal_contains(const IdealFG& x, const IdealFG& y);

// R^a --h--> R^b ->> M, h acting on row vectors.
struct Presentation {
  CommRing ring;
  RatMatrix matrix;  // a x b
  std::size_t a() const { return matrix.rows(); }
  std::size_t b() const { return matrix.cols(); }
};

Presentation make_presentation(CommRing ring, RatMatrix matrix);

// Ideal of all b x b minors, row subsets in lexicographic order; the zero
// ideal when a < b.
IdealFG fitting_ideal(const Presentation& pres);

// The b x b minors themselves, in lexicographic row-subset order.
std::vector<Rational> maximal_minors(const RatMatrix& m);

// Ann_R(coker h) from the Smith form.
IdealFG annihilator_ideal(const Presentation& pres);

// Image of a Z-presentation under Z -> Z/mZ.
Presentation reduce_mod(const Presentation& pres, unsigned long m);
IdealFG reduce_mod(const IdealFG& ideal, unsigned long m);

// diag(h1, h2).
Presentation direct_sum(const Presentation& x, const Presentation& y);

}  // namespace fitkernel
