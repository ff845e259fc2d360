#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fitkernel/matrix.hpp"
#include "fitkernel/rational.hpp"

namespace fitkernel {

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

// Row Hermite form over Z: nonzero rows only, positive pivots, entries above
// a pivot reduced into [0, pivot).
IntMatrix hermite_form(IntMatrix m);

// Smith invariant factors over Z, length min(rows, cols), d_1 | d_2 | ...,
// zeros last.
std::vector<BigInt> smith_invariants(IntMatrix m);

// Row Hermite form over Z_(p). Pivots are p^k (k may be negative for
// fractional lattices); entries above a pivot p^k are the canonical
// representatives modulo p^k Z_(p). Zero rows are dropped, so the result is
// a canonical basis of the row lattice.
RatMatrix hermite_form_local(const RatMatrix& m, unsigned long p);

// p-valuations of the Smith invariants over Z_(p), nondecreasing, length
// min(rows, cols); nullopt marks zero invariants.
std::vector<Valuation> smith_valuations_local(const RatMatrix& m, unsigned long p);

// Basis of (Q-span of the rows) intersected with Z_(p)^n, in Hermite form.
RatMatrix saturate(const RatMatrix& rows, unsigned long p);

// Rank over Q.
std::size_t rational_rank(const RatMatrix& m);

// Finitely generated Z_(p)-submodule of Q^d, given by generator rows.
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim) : gens_(0, dim) {}
  explicit IntLattice(RatMatrix generators) : gens_(std::move(generators)) {}
  static IntLattice standard(std::size_t dim);

  std::size_t dim() const { return gens_.cols(); }
  const RatMatrix& generators() const { return gens_; }
  std::size_t rank() const { return rational_rank(gens_); }
  RatMatrix basis(unsigned long p) const { return hermite_form_local(gens_, p); }

  void add_generator(std::span<const Rational> v) { gens_.append_row(v); }

 private:
  RatMatrix gens_;
};

// Coordinates of v with respect to the rows of an echelon basis (for
// example a hermite_form_local result); nullopt when v is outside the
// rational span.
std::optional<std::vector<Rational>> echelon_coordinates(std::span<const Rational> v,
                                                         const RatMatrix& echelon);

bool lattice_member(std::span<const Rational> v, const IntLattice& x, unsigned long p);

// y contained in x.
bool lattice_contains(const IntLattice& x, const IntLattice& y, unsigned long p);
bool lattice_equal(const IntLattice& x, const IntLattice& y, unsigned long p);

struct LatticeIndex {
  unsigned long p = 0;
  long exponent = 0;
  BigInt value() const { return ipow(p, static_cast<unsigned long>(exponent)); }
};

// [x : y] for y inside x with rank(y) = rank(x). Throws NotContained or
// RankDeficient.
LatticeIndex lattice_index(const IntLattice& x, const IntLattice& y, unsigned long p);

}  // namespace fitkernel
