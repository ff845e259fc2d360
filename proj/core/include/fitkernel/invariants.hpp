#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitkernel/wedderburn.hpp"

namespace fitkernel {

// Per-component pi-valuation of a fractional ideal of o_i'; nullopt marks a
// zero component.
struct CentralIdeal {
  std::vector<Valuation> valuations;
  friend bool operator==(const CentralIdeal&, const CentralIdeal&) = default;
};

// Lambda^a --h--> Lambda^b ->> M over Lambda = Z_(p)[G].
struct GroupRingPresentation {
  GroupPtr group;
  unsigned long p = 0;
  GRMatrix matrix;
  std::size_t a() const { return matrix.rows(); }
  std::size_t b() const { return matrix.cols(); }
};

// Validates shape and p-integrality.
GroupRingPresentation make_gr_presentation(GroupPtr g, unsigned long p, GRMatrix matrix);

enum class Exactness { ExactQuadratic, ExactNice, LowerBound };
std::string exactness_name(Exactness e);

struct FitResult {
  std::vector<CentralElem> generators;
  CentralIdeal expansion;  // componentwise minimum over the generators
  Exactness exactness = Exactness::LowerBound;
};

// Componentwise valuations of a central element.
CentralIdeal valuations_of(const WedderburnData& w, const CentralElem& x);
// Componentwise minimum valuation over a generator list.
CentralIdeal expansion_of(const WedderburnData& w, const std::vector<CentralElem>& gens);

// Reduced norms of all b x b row-submatrices (lexicographic order). The
// flag is exact_quadratic for a = b, exact_nice when G is nice at p and the
// expansion matches the module length on every non-abelian component,
// lower_bound otherwise.
FitResult fit_of_presentation(const WedderburnData& w, const GroupRingPresentation& pres);

// Z_(p)-length of e_i M, or nullopt when e_i M is not torsion.
std::optional<long> component_length(const WedderburnData& w, const GroupRingPresentation& pres, std::size_t i);

struct IdempotentCut {
  std::vector<std::size_t> upsilon;  // components with e_i M_F = 0
  GroupRingElem idempotent;          // e(M) = sum of e_i over upsilon
  FitResult cut;                     // invariant over Lambda e(M)
};
IdempotentCut idempotent_cut(const WedderburnData& w, const GroupRingPresentation& pres);

// Fit of Lambda / I for I = sum Lambda x_k. The elements whose reduced norms
// were taken are returned alongside, each an explicit element of I.
struct LeftIdealQuotient {
  FitResult fit;
  std::vector<GroupRingElem> elements;
};
LeftIdealQuotient quotient_by_left_ideal(const WedderburnData& w, const std::vector<GroupRingElem>& generators);

// Does the central element z kill coker(h)? Checked by lattice membership of
// z * e_k in the Z_(p)-span of g * (rows of h).
bool verify_annihilation(const GroupRingElem& z, const GroupRingPresentation& pres);

struct SaturationCertificate {
  bool certified = false;
  IntLattice generated{0};  // Z_(p)-order generated by zeta(Lambda) and nr(witnesses)
  // Coordinates of each zeta(Lambda') basis element in generated.basis(p).
  std::vector<std::vector<Rational>> coordinates;
};

// Tries to show zeta(Lambda') lies in I(Lambda) using reduced norms of the
// witnesses (square matrices over Z_(p)[G], 1 x 1 allowed).
SaturationCertificate witness_I_saturation(const WedderburnData& w, const std::vector<GRMatrix>& witnesses);
SaturationCertificate witness_I_saturation(const WedderburnData& w, const std::vector<GroupRingElem>& witnesses);

// +-g and g + g^{-1} for every group element.
std::vector<GroupRingElem> default_witnesses(GroupPtr g);

// Compares fit(U h) with fit(h) for a quadratic presentation; u_inverse
// must satisfy U U^{-1} = 1, otherwise NotInvertible is thrown.
bool gl_invariance_check(const WedderburnData& w, const GroupRingPresentation& pres, const GRMatrix& u,
                         const GRMatrix& u_inverse);

}  // namespace fitkernel
