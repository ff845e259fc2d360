#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitkernel/invariants.hpp"
#include "fitkernel/wedderburn.hpp"

namespace fitkernel {

// v(A_i) for A_i the o_i'-ideal generated by the values of chi_i.
long char_value_ideal(const WedderburnData& w, std::size_t i);

// Jacobinski: v(|G| / chi_i(1)) - v(D(o_i'/o)), in F_i units.
CentralIdeal central_conductor_maximal(const WedderburnData& w);

// F(zeta Lambda', zeta Lambda): additionally subtracts v(A_i).
CentralIdeal central_conductor_centres(const WedderburnData& w);

// sum over components of pi_i^{v_i} o_i' e_i, in group-ring coordinates.
IntLattice central_ideal_lattice(const WedderburnData& w, const CentralIdeal& ideal);

// o[G] Tr_{G'} on the abelian part plus the maximal conductor on the
// components with chi_i(1) != 1.
IntLattice hybrid_conductor(const WedderburnData& w);

struct HBound {
  IntLattice lattice{0};
  bool exact = false;
  // "centre" (nice order), "centres_conductor" (witness certified) or
  // "trace_bound" (trace part plus centre conductor on the rest).
  std::string source;
};

// Lower bound for H(Lambda). Witnesses default to default_witnesses(G).
HBound h_lambda_lower_bound(const WedderburnData& w);
HBound h_lambda_lower_bound(const WedderburnData& w, const std::vector<GroupRingElem>& witnesses);

struct IndexEntry {
  std::string larger;
  std::string smaller;
  std::optional<long> exponent;  // nullopt when smaller is not contained in larger
};

// Pairwise indices among maximal, hybrid, h_bound and centres.
std::vector<IndexEntry> conductor_index_report(const WedderburnData& w);

}  // namespace fitkernel
