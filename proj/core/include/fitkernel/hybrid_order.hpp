#pragma once

#include "fitkernel/wedderburn.hpp"

namespace fitkernel {

// Centre of the hybrid order o[G]e + Lambda'(1 - e), e = |G'|^{-1} Tr_{G'},
// in group-ring coordinates: the span of g e for g in G together with
// o_i' e_i for every component with chi_i(1) != 1.
IntLattice hybrid_order_basis(const WedderburnData& w);

// Centre of the maximal order: sum over components of o_i' e_i.
IntLattice maximal_order_centre(const WedderburnData& w);

// Centre of Z_(p)[G]: class sums.
IntLattice group_ring_centre(const WedderburnData& w);

}  // namespace fitkernel
