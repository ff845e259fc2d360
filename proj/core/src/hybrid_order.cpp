#include "fitkernel/hybrid_order.hpp"

namespace fitkernel {

namespace {

void add_component(const WedderburnData& w, std::size_t i, std::vector<GroupRingElem>& out) {
  for (const auto& b : w.component(i).integral_basis) out.push_back(w.embed(i, b));
}

}  // namespace

IntLattice hybrid_order_basis(const WedderburnData& w) {
  const GroupPtr g = w.group();
  const GroupRingElem e = trace_idempotent(g);
  std::vector<GroupRingElem> gens;
  for (std::size_t x = 0; x < g->order(); ++x) gens.push_back(GroupRingElem::basis(g, x) * e);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.component(i).degree != 1) add_component(w, i, gens);
  return lattice_of(gens);
}

IntLattice maximal_order_centre(const WedderburnData& w) {
  std::vector<GroupRingElem> gens;
  for (std::size_t i = 0; i < w.size(); ++i) add_component(w, i, gens);
  return lattice_of(gens);
}

IntLattice group_ring_centre(const WedderburnData& w) { return lattice_of(centre_basis(w.group())); }

}  // namespace fitkernel
