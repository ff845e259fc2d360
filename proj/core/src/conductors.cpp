#include "fitkernel/conductors.hpp"

#include "fitkernel/error.hpp"
#include "fitkernel/hybrid_order.hpp"

namespace fitkernel {

long char_value_ideal(const WedderburnData& w, std::size_t i) {
  const auto& comp = w.component(i);
  Valuation v;
  for (const auto& x : comp.character) v = min_valuation(v, comp.field.valuation(x));
  return *v;
}

namespace {

long base_valuation(const WedderburnData& w, std::size_t i) {
  const auto& comp = w.component(i);
  const Rational ratio = make_rational(BigInt(static_cast<unsigned long>(w.group()->order())), BigInt(comp.degree));
  return *comp.field.valuation(ratio) - comp.different_exponent;
}

}  // namespace

CentralIdeal central_conductor_maximal(const WedderburnData& w) {
  CentralIdeal out;
  for (std::size_t i = 0; i < w.size(); ++i) out.valuations.push_back(base_valuation(w, i));
  return out;
}

CentralIdeal central_conductor_centres(const WedderburnData& w) {
  CentralIdeal out;
  for (std::size_t i = 0; i < w.size(); ++i) out.valuations.push_back(base_valuation(w, i) - char_value_ideal(w, i));
  return out;
}

namespace {

CycNum pi_power(const WedderburnComponent& comp, long v) {
  const CycNum base = v >= 0 ? comp.uniformizer : comp.uniformizer.inverse();
  CycNum r(1L);
  for (long k = 0; k < std::abs(v); ++k) r *= base;
  return r;
}

void add_component(const WedderburnData& w, std::size_t i, long v, std::vector<GroupRingElem>& out) {
  const auto& comp = w.component(i);
  const CycNum scale = pi_power(comp, v);
  for (const auto& b : comp.integral_basis) out.push_back(w.embed(i, scale * b));
}

std::vector<GroupRingElem> trace_part(const WedderburnData& w) {
  const GroupPtr g = w.group();
  const GroupRingElem tr = GroupRingElem::sum_of(g, commutator_subgroup(*g));
  std::vector<GroupRingElem> out;
  for (std::size_t x = 0; x < g->order(); ++x) out.push_back(GroupRingElem::basis(g, x) * tr);
  return out;
}

}  // namespace

IntLattice central_ideal_lattice(const WedderburnData& w, const CentralIdeal& ideal) {
  if (ideal.valuations.size() != w.size()) throw DomainError("central ideal has the wrong component count");
  std::vector<GroupRingElem> gens{GroupRingElem(w.group())};
  for (std::size_t i = 0; i < w.size(); ++i)
    if (ideal.valuations[i]) add_component(w, i, *ideal.valuations[i], gens);
  return lattice_of(gens);
}

IntLattice hybrid_conductor(const WedderburnData& w) {
  const CentralIdeal maximal = central_conductor_maximal(w);
  std::vector<GroupRingElem> gens = trace_part(w);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.component(i).degree != 1) add_component(w, i, *maximal.valuations[i], gens);
  return lattice_of(gens);
}

HBound h_lambda_lower_bound(const WedderburnData& w) {
  return h_lambda_lower_bound(w, default_witnesses(w.group()));
}

HBound h_lambda_lower_bound(const WedderburnData& w, const std::vector<GroupRingElem>& witnesses) {
  if (classify_nice(*w.group(), w.prime()).nice) return HBound{group_ring_centre(w), true, "centre"};
  if (witness_I_saturation(w, witnesses).certified)
    return HBound{central_ideal_lattice(w, central_conductor_centres(w)), true, "centres_conductor"};
  const CentralIdeal centres = central_conductor_centres(w);
  std::vector<GroupRingElem> gens = trace_part(w);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.component(i).degree != 1) add_component(w, i, *centres.valuations[i], gens);
  return HBound{lattice_of(gens), false, "trace_bound"};
}

std::vector<IndexEntry> conductor_index_report(const WedderburnData& w) {
  const unsigned long p = w.prime();
  const std::vector<std::pair<std::string, IntLattice>> lattices{
      {"maximal", central_ideal_lattice(w, central_conductor_maximal(w))},
      {"hybrid", hybrid_conductor(w)},
      {"h_bound", h_lambda_lower_bound(w).lattice},
      {"centres", central_ideal_lattice(w, central_conductor_centres(w))},
  };
  std::vector<IndexEntry> out;
  for (std::size_t i = 0; i < lattices.size(); ++i)
    for (std::size_t j = 0; j < lattices.size(); ++j) {
      if (i == j) continue;
      const auto& [big_name, big] = lattices[j];
      const auto& [small_name, small] = lattices[i];
      IndexEntry entry{big_name, small_name, std::nullopt};
      if (lattice_contains(big, small, p)) entry.exponent = lattice_index(big, small, p).exponent;
      // Report each unordered pair once: keep the contained direction, or
      // the (i < j) direction when neither contains the other.
      const bool reverse_contained = lattice_contains(small, big, p);
      if (entry.exponent && reverse_contained && i > j) continue;
      if (!entry.exponent && (reverse_contained || i > j)) continue;
      out.push_back(std::move(entry));
    }
  return out;
}

}  // namespace fitkernel
