#include <gtest/gtest.h>

#include <set>

#include "fitkernel/error.hpp"
#include "fitkernel/hybrid_order.hpp"
#include "support.hpp"

using namespace fitkernel;

namespace {

std::vector<GroupSpec> small_groups() {
  return {{Family::Cyclic, {6}},          {Family::AbelianProduct, {2, 2, 2}}, {Family::AbelianProduct, {2, 4}},
          {Family::Dihedral, {6}},        {Family::Dihedral, {8}},             {Family::Dihedral, {12}},
          {Family::Dihedral, {16}},       {Family::Dihedral, {20}},            {Family::Quaternion8, {}},
          {Family::Alternating4, {}},     {Family::Metacyclic, {7, 3, 2}},     {Family::Metacyclic, {5, 4, 2}},
          {Family::Metacyclic, {3, 2, 2}}};
}

std::set<std::size_t> closure(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s{g.identity()};
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto a : frontier)
      for (auto x : gens) {
        const auto b = g.mul(a, x);
        if (s.insert(b).second) next.push_back(b);
      }
    frontier = next;
  }
  return s;
}

// Every subgroup of a group of order <= 24 is generated by three elements.
std::set<std::set<std::size_t>> all_subgroups(const FiniteGroup& g) {
  std::set<std::set<std::size_t>> out;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) out.insert(closure(g, {a, b, c}));
  return out;
}

bool brute_nice(const FiniteGroup& g, unsigned long p) {
  std::size_t pa = 1;
  while (g.order() % (pa * p) == 0) pa *= p;
  bool sylow_abelian = false, complement = false;
  for (const auto& h : all_subgroups(g)) {
    if (h.size() == pa) {
      sylow_abelian = true;
      for (auto x : h)
        for (auto y : h) sylow_abelian = sylow_abelian && g.mul(x, y) == g.mul(y, x);
    }
    if (h.size() == g.order() / pa) {
      bool normal = true;
      for (auto x : h)
        for (std::size_t t = 0; t < g.order(); ++t) normal = normal && h.count(g.mul(g.mul(t, x), g.inv(t)));
      complement = complement || normal;
    }
  }
  return sylow_abelian && complement;
}

}  // namespace

TEST(Group, TablesAreGroups) {
  for (const auto& spec : small_groups()) {
    const GroupPtr g = FiniteGroup::make(spec);
    const std::size_t n = g->order();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_EQ(g->mul(a, g->inv(a)), g->identity());
      EXPECT_EQ(g->index_of(g->label(a)), a);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; c += 3) EXPECT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c)));
    }
  }
  EXPECT_EQ(FiniteGroup::make({Family::Metacyclic, {7, 3, 2}})->order(), 21u);
  EXPECT_EQ(FiniteGroup::make({Family::Alternating4, {}})->order(), 12u);
}

TEST(Group, CatalogErrors) {
  EXPECT_THROW(family_from_name("sporadic"), NotInCatalog);
  EXPECT_THROW(FiniteGroup::make({Family::Metacyclic, {7, 3, 3}}), NotInCatalog);
  EXPECT_THROW(FiniteGroup::make({Family::Dihedral, {7}}), NotInCatalog);
  EXPECT_THROW(FiniteGroup::make({Family::Dihedral, {8}})->index_of("z"), SchemaError);
}

TEST(Group, CommutatorSubgroupNormalWithAbelianQuotient) {
  for (const auto& spec : small_groups()) {
    const GroupPtr g = FiniteGroup::make(spec);
    const auto d = commutator_subgroup(*g);
    const std::set<std::size_t> ds(d.begin(), d.end());
    EXPECT_TRUE(g->is_normal(d)) << spec.name();
    for (std::size_t a = 0; a < g->order(); ++a)
      for (std::size_t b = 0; b < g->order(); ++b) {
        const auto comm = g->mul(g->mul(a, b), g->inv(g->mul(b, a)));
        EXPECT_TRUE(ds.count(comm)) << spec.name();
      }
  }
  EXPECT_EQ(commutator_subgroup(*FiniteGroup::make({Family::Dihedral, {8}})).size(), 2u);
  EXPECT_EQ(commutator_subgroup(*FiniteGroup::make({Family::Alternating4, {}})).size(), 4u);
}

TEST(Group, NicenessAgainstSubgroupSearch) {
  for (const auto& spec : small_groups()) {
    const GroupPtr g = FiniteGroup::make(spec);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      if (g->order() % p) continue;
      EXPECT_EQ(classify_nice(*g, p).nice, brute_nice(*g, p)) << spec.name() << " at " << p;
    }
  }
  const auto d8 = classify_nice(*FiniteGroup::make({Family::Dihedral, {8}}), 2);
  EXPECT_FALSE(d8.nice);
  EXPECT_EQ(d8.commutator_order, 2u);
}

TEST(Group, TraceIdempotent) {
  for (const auto& spec : small_groups()) {
    const GroupPtr g = FiniteGroup::make(spec);
    const GroupRingElem e = trace_idempotent(g);
    EXPECT_EQ(e * e, e);
    EXPECT_TRUE(e.is_central());
  }
}

TEST(Group, GroupRingArithmetic) {
  const GroupPtr g = FiniteGroup::make({Family::Quaternion8, {}});
  const auto x = GroupRingElem::basis(g, g->index_of("x"));
  const auto y = GroupRingElem::basis(g, g->index_of("y"));
  EXPECT_EQ(x * x, y * y);
  EXPECT_FALSE((x + y).is_central());
  EXPECT_TRUE((x * x).is_central());
  for (const auto& c : centre_basis(g)) EXPECT_TRUE(c.is_central());
  EXPECT_EQ(centre_basis(g).size(), g->conjugacy_classes().size());
  EXPECT_EQ(g->conjugacy_classes().size(), 5u);
}

TEST(HybridOrder, ClosedUnderMultiplication) {
  for (const auto& c : fk_test::catalog_cases()) {
    const GroupPtr g = FiniteGroup::make(c.spec);
    const WedderburnData w = wedderburn_data(g, c.p);
    for (const IntLattice& lat : {hybrid_order_basis(w), maximal_order_centre(w), group_ring_centre(w)}) {
      const RatMatrix b = lat.basis(c.p);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
          const GroupRingElem prod = fk_test::row_element(g, b, i) * fk_test::row_element(g, b, j);
          EXPECT_TRUE(lattice_member(prod.coeffs(), lat, c.p)) << c.spec.name();
        }
    }
    // Z_(p)[G] centre lies inside the hybrid centre, which lies inside the maximal one.
    EXPECT_TRUE(lattice_contains(hybrid_order_basis(w), group_ring_centre(w), c.p)) << c.spec.name();
    EXPECT_TRUE(lattice_contains(maximal_order_centre(w), hybrid_order_basis(w), c.p)) << c.spec.name();
  }
}
