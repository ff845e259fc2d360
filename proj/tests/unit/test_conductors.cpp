#include <gtest/gtest.h>

#include "fitkernel/hybrid_order.hpp"
#include "support.hpp"

using namespace fitkernel;

namespace {

CentralIdeal ideal(std::vector<long> v) {
  CentralIdeal c;
  for (long x : v) c.valuations.push_back(x);
  return c;
}

long index(const IntLattice& big, const IntLattice& small, unsigned long p) {
  return lattice_index(big, small, p).exponent;
}

}  // namespace

TEST(Conductors, DihedralEight) {
  const WedderburnData w = wedderburn_data(FiniteGroup::make({Family::Dihedral, {8}}), 2);
  EXPECT_EQ(central_conductor_maximal(w), ideal({3, 3, 3, 3, 2}));
  EXPECT_EQ(central_conductor_centres(w), ideal({3, 3, 3, 3, 1}));
  EXPECT_EQ(char_value_ideal(w, 4), 1);
  const IntLattice maximal = central_ideal_lattice(w, central_conductor_maximal(w));
  EXPECT_EQ(index(hybrid_conductor(w), maximal, 2), 4);
  const HBound hb = h_lambda_lower_bound(w);
  EXPECT_FALSE(hb.exact);
  EXPECT_EQ(index(hb.lattice, maximal, 2), 5);
}

TEST(Conductors, DihedralTwoPowers) {
  for (unsigned long a : {3UL, 4UL, 5UL}) {
    const WedderburnData w = wedderburn_data(FiniteGroup::make({Family::Dihedral, {1UL << a}}), 2);
    const IntLattice centres = central_ideal_lattice(w, central_conductor_centres(w));
    const IntLattice maximal = central_ideal_lattice(w, central_conductor_maximal(w));
    EXPECT_EQ(index(centres, maximal, 2), static_cast<long>(a) - 2) << a;
  }
}

TEST(Conductors, MaximalConductorInsideEveryCentre) {
  // F(Lambda', Lambda) lies in zeta(Lambda) and is an ideal of zeta(Lambda').
  for (const auto& c : fk_test::catalog_cases()) {
    const GroupPtr g = FiniteGroup::make(c.spec);
    const WedderburnData w = wedderburn_data(g, c.p);
    const IntLattice f = central_ideal_lattice(w, central_conductor_maximal(w));
    EXPECT_TRUE(lattice_contains(group_ring_centre(w), f, c.p)) << c.spec.name();
    const RatMatrix fb = f.basis(c.p), ob = maximal_order_centre(w).basis(c.p);
    for (std::size_t i = 0; i < fb.rows(); ++i)
      for (std::size_t j = 0; j < ob.rows(); ++j) {
        const auto prod = fk_test::row_element(g, fb, i) * fk_test::row_element(g, ob, j);
        EXPECT_TRUE(lattice_member(prod.coeffs(), f, c.p)) << c.spec.name();
      }
    // the centres conductor and the hybrid conductor both contain it
    EXPECT_TRUE(lattice_contains(central_ideal_lattice(w, central_conductor_centres(w)), f, c.p));
    EXPECT_TRUE(lattice_contains(hybrid_conductor(w), f, c.p));
  }
}

TEST(Conductors, NiceGroupsUseCentre) {
  const WedderburnData w = wedderburn_data(FiniteGroup::make({Family::Alternating4, {}}), 3);
  const HBound hb = h_lambda_lower_bound(w);
  EXPECT_TRUE(hb.exact);
  EXPECT_EQ(hb.source, "centre");
  EXPECT_TRUE(lattice_equal(hb.lattice, group_ring_centre(w), 3));
}

TEST(Conductors, DihedralOddPrime) {
  for (unsigned long p : {3UL, 5UL, 7UL, 11UL}) {
    const WedderburnData w = wedderburn_data(FiniteGroup::make({Family::Dihedral, {2 * p}}), p);
    EXPECT_EQ(central_conductor_maximal(w), ideal({1, 1, 1}));
    const HBound hb = h_lambda_lower_bound(w);
    EXPECT_TRUE(hb.exact);
    EXPECT_TRUE(lattice_equal(hb.lattice, central_ideal_lattice(w, central_conductor_maximal(w)), p));
  }
}

TEST(Conductors, IndexReport) {
  const WedderburnData w = wedderburn_data(FiniteGroup::make({Family::Dihedral, {8}}), 2);
  const auto report = conductor_index_report(w);
  auto find = [&](const std::string& big, const std::string& small) -> std::optional<long> {
    for (const auto& e : report)
      if (e.larger == big && e.smaller == small) return e.exponent;
    return std::nullopt;
  };
  EXPECT_EQ(find("hybrid", "maximal"), 4);
  EXPECT_EQ(find("h_bound", "maximal"), 5);
  EXPECT_EQ(find("centres", "maximal"), 1);
  EXPECT_EQ(report.size(), 6u);
  EXPECT_EQ(conductor_index_report(w).size(), report.size());
}
