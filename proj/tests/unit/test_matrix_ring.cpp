#include <gtest/gtest.h>

#include "fitkernel/error.hpp"
#include "fitkernel/matrix_ring.hpp"
#include "support.hpp"

using namespace fitkernel;
using fk_test::uniform;

TEST(MatrixRing, TwoByTwoOverZModTwo) {
  const CommRing z = CommRing::integers();
  const MatRingPresentation m(1, 1, {MatRingElem::scalar(z, 2, 2)});
  EXPECT_EQ(fit_as_r_module(m).normal_form(), 16);
  EXPECT_EQ(fit_matrix_ring(m).normal_form(), 4);
  EXPECT_EQ(annihilator_r(m).normal_form(), 2);
  RatMatrix d(2, 2, Rational(0));
  d(0, 0) = 2;
  d(1, 1) = 1;
  const MatRingPresentation n(1, 1, {MatRingElem(z, d)});
  EXPECT_EQ(fit_as_r_module(n).normal_form(), 4);
  EXPECT_EQ(fit_matrix_ring(n).normal_form(), 2);
}

TEST(MatrixRing, CornersAgree) {
  // Every corner e_ii M gives the same R-Fitting ideal.
  const CommRing z = CommRing::integers();
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = uniform(1, 3), b = uniform(1, 2);
    const auto pres = fk_test::random_matring_presentation(z, b + uniform(0, 1), b, n, 6);
    const IdealFG f = fit_matrix_ring(pres);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(fitting_ideal(corner_presentation(pres, i)), f);
  }
}

TEST(MatrixRing, UnitsDoNotChangeFit) {
  const CommRing z = CommRing::integers();
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = uniform(1, 2);
    const auto pres = fk_test::random_matring_presentation(z, 2, 2, n, 6);
    // [[1, x], [0, 1]] is invertible.
    std::vector<MatRingElem> u{MatRingElem::identity(z, n), fk_test::random_matring_elem(z, n, 5),
                               MatRingElem::zero(z, n), MatRingElem::identity(z, n)};
    EXPECT_EQ(fit_matrix_ring(left_multiply(u, pres)), fit_matrix_ring(pres));
  }
}

TEST(MatrixRing, ElementArithmetic) {
  const CommRing z4 = CommRing::integers_mod(4);
  const MatRingElem e12 = MatRingElem::unit(z4, 2, 0, 1), e21 = MatRingElem::unit(z4, 2, 1, 0);
  EXPECT_EQ(e12 * e21, MatRingElem::unit(z4, 2, 0, 0));
  EXPECT_EQ(e12 * e12, MatRingElem::zero(z4, 2));
  EXPECT_EQ(MatRingElem::scalar(z4, 2, 6), MatRingElem::scalar(z4, 2, 2));
  EXPECT_THROW(e12 * MatRingElem::unit(CommRing::integers(), 2, 0, 1), RingMismatch);
  EXPECT_THROW(MatRingPresentation(1, 2, {e12}), DomainError);
}
