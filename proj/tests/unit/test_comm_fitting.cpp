#include <gtest/gtest.h>

#include "fitkernel/comm_fitting.hpp"
#include "fitkernel/error.hpp"
#include "fitkernel/lattice.hpp"
#include "support.hpp"

using namespace fitkernel;
using fk_test::brute_fit_integer;
using fk_test::random_int_matrix;
using fk_test::uniform;

namespace {

// Determinantal divisors D_k = gcd of all k x k minors.
std::vector<BigInt> determinantal_divisors(const RatMatrix& m) {
  std::vector<BigInt> out;
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    BigInt g = 0;
    for (const auto& rows : fk_test::choose(m.rows(), k))
      for (const auto& cols : fk_test::choose(m.cols(), k)) {
        RatMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = gcd(g, BigInt(fk_test::laplace_det(sub).get_num()));
      }
    out.push_back(abs(g));
  }
  return out;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num();
  return z;
}

}  // namespace

TEST(Lattice, SmithMatchesDeterminantalDivisors) {
  for (int t = 0; t < 150; ++t) {
    const RatMatrix m = random_int_matrix(uniform(1, 4), uniform(1, 4), 6);
    const auto d = smith_invariants(to_int(m));
    const auto dd = determinantal_divisors(m);
    ASSERT_EQ(d.size(), dd.size());
    BigInt prod = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      prod *= d[k];
      EXPECT_EQ(prod, dd[k]) << t;
      if (k > 0 && d[k] != 0) EXPECT_EQ(d[k] % d[k - 1], 0);
    }
  }
  RatMatrix m(2, 2, Rational(0));
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 1) = 3;
  EXPECT_EQ(smith_invariants(to_int(m)), (std::vector<BigInt>{1, 6}));
}

TEST(Lattice, LocalSmithMatchesDivisorValuations) {
  for (int t = 0; t < 100; ++t) {
    const unsigned long p = t % 2 ? 2 : 3;
    const RatMatrix m = random_int_matrix(uniform(1, 4), uniform(1, 4), 12);
    const auto v = smith_valuations_local(m, p);
    const auto dd = determinantal_divisors(m);
    long acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k]) {
        EXPECT_EQ(dd[k], 0);
        continue;
      }
      acc += *v[k];
      EXPECT_EQ(p_valuation(dd[k], p), acc);
    }
  }
}

TEST(Lattice, HermiteFormSpansSameLattice) {
  for (int t = 0; t < 100; ++t) {
    const unsigned long p = t % 2 ? 2 : 5;
    RatMatrix m = random_int_matrix(uniform(1, 5), uniform(1, 4), 9);
    m(0, 0) = make_rational(BigInt(uniform(1, 9)), BigInt(uniform(1, 4)));
    const IntLattice x(m);
    const IntLattice h(x.basis(p));
    EXPECT_TRUE(lattice_equal(x, h, p));
    EXPECT_EQ(h.basis(p), x.basis(p));  // idempotent
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(lattice_member(m.row(r), h, p));
  }
}

TEST(Lattice, IndexIsDeterminantRatio) {
  for (int t = 0; t < 100; ++t) {
    const unsigned long p = t % 2 ? 2 : 3;
    const std::size_t n = uniform(1, 3);
    const RatMatrix a = random_int_matrix(n, n, 5);
    const RatMatrix c = random_int_matrix(n, n, 5);
    const Rational da = fk_test::laplace_det(a), dc = fk_test::laplace_det(c);
    if (sgn(da) == 0 || sgn(dc) == 0) continue;
    const RatMatrix b = multiply(c, a, Rational(0));  // rows of b lie in the row lattice of a
    const IntLattice x(a), y(b);
    ASSERT_TRUE(lattice_contains(x, y, p));
    EXPECT_EQ(lattice_index(x, y, p).exponent, *p_valuation(dc, p));
    if (*p_valuation(dc, p) > 0) EXPECT_THROW(lattice_index(y, x, p), NotContained);
  }
  const IntLattice small(RatMatrix(1, 2, Rational(1)));
  EXPECT_THROW(lattice_index(IntLattice::standard(2), small, 2), RankDeficient);
}

TEST(Lattice, Saturation) {
  RatMatrix m(1, 2);
  m(0, 0) = 4;
  m(0, 1) = 6;
  const RatMatrix s = saturate(m, 2);
  ASSERT_EQ(s.rows(), 1u);
  // (2, 3) is primitive over Z_(2) already
  EXPECT_EQ(s(0, 0), 2);
  EXPECT_EQ(s(0, 1), 3);
  RatMatrix half(1, 2);
  half(0, 0) = 3;
  half(0, 1) = 6;
  EXPECT_EQ(saturate(half, 3)(0, 0), 1);
}

TEST(CommFitting, IdealNormalForms) {
  const CommRing z = CommRing::integers();
  EXPECT_EQ(IdealFG(z, {Rational(-12), Rational(18)}).normal_form(), 6);
  const CommRing z12 = CommRing::integers_mod(12);
  EXPECT_EQ(IdealFG(z12, {Rational(8)}).normal_form(), 4);
  EXPECT_TRUE(IdealFG(z12, {Rational(24)}).is_zero());
  const CommRing loc = CommRing::localized(3);
  EXPECT_EQ(IdealFG(loc, {Rational(18, 5)}).normal_form(), 9);
  EXPECT_TRUE(ideal_contains(IdealFG(z, {Rational(6)}), Rational(12)));
  EXPECT_FALSE(ideal_contains(IdealFG(z, {Rational(6)}), Rational(9)));
  EXPECT_EQ(ideal_pow(IdealFG(z, {Rational(3)}), 3).normal_form(), 27);
  EXPECT_THROW(IdealFG(loc, {Rational(1, 3)}), DomainError);
}

TEST(CommFitting, FitMatchesBruteMinors) {
  for (int t = 0; t < 200; ++t) {
    const std::size_t b = uniform(1, 3);
    const std::size_t a = b + uniform(0, 2);
    const RatMatrix m = random_int_matrix(a, b, 10);
    const BigInt brute = brute_fit_integer(m);
    EXPECT_EQ(fitting_ideal(make_presentation(CommRing::integers(), m)).normal_form(), Rational(brute));
    const unsigned long mod = uniform(2, 30);
    EXPECT_EQ(fitting_ideal(make_presentation(CommRing::integers_mod(mod), m)),
              IdealFG(CommRing::integers_mod(mod), {Rational(brute)}));
    const unsigned long p = t % 2 ? 2 : 3;
    EXPECT_EQ(fitting_ideal(make_presentation(CommRing::localized(p), m)),
              IdealFG(CommRing::localized(p), {Rational(brute)}));
    // minors listed in lexicographic row order
    const auto minors = maximal_minors(m);
    EXPECT_EQ(minors.size(), fk_test::choose(a, b).size());
  }
}

TEST(CommFitting, AnnihilatorIsLastInvariant) {
  for (int t = 0; t < 150; ++t) {
    const std::size_t b = uniform(1, 3);
    const RatMatrix m = random_int_matrix(b + uniform(0, 2), b, 8);
    const auto dd = determinantal_divisors(m);
    const Presentation pres = make_presentation(CommRing::integers(), m);
    const IdealFG ann = annihilator_ideal(pres);
    if (dd.size() < b || dd[b - 1] == 0) {
      EXPECT_TRUE(ann.is_zero());
      continue;
    }
    const BigInt last = b == 1 ? dd[0] : BigInt(dd[b - 1] / dd[b - 2]);
    EXPECT_EQ(ann.normal_form(), Rational(last));
    // Fit is inside Ann, and Ann^b inside Fit.
    EXPECT_TRUE(ideal_contains(ann, fitting_ideal(pres)));
    EXPECT_TRUE(ideal_contains(fitting_ideal(pres), ideal_pow(ann, static_cast<unsigned>(b))));
  }
}

TEST(CommFitting, ZeroAndUnitCases) {
  const CommRing z = CommRing::integers();
  EXPECT_TRUE(fitting_ideal(make_presentation(z, RatMatrix(1, 2, Rational(1)))).is_zero());
  EXPECT_EQ(fitting_ideal(make_presentation(z, RatMatrix(2, 0))).normal_form(), 1);
  const Presentation x = make_presentation(z, random_int_matrix(2, 1, 5));
  const Presentation y = make_presentation(z, random_int_matrix(3, 2, 5));
  EXPECT_EQ(fitting_ideal(direct_sum(x, y)), ideal_mul(fitting_ideal(x), fitting_ideal(y)));
  EXPECT_THROW(reduce_mod(make_presentation(CommRing::localized(2), RatMatrix(1, 1, Rational(1))), 4), RingMismatch);
}
