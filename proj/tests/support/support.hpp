#pragma once

// Random inputs and brute-force oracles shared by the unit and acceptance
// tests. Oracles deliberately avoid the library's normal-form code.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fitkernel/conductors.hpp"
#include "fitkernel/error.hpp"
#include "fitkernel/matrix_ring.hpp"

namespace fk_test {

using namespace fitkernel;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Laplace expansion; exponential, fine for n <= 6.
inline Rational laplace_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational d = m(0, c) * laplace_det(minor);
    acc += c % 2 ? Rational(-d) : d;
  }
  return acc;
}

inline std::vector<std::vector<std::size_t>> choose(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// gcd of all b x b row minors of an integer a x b matrix (0 when a < b).
inline BigInt brute_fit_integer(const RatMatrix& m) {
  BigInt g = 0;
  if (m.rows() < m.cols()) return g;
  for (const auto& rows : choose(m.rows(), m.cols())) {
    RatMatrix sub(m.cols(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) sub(r, c) = m(rows[r], c);
    const Rational d = laplace_det(sub);
    g = gcd(g, BigInt(d.get_num()));
  }
  return abs(g);
}

inline RatMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(-bound, bound);
  return m;
}

inline MatRingElem random_matring_elem(const CommRing& ring, std::size_t n, long bound) {
  return MatRingElem(ring, random_int_matrix(n, n, bound));
}

inline MatRingPresentation random_matring_presentation(const CommRing& ring, std::size_t a, std::size_t b,
                                                       std::size_t n, long bound) {
  std::vector<MatRingElem> blocks;
  for (std::size_t k = 0; k < a * b; ++k) blocks.push_back(random_matring_elem(ring, n, bound));
  return MatRingPresentation(a, b, std::move(blocks));
}

// Small integral combination of a few random group elements.
inline GroupRingElem random_element(const GroupPtr& g, int terms = 3, long bound = 2) {
  GroupRingElem x(g);
  for (int t = 0; t < terms; ++t)
    x += GroupRingElem::basis(g, static_cast<std::size_t>(uniform(0, static_cast<long>(g->order()) - 1)),
                              Rational(uniform(-bound, bound)));
  return x;
}

inline GRMatrix random_gr_matrix(const GroupPtr& g, std::size_t rows, std::size_t cols, int terms = 3) {
  GRMatrix m = gr_zero(g, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(g, terms);
  return m;
}

// A random invertible n x n matrix over Z[G] with its inverse: a product of
// elementary matrices, row swaps and diagonal +-g.
inline std::pair<GRMatrix, GRMatrix> random_unit(const GroupPtr& g, std::size_t n, int steps = 4) {
  GRMatrix u = gr_identity(g, n);
  GRMatrix v = gr_identity(g, n);
  for (int s = 0; s < steps; ++s) {
    GRMatrix e = gr_identity(g, n);
    GRMatrix einv = gr_identity(g, n);
    const long kind = n == 1 ? 2 : uniform(0, 2);
    if (kind == 0) {
      const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      const GroupRingElem lam = random_element(g, 2, 2);
      e(i, j) = lam;
      einv(i, j) = -lam;
    } else if (kind == 1) {
      const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
      e(i, i) = GroupRingElem(g);
      e(i + 1, i + 1) = GroupRingElem(g);
      e(i, i + 1) = GroupRingElem::scalar(g, 1);
      e(i + 1, i) = GroupRingElem::scalar(g, 1);
      einv = e;
    } else {
      const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      const std::size_t x = static_cast<std::size_t>(uniform(0, static_cast<long>(g->order()) - 1));
      const Rational sign = uniform(0, 1) ? 1 : -1;
      e(i, i) = GroupRingElem::basis(g, x, sign);
      einv(i, i) = GroupRingElem::basis(g, g->inv(x), sign);
    }
    u = gr_multiply(e, u);
    v = gr_multiply(v, einv);
  }
  return {u, v};
}

struct CatalogCase {
  GroupSpec spec;
  unsigned long p;
};

// Catalog groups paired with a prime at which every component field is
// supported.
inline std::vector<CatalogCase> catalog_cases() {
  return {
      {{Family::Cyclic, {1}}, 2},          {{Family::Cyclic, {4}}, 2},
      {{Family::Cyclic, {5}}, 5},          {{Family::Cyclic, {9}}, 3},
      {{Family::AbelianProduct, {2, 2}}, 2}, {{Family::AbelianProduct, {2, 3}}, 3},
      {{Family::Dihedral, {6}}, 3},        {{Family::Dihedral, {8}}, 2},
      {{Family::Dihedral, {10}}, 5},       {{Family::Dihedral, {14}}, 7},
      {{Family::Dihedral, {16}}, 2},       {{Family::Quaternion8, {}}, 2},
      {{Family::Alternating4, {}}, 2},     {{Family::Alternating4, {}}, 3},
      {{Family::Metacyclic, {7, 3, 2}}, 3},
  };
}

inline GRMatrix as_matrix(const GroupRingElem& x) {
  GRMatrix m = gr_zero(x.group(), 1, 1);
  m(0, 0) = x;
  return m;
}

inline GroupRingElem row_element(const GroupPtr& g, const RatMatrix& basis, std::size_t r) {
  std::vector<Rational> c(basis.cols());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = basis(r, k);
  return GroupRingElem(g, std::move(c));
}

}  // namespace fk_test
