#include "fitkernel/lattice.hpp"

#include "fitkernel/error.hpp"

namespace fitkernel {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// row_i -= f * row_j
template <class T>
void row_axpy(Matrix<T>& m, std::size_t i, std::size_t j, const T& f, std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c)
    if (sgn(m(j, c))) m(i, c) -= f * m(j, c);
}

template <class T>
void col_axpy(Matrix<T>& m, std::size_t i, std::size_t j, const T& f, std::size_t from = 0) {
  for (std::size_t r = from; r < m.rows(); ++r)
    if (sgn(m(r, j))) m(r, i) -= f * m(r, j);
}

// Rescales row i by a p-unit so its entries are integers with no common
// factor prime to p. Keeps intermediate sizes small without changing the
// Z_(p)-row lattice.
void normalize_row(RatMatrix& m, std::size_t i, unsigned long p) {
  BigInt den = 1, num = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& q = m(i, c);
    if (sgn(q) == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  if (sgn(num) == 0) return;
  const Rational unit = make_rational(p_free_part(den, p), p_free_part(num, p));
  if (unit == 1) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (sgn(m(i, c))) m(i, c) *= unit;
}

Rational unit_part(const Rational& q, unsigned long p, long v) { return q / prime_power(p, v); }

}  // namespace

IntMatrix hermite_form(IntMatrix m) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // Euclid on column c among rows r.., until a single nonzero remains.
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (sgn(m(i, c)) && (best == m.rows() || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best == m.rows()) break;
      m.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (sgn(m(i, c)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        row_axpy(m, i, r, q, c);
        if (sgn(m(i, c))) done = false;
      }
      if (done) break;
    }
    if (r < m.rows() && sgn(m(r, c))) {
      if (sgn(m(r, c)) < 0)
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = -m(r, k);
      for (std::size_t i = 0; i < r; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        if (sgn(q)) row_axpy(m, i, r, q, c);
      }
      pivots.push_back(c);
      ++r;
    }
  }
  IntMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return out;
}

std::vector<BigInt> smith_invariants(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> d(n, BigInt(0));
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = m.rows(), bj = 0;
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (sgn(m(i, j)) && (bi == m.rows() || abs(m(i, j)) < abs(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m.rows()) return d;
      m.swap_rows(t, bi);
      m.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (sgn(m(i, t)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        row_axpy(m, i, t, q, t);
        if (sgn(m(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (sgn(m(t, j)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        col_axpy(m, j, t, q, t);
        if (sgn(m(t, j))) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m.rows();
      for (std::size_t i = t + 1; i < m.rows() && bad == m.rows(); ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m.rows()) break;
      for (std::size_t j = t; j < m.cols(); ++j) m(t, j) += m(bad, j);
    }
    d[t] = abs(m(t, t));
  }
  return d;
}

RatMatrix hermite_form_local(const RatMatrix& input, unsigned long p) {
  RatMatrix m = input;
  for (std::size_t i = 0; i < m.rows(); ++i) normalize_row(m, i, p);
  std::vector<std::pair<std::size_t, long>> pivots;  // (column, valuation)
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    long bestv = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const long v = *p_valuation(m(i, c), p);
      if (best == m.rows() || v < bestv) {
        best = i;
        bestv = v;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    const Rational u = unit_part(m(r, c), p, bestv);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (sgn(m(r, k))) m(r, k) /= u;
    const Rational piv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / piv;
      row_axpy(m, i, r, f, c);
      normalize_row(m, i, p);
    }
    pivots.emplace_back(c, bestv);
    ++r;
  }
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const auto [c, v] = pivots[k];
    const Rational piv = m(k, c);
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational rep = reduce_mod_prime_power(m(i, c), p, v);
      const Rational f = (m(i, c) - rep) / piv;
      if (sgn(f)) row_axpy(m, i, k, f, c);
    }
  }
  RatMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return out;
}

namespace {

struct LocalSmith {
  std::vector<Valuation> vals;
  RatMatrix col_inverse;  // C^{-1}, where U * m * C is diagonal
  std::size_t rank = 0;
};

LocalSmith local_smith(RatMatrix m, unsigned long p, bool track) {
  LocalSmith out;
  const std::size_t n = std::min(m.rows(), m.cols());
  out.vals.assign(n, std::nullopt);
  if (track) out.col_inverse = identity_matrix<Rational>(m.cols(), Rational(0), Rational(1));
  for (std::size_t i = 0; i < m.rows(); ++i) normalize_row(m, i, p);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t bi = m.rows(), bj = 0;
    long bv = 0;
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j) {
        if (sgn(m(i, j)) == 0) continue;
        const long v = *p_valuation(m(i, j), p);
        if (bi == m.rows() || v < bv) {
          bi = i;
          bj = j;
          bv = v;
        }
      }
    if (bi == m.rows()) break;
    m.swap_rows(t, bi);
    m.swap_cols(t, bj);
    if (track) out.col_inverse.swap_rows(t, bj);
    const Rational u = unit_part(m(t, t), p, bv);
    for (std::size_t k = t; k < m.cols(); ++k)
      if (sgn(m(t, k))) m(t, k) /= u;
    const Rational piv = m(t, t);
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      if (sgn(m(i, t)) == 0) continue;
      const Rational f = m(i, t) / piv;
      row_axpy(m, i, t, f, t);
      normalize_row(m, i, p);
    }
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
      if (sgn(m(t, j)) == 0) continue;
      const Rational f = m(t, j) / piv;
      // col_j -= f col_t  <=>  C^{-1}: row_t += f row_j
      if (track) row_axpy(out.col_inverse, t, j, Rational(-f));
      m(t, j) = 0;
    }
    out.vals[t] = bv;
    ++out.rank;
  }
  return out;
}

}  // namespace

std::vector<Valuation> smith_valuations_local(const RatMatrix& m, unsigned long p) {
  return local_smith(m, p, false).vals;
}

RatMatrix saturate(const RatMatrix& rows, unsigned long p) {
  LocalSmith s = local_smith(rows, p, true);
  RatMatrix out(0, rows.cols());
  for (std::size_t i = 0; i < s.rank; ++i) out.append_row(s.col_inverse.row(i));
  return hermite_form_local(out, p);
}

std::size_t rational_rank(const RatMatrix& m) { return rank(m, Rational(1)); }

IntLattice IntLattice::standard(std::size_t dim) {
  return IntLattice(identity_matrix<Rational>(dim, Rational(0), Rational(1)));
}

std::optional<std::vector<Rational>> echelon_coordinates(std::span<const Rational> v,
                                                         const RatMatrix& echelon) {
  if (v.size() != echelon.cols()) throw DomainError("dimension mismatch in lattice coordinates");
  std::vector<Rational> w(v.begin(), v.end());
  std::vector<Rational> coords(echelon.rows(), Rational(0));
  std::size_t col = 0;
  for (std::size_t k = 0; k < echelon.rows(); ++k) {
    while (col < echelon.cols() && sgn(echelon(k, col)) == 0) {
      if (sgn(w[col])) return std::nullopt;
      ++col;
    }
    if (col == echelon.cols()) break;
    const Rational f = w[col] / echelon(k, col);
    coords[k] = f;
    if (sgn(f))
      for (std::size_t c = col; c < echelon.cols(); ++c)
        if (sgn(echelon(k, c))) w[c] -= f * echelon(k, c);
    ++col;
  }
  for (std::size_t c = col; c < w.size(); ++c)
    if (sgn(w[c])) return std::nullopt;
  return coords;
}

bool lattice_member(std::span<const Rational> v, const IntLattice& x, unsigned long p) {
  if (v.size() != x.dim()) throw DomainError("dimension mismatch in lattice_member");
  const auto coords = echelon_coordinates(v, x.basis(p));
  if (!coords) return false;
  for (const auto& c : *coords)
    if (!is_p_integral(c, p)) return false;
  return true;
}

bool lattice_contains(const IntLattice& x, const IntLattice& y, unsigned long p) {
  if (x.dim() != y.dim()) throw DomainError("dimension mismatch in lattice_contains");
  const RatMatrix bx = x.basis(p);
  const RatMatrix by = y.basis(p);
  for (std::size_t i = 0; i < by.rows(); ++i) {
    const auto coords = echelon_coordinates(by.row(i), bx);
    if (!coords) return false;
    for (const auto& c : *coords)
      if (!is_p_integral(c, p)) return false;
  }
  return true;
}

bool lattice_equal(const IntLattice& x, const IntLattice& y, unsigned long p) {
  return x.dim() == y.dim() && x.basis(p) == y.basis(p);
}

LatticeIndex lattice_index(const IntLattice& x, const IntLattice& y, unsigned long p) {
  if (x.dim() != y.dim()) throw DomainError("dimension mismatch in lattice_index");
  const RatMatrix bx = x.basis(p);
  const RatMatrix by = y.basis(p);
  if (bx.rows() != by.rows())
    throw RankDeficient("lattice ranks differ (" + std::to_string(bx.rows()) + " vs " +
                        std::to_string(by.rows()) + ")");
  RatMatrix change(by.rows(), bx.rows());
  for (std::size_t i = 0; i < by.rows(); ++i) {
    const auto coords = echelon_coordinates(by.row(i), bx);
    if (!coords) throw NotContained("sublattice leaves the rational span");
    for (std::size_t j = 0; j < coords->size(); ++j) {
      if (!is_p_integral((*coords)[j], p)) throw NotContained("sublattice is not contained");
      change(i, j) = (*coords)[j];
    }
  }
  const Rational det = determinant(change, Rational(0), Rational(1));
  return LatticeIndex{p, *p_valuation(det, p)};
}

}  // namespace fitkernel
