#include "fitkernel/matrix_ring.hpp"

#include "fitkernel/error.hpp"

namespace fitkernel {

MatRingElem::MatRingElem(CommRing ring, RatMatrix entries) : ring_(ring), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("matrix ring element must be square");
  for (std::size_t i = 0; i < entries_.rows(); ++i)
    for (std::size_t j = 0; j < entries_.cols(); ++j) entries_(i, j) = ring_.canonical(entries_(i, j));
}

MatRingElem MatRingElem::zero(CommRing ring, std::size_t n) {
  return MatRingElem(ring, RatMatrix(n, n, Rational(0)));
}

MatRingElem MatRingElem::identity(CommRing ring, std::size_t n) {
  return MatRingElem(ring, identity_matrix<Rational>(n, Rational(0), Rational(1)));
}

MatRingElem MatRingElem::unit(CommRing ring, std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n, Rational(0));
  m(i, j) = 1;
  return MatRingElem(ring, std::move(m));
}

MatRingElem MatRingElem::scalar(CommRing ring, std::size_t n, const Rational& s) {
  return MatRingElem(ring, identity_matrix<Rational>(n, Rational(0), s));
}

MatRingElem operator*(const MatRingElem& x, const MatRingElem& y) {
  if (!(x.ring_ == y.ring_) || x.n() != y.n()) throw RingMismatch("matrix ring product mismatch");
  return MatRingElem(x.ring_, multiply(x.entries_, y.entries_, Rational(0)));
}

MatRingElem operator+(const MatRingElem& x, const MatRingElem& y) {
  if (!(x.ring_ == y.ring_) || x.n() != y.n()) throw RingMismatch("matrix ring sum mismatch");
  RatMatrix m = x.entries_;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += y.entries_(i, j);
  return MatRingElem(x.ring_, std::move(m));
}

MatRingPresentation::MatRingPresentation(std::size_t a, std::size_t b, std::vector<MatRingElem> blocks)
    : a_(a), b_(b), n_(0), ring_(CommRing::integers()), blocks_(std::move(blocks)) {
  if (blocks_.size() != a * b) throw DomainError("block count does not match a x b");
  if (blocks_.empty()) throw DomainError("empty matrix ring presentation");
  n_ = blocks_.front().n();
  ring_ = blocks_.front().ring();
  for (const auto& blk : blocks_)
    if (blk.n() != n_ || !(blk.ring() == ring_)) throw RingMismatch("blocks must share n and ring");
}

Presentation flatten(const MatRingPresentation& pres) {
  const std::size_t n = pres.n();
  RatMatrix m(pres.a() * n, pres.b() * n, Rational(0));
  for (std::size_t i = 0; i < pres.a(); ++i)
    for (std::size_t j = 0; j < pres.b(); ++j) {
      const RatMatrix& e = pres.block(i, j).entries();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(i * n + r, j * n + c) = e(r, c);
    }
  return make_presentation(pres.ring(), std::move(m));
}

Presentation corner_presentation(const MatRingPresentation& pres, std::size_t i) {
  // e_ii Lambda^a has R-basis e_ij (slot k); its image under h in slot l is
  // e_ij * h_kl = sum_q (h_kl)_jq e_iq.
  const std::size_t n = pres.n();
  if (i >= n) throw DomainError("corner index out of range");
  RatMatrix m(pres.a() * n, pres.b() * n, Rational(0));
  for (std::size_t k = 0; k < pres.a(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const MatRingElem eij = MatRingElem::unit(pres.ring(), n, i, j);
      for (std::size_t l = 0; l < pres.b(); ++l) {
        const RatMatrix prod = (eij * pres.block(k, l)).entries();
        for (std::size_t q = 0; q < n; ++q) m(k * n + j, l * n + q) = prod(i, q);
      }
    }
  return make_presentation(pres.ring(), std::move(m));
}

IdealFG fit_matrix_ring(const MatRingPresentation& pres) { return fitting_ideal(flatten(pres)); }

IdealFG fit_as_r_module(const MatRingPresentation& pres) {
  const Presentation flat = flatten(pres);
  Presentation sum = flat;
  for (std::size_t k = 1; k < pres.n(); ++k) sum = direct_sum(sum, flat);
  return fitting_ideal(sum);
}

IdealFG annihilator_r(const MatRingPresentation& pres) { return annihilator_ideal(flatten(pres)); }

IdealFG fit_left_ideal_quotient(const std::vector<MatRingElem>& generators) {
  if (generators.empty()) throw DomainError("left ideal needs at least one generator");
  return fit_matrix_ring(MatRingPresentation(generators.size(), 1, generators));
}

MatRingPresentation left_multiply(const std::vector<MatRingElem>& u, const MatRingPresentation& pres) {
  const std::size_t a = pres.a();
  if (u.size() != a * a) throw DomainError("left factor must be a x a");
  std::vector<MatRingElem> blocks;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < pres.b(); ++j) {
      MatRingElem acc = MatRingElem::zero(pres.ring(), pres.n());
      for (std::size_t k = 0; k < a; ++k) acc = acc + u[i * a + k] * pres.block(k, j);
      blocks.push_back(acc);
    }
  return MatRingPresentation(a, pres.b(), std::move(blocks));
}

}  // namespace fitkernel
