#pragma once

#include <vector>

#include "fitkernel/comm_fitting.hpp"

namespace fitkernel {

// Element of M_n(R).
class MatRingElem {
 public:
  MatRingElem(CommRing ring, RatMatrix entries);
  static MatRingElem zero(CommRing ring, std::size_t n);
  static MatRingElem identity(CommRing ring, std::size_t n);
  // Matrix unit e_ij.
  static MatRingElem unit(CommRing ring, std::size_t n, std::size_t i, std::size_t j);
  static MatRingElem scalar(CommRing ring, std::size_t n, const Rational& s);

  std::size_t n() const { return entries_.rows(); }
  const CommRing& ring() const { return ring_; }
  const RatMatrix& entries() const { return entries_; }

  friend MatRingElem operator*(const MatRingElem& x, const MatRingElem& y);
  friend MatRingElem operator+(const MatRingElem& x, const MatRingElem& y);
  friend bool operator==(const MatRingElem& x, const MatRingElem& y) {
    return x.ring_ == y.ring_ && x.entries_ == y.entries_;
  }

 private:
  CommRing ring_;
  RatMatrix entries_;
};

// Lambda^a --h--> Lambda^b ->> M with Lambda = M_n(R); blocks(i, j) is the
// entry of h in row i, column j.
class MatRingPresentation {
 public:
  MatRingPresentation(std::size_t a, std::size_t b, std::vector<MatRingElem> blocks);
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  std::size_t n() const { return n_; }
  const CommRing& ring() const { return ring_; }
  const MatRingElem& block(std::size_t i, std::size_t j) const { return blocks_[i * b_ + j]; }

 private:
  std::size_t a_, b_, n_;
  CommRing ring_;
  std::vector<MatRingElem> blocks_;
};

// The na x nb matrix over R with the same entries.
Presentation flatten(const MatRingPresentation& pres);

// R-presentation of the corner e_ii M, expanded against the basis
// e_i1, ..., e_in of e_ii Lambda. Agrees with flatten for every i.
Presentation corner_presentation(const MatRingPresentation& pres, std::size_t i);

// Fit_Lambda(M) = Fit_R(e_11 M).
IdealFG fit_matrix_ring(const MatRingPresentation& pres);

// Fit_R(M) for M viewed as an R-module: n copies of the flattened
// presentation along the diagonal.
IdealFG fit_as_r_module(const MatRingPresentation& pres);
IdealFG annihilator_r(const MatRingPresentation& pres);

// Fit_Lambda(Lambda / I) for I = sum Lambda x_k: ideal of n x n minors of
// the stacked generators.
IdealFG fit_left_ideal_quotient(const std::vector<MatRingElem>& generators);

// Block multiplication of presentations (U is a x a, pres is a x b).
MatRingPresentation left_multiply(const std::vector<MatRingElem>& u, const MatRingPresentation& pres);

}  // namespace fitkernel
