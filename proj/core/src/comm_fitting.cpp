#include "fitkernel/comm_fitting.hpp"

#include "fitkernel/error.hpp"

namespace fitkernel {

CommRing CommRing::integers_mod(unsigned long m) {
  if (m < 2) throw DomainError("Z/mZ needs m >= 2");
  return CommRing(Kind::IntegersMod, m);
}

CommRing CommRing::localized(unsigned long p) {
  if (!is_prime(p)) throw DomainError("Z_(p) needs a prime, got " + std::to_string(p));
  return CommRing(Kind::LocalizedIntegers, p);
}

bool CommRing::contains(const Rational& x) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::IntegersMod:
      return x.get_den() == 1;
    case Kind::LocalizedIntegers:
      return is_p_integral(x, param_);
  }
  return false;
}

Rational CommRing::canonical(const Rational& x) const {
  if (!contains(x)) throw DomainError(format_rational(x) + " is not an element of " + name());
  if (kind_ != Kind::IntegersMod) return x;
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_num_mpz_t(), param_);
  return Rational(r);
}

std::string CommRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::IntegersMod:
      return "Z/" + std::to_string(param_) + "Z";
    case Kind::LocalizedIntegers:
      return "Z_(" + std::to_string(param_) + ")";
  }
  return "?";
}

IdealFG::IdealFG(CommRing ring, std::vector<Rational> generators)
    : ring_(ring), gens_(std::move(generators)), normal_(0) {
  for (auto& g : gens_) g = ring_.canonical(g);
  switch (ring_.kind()) {
    case CommRing::Kind::Integers: {
      BigInt g = 0;
      for (const auto& x : gens_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
      normal_ = Rational(g);
      break;
    }
    case CommRing::Kind::IntegersMod: {
      BigInt g = ring_.parameter();
      for (const auto& x : gens_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
      normal_ = g == ring_.parameter() ? Rational(0) : Rational(g);
      break;
    }
    case CommRing::Kind::LocalizedIntegers: {
      Valuation v;
      for (const auto& x : gens_) v = min_valuation(v, p_valuation(x, ring_.parameter()));
      normal_ = v ? prime_power(ring_.parameter(), *v) : Rational(0);
      break;
    }
  }
}

bool operator==(const IdealFG& a, const IdealFG& b) {
  if (!(a.ring_ == b.ring_)) throw RingMismatch("comparing ideals of different rings");
  return a.normal_ == b.normal_;
}

IdealFG ideal_mul(const IdealFG& x, const IdealFG& y) {
  if (!(x.ring() == y.ring())) throw RingMismatch("ideal product across rings");
  std::vector<Rational> gens;
  for (const auto& a : x.generators())
    for (const auto& b : y.generators()) gens.push_back(a * b);
  return IdealFG(x.ring(), std::move(gens));
}

IdealFG ideal_pow(const IdealFG& x, unsigned n) {
  IdealFG r = IdealFG::unit(x.ring());
  for (unsigned i = 0; i < n; ++i) r = IdealFG(x.ring(), {r.normal_form() * x.normal_form()});
  return r;
}

bool ideal_eq(const IdealFG& x, const IdealFG& y) { return x == y; }

bool ideal_contains(const IdealFG& x, const Rational& element) {
  const Rational e = x.ring().canonical(element);
  const Rational& g = x.normal_form();
  switch (x.ring().kind()) {
    case CommRing::Kind::Integers:
      if (sgn(g) == 0) return sgn(e) == 0;
      return mpz_divisible_p(e.get_num_mpz_t(), g.get_num_mpz_t());
    case CommRing::Kind::IntegersMod: {
      const BigInt m = x.ring().parameter();
      const BigInt gg = sgn(g) == 0 ? m : BigInt(g.get_num());
      return mpz_divisible_p(e.get_num_mpz_t(), gg.get_mpz_t());
    }
    case CommRing::Kind::LocalizedIntegers: {
      if (sgn(e) == 0) return true;
      if (sgn(g) == 0) return false;
      return *p_valuation(e, x.ring().parameter()) >= *p_valuation(g, x.ring().parameter());
    }
  }
  return false;
}

bool ideal_contains(const IdealFG& x, const IdealFG& y) {
  if (!(x.ring() == y.ring())) throw RingMismatch("ideal containment across rings");
  return ideal_contains(x, y.normal_form());
}

Presentation make_presentation(CommRing ring, RatMatrix matrix) {
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) matrix(i, j) = ring.canonical(matrix(i, j));
  return Presentation{ring, std::move(matrix)};
}

std::vector<Rational> maximal_minors(const RatMatrix& m) {
  std::vector<Rational> out;
  if (m.rows() < m.cols()) return out;
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  for (const auto& rows : subsets(m.rows(), m.cols()))
    out.push_back(determinant(submatrix(m, rows, cols), Rational(0), Rational(1)));
  return out;
}

namespace {

IntMatrix to_integer_matrix(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num();
  return z;
}

}  // namespace

// Over a PID the gcd of the maximal minors is the product of the Smith
// invariants, so no minor enumeration is needed. Z/m goes through any
// integer lift (base change).
IdealFG fitting_ideal(const Presentation& pres) {
  if (pres.a() < pres.b()) return IdealFG::zero(pres.ring);
  if (pres.b() == 0) return IdealFG::unit(pres.ring);
  if (pres.ring.kind() == CommRing::Kind::LocalizedIntegers) {
    long total = 0;
    for (const auto& v : smith_valuations_local(pres.matrix, pres.ring.parameter())) {
      if (!v) return IdealFG::zero(pres.ring);
      total += *v;
    }
    return IdealFG(pres.ring, {prime_power(pres.ring.parameter(), total)});
  }
  BigInt prod = 1;
  for (const auto& d : smith_invariants(to_integer_matrix(pres.matrix))) prod *= d;
  return IdealFG(pres.ring, {Rational(prod)});
}

IdealFG annihilator_ideal(const Presentation& pres) {
  const std::size_t b = pres.b();
  if (b == 0) return IdealFG::unit(pres.ring);
  switch (pres.ring.kind()) {
    case CommRing::Kind::Integers: {
      if (pres.a() < b) return IdealFG::zero(pres.ring);
      const auto d = smith_invariants(to_integer_matrix(pres.matrix));
      return IdealFG(pres.ring, {Rational(d[b - 1])});
    }
    case CommRing::Kind::IntegersMod: {
      // Lift to Z and add the relations m * e_k.
      IntMatrix z = to_integer_matrix(pres.matrix);
      IntMatrix stacked(z.rows() + b, b, BigInt(0));
      for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < b; ++j) stacked(i, j) = z(i, j);
      for (std::size_t k = 0; k < b; ++k) stacked(z.rows() + k, k) = pres.ring.parameter();
      const auto d = smith_invariants(stacked);
      return IdealFG(pres.ring, {Rational(d[b - 1])});
    }
    case CommRing::Kind::LocalizedIntegers: {
      if (pres.a() < b) return IdealFG::zero(pres.ring);
      const auto v = smith_valuations_local(pres.matrix, pres.ring.parameter());
      if (!v[b - 1]) return IdealFG::zero(pres.ring);
      return IdealFG(pres.ring, {prime_power(pres.ring.parameter(), *v[b - 1])});
    }
  }
  return IdealFG::zero(pres.ring);
}

Presentation reduce_mod(const Presentation& pres, unsigned long m) {
  if (pres.ring.kind() != CommRing::Kind::Integers) throw RingMismatch("base change needs a Z-presentation");
  return make_presentation(CommRing::integers_mod(m), pres.matrix);
}

IdealFG reduce_mod(const IdealFG& ideal, unsigned long m) {
  if (ideal.ring().kind() != CommRing::Kind::Integers) throw RingMismatch("base change needs a Z-ideal");
  return IdealFG(CommRing::integers_mod(m), ideal.generators());
}

Presentation direct_sum(const Presentation& x, const Presentation& y) {
  if (!(x.ring == y.ring)) throw RingMismatch("direct sum across rings");
  RatMatrix m(x.a() + y.a(), x.b() + y.b(), Rational(0));
  for (std::size_t i = 0; i < x.a(); ++i)
    for (std::size_t j = 0; j < x.b(); ++j) m(i, j) = x.matrix(i, j);
  for (std::size_t i = 0; i < y.a(); ++i)
    for (std::size_t j = 0; j < y.b(); ++j) m(x.a() + i, x.b() + j) = y.matrix(i, j);
  return Presentation{x.ring, std::move(m)};
}

}  // namespace fitkernel
