#include "fitkernel/wedderburn.hpp"

#include <set>

#include "fitkernel/error.hpp"

namespace fitkernel {

namespace {

struct RawCharacter {
  std::vector<CycMatrix> rep;
};

CycMatrix cyc_identity(std::size_t n) { return identity_matrix<CycNum>(n, CycNum(), CycNum(1L)); }

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) { return multiply(a, b, CycNum()); }

CycMatrix cyc_power(const CycMatrix& a, long k) {
  CycMatrix r = cyc_identity(a.rows());
  for (long i = 0; i < k; ++i) r = cyc_mul(r, a);
  return r;
}

CycMatrix scalar1(const CycNum& c) { return CycMatrix(1, 1, c); }

// Representations for x^i y^j families from generator images.
std::vector<CycMatrix> rep_from_xy(const FiniteGroup& g, const CycMatrix& x, const CycMatrix& y) {
  std::vector<CycMatrix> out;
  for (std::size_t e = 0; e < g.order(); ++e) {
    const auto& c = g.coords(e);
    out.push_back(cyc_mul(cyc_power(x, c[0]), cyc_power(y, c[1])));
  }
  return out;
}

std::vector<RawCharacter> catalog_characters(const FiniteGroup& g) {
  const unsigned long E = g.character_conductor();
  const auto& prm = g.spec().params;
  std::vector<RawCharacter> chars;
  switch (g.spec().family) {
    case Family::Cyclic: {
      const long n = static_cast<long>(prm[0]);
      for (long k = 0; k < n; ++k) {
        RawCharacter c;
        for (std::size_t e = 0; e < g.order(); ++e)
          c.rep.push_back(scalar1(CycNum::zeta(E, k * g.coords(e)[0])));
        chars.push_back(std::move(c));
      }
      break;
    }
    case Family::AbelianProduct: {
      // Characters indexed like the elements themselves.
      for (std::size_t kidx = 0; kidx < g.order(); ++kidx) {
        const auto& k = g.coords(kidx);
        RawCharacter c;
        for (std::size_t e = 0; e < g.order(); ++e) {
          long expo = 0;
          for (std::size_t t = 0; t < prm.size(); ++t)
            expo += k[t] * g.coords(e)[t] * static_cast<long>(E / prm[t]);
          c.rep.push_back(scalar1(CycNum::zeta(E, expo)));
        }
        chars.push_back(std::move(c));
      }
      break;
    }
    case Family::Dihedral:
    case Family::Quaternion8: {
      const long n = static_cast<long>(g.order() / 2);
      std::vector<long> xs{1};
      if (n % 2 == 0) xs.push_back(-1);
      for (long a : xs)
        for (long b : {1L, -1L}) {
          RawCharacter c;
          c.rep = rep_from_xy(g, scalar1(CycNum(a)), scalar1(CycNum(b)));
          chars.push_back(std::move(c));
        }
      if (g.spec().family == Family::Quaternion8) {
        CycMatrix x(2, 2, CycNum()), y(2, 2, CycNum());
        x(0, 0) = CycNum::zeta(4, 1);
        x(1, 1) = CycNum::zeta(4, 3);
        y(0, 1) = CycNum(1L);
        y(1, 0) = CycNum(-1L);
        chars.push_back({rep_from_xy(g, x, y)});
        break;
      }
      for (long j = 1; 2 * j < n; ++j) {
        CycMatrix x(2, 2, CycNum()), y(2, 2, CycNum());
        x(0, 0) = CycNum::zeta(E, j);
        x(1, 1) = CycNum::zeta(E, -j);
        y(0, 1) = CycNum(1L);
        y(1, 0) = CycNum(1L);
        chars.push_back({rep_from_xy(g, x, y)});
      }
      break;
    }
    case Family::Alternating4: {
      // Linear characters through A4 / V4 = <(1 2 3)>.
      const std::size_t c = g.index_of("(1 2 3)");
      const auto v4 = commutator_subgroup(g);
      std::vector<long> coset(g.order(), -1);
      for (long k = 0; k < 3; ++k)
        for (auto v : v4) coset[g.mul(g.power(c, k), v)] = k;
      for (long j = 0; j < 3; ++j) {
        RawCharacter ch;
        for (std::size_t e = 0; e < g.order(); ++e) ch.rep.push_back(scalar1(CycNum::zeta(3, j * coset[e])));
        chars.push_back(std::move(ch));
      }
      // Permutation action on e_i - e_4, i = 1..3.
      RawCharacter ch;
      for (std::size_t e = 0; e < g.order(); ++e) {
        const auto& perm = g.coords(e);
        CycMatrix m(3, 3, CycNum());
        for (std::size_t i = 0; i < 3; ++i) {
          const auto img = static_cast<std::size_t>(perm[i]);
          const auto img4 = static_cast<std::size_t>(perm[3]);
          if (img < 3) m(img, i) += CycNum(1L);
          if (img4 < 3) m(img4, i) -= CycNum(1L);
        }
        ch.rep.push_back(std::move(m));
      }
      chars.push_back(std::move(ch));
      break;
    }
    case Family::Metacyclic: {
      const long p = static_cast<long>(prm[0]);
      const long q = static_cast<long>(prm[1]);
      const long r = static_cast<long>(prm[2]) % p;
      for (long l = 0; l < q; ++l) {
        RawCharacter c;
        c.rep = rep_from_xy(g, scalar1(CycNum(1L)), scalar1(CycNum::zeta(E, l * static_cast<long>(E) / q)));
        chars.push_back(std::move(c));
      }
      std::vector<long> rpow(static_cast<std::size_t>(q));
      rpow[0] = 1;
      for (long k = 1; k < q; ++k) rpow[static_cast<std::size_t>(k)] = (rpow[static_cast<std::size_t>(k - 1)] * r) % p;
      std::set<long> used;
      for (long s = 1; s < p; ++s) {
        if (used.count(s)) continue;
        for (long k = 0; k < q; ++k) used.insert((s * rpow[static_cast<std::size_t>(k)]) % p);
        CycMatrix x(static_cast<std::size_t>(q), static_cast<std::size_t>(q), CycNum());
        CycMatrix y(static_cast<std::size_t>(q), static_cast<std::size_t>(q), CycNum());
        for (long k = 0; k < q; ++k) {
          // x v_k = zeta_p^(s r^-k) v_k, y v_k = v_(k+1).
          const long expo = (s * rpow[static_cast<std::size_t>((q - k) % q)]) % p;
          x(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
              CycNum::zeta(E, expo * static_cast<long>(E) / p);
          y(static_cast<std::size_t>((k + 1) % q), static_cast<std::size_t>(k)) = CycNum(1L);
        }
        chars.push_back({rep_from_xy(g, x, y)});
      }
      break;
    }
  }
  return chars;
}

CycNum trace_of(const CycMatrix& m) {
  CycNum t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

WedderburnData wedderburn_data(GroupPtr g, unsigned long p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  WedderburnData w;
  w.group_ = g;
  w.p_ = p;
  const unsigned long E = g->character_conductor();
  auto raw = catalog_characters(*g);

  std::vector<std::vector<CycNum>> values;
  for (const auto& c : raw) {
    std::vector<CycNum> v;
    for (const auto& m : c.rep) v.push_back(trace_of(m).lifted(E));
    values.push_back(std::move(v));
  }
  auto conjugate = [&](const std::vector<CycNum>& v, unsigned long k) {
    std::vector<CycNum> out;
    for (const auto& x : v) out.push_back(x.galois(static_cast<long>(k)));
    return out;
  };

  std::vector<bool> assigned(raw.size(), false);
  std::size_t sum_sq = 0;
  for (std::size_t c = 0; c < raw.size(); ++c) {
    if (assigned[c]) continue;
    std::vector<unsigned long> fixing, orbit;
    std::set<std::size_t> members;
    for (unsigned long k : unit_group(E)) {
      const auto conj = conjugate(values[c], k);
      if (conj == values[c]) fixing.push_back(k);
      std::size_t match = raw.size();
      for (std::size_t d = 0; d < raw.size(); ++d)
        if (values[d] == conj) {
          match = d;
          break;
        }
      if (match == raw.size()) throw DomainError("character table is not Galois stable");
      if (members.insert(match).second) orbit.push_back(k);
    }
    for (auto m : members) assigned[m] = true;

    const unsigned long degree = raw[c].rep.front().rows();
    const bool quaternion_split = g->spec().family == Family::Quaternion8 && degree == 2 && p == 2;
    LocalField field(E, p, fixing);
    const auto basis = field.integral_basis();
    WedderburnComponent comp{
        w.components_.size(),
        values[c],
        orbit,
        degree,
        quaternion_split ? 1 : degree,
        quaternion_split ? 2UL : 1UL,
        raw[c].rep,
        field,
        field.different_exponent(),
        basis,
        field.uniformizer(),
    };
    sum_sq += degree * degree * orbit.size();
    w.components_.push_back(std::move(comp));
  }
  if (sum_sq != g->order()) throw DomainError("catalog characters do not exhaust the group algebra");
  return w;
}

GroupRingElem WedderburnData::embed(std::size_t i, const CycNum& alpha) const {
  const auto& comp = components_.at(i);
  if (!comp.field.contains(alpha)) throw DomainError("value does not lie in the component centre");
  const FiniteGroup& g = *group_;
  std::vector<Rational> coeffs(g.order());
  const Rational scale = make_rational(BigInt(comp.degree), BigInt(static_cast<unsigned long>(g.order())));
  for (std::size_t e = 0; e < g.order(); ++e)
    coeffs[e] = scale * comp.field.trace(alpha * comp.character[g.inv(e)]);
  return GroupRingElem(group_, std::move(coeffs));
}

GroupRingElem WedderburnData::to_group_ring(const CentralElem& c) const {
  if (c.values.size() != size()) throw DomainError("central element has the wrong component count");
  GroupRingElem out(group_);
  for (std::size_t i = 0; i < size(); ++i)
    if (!c.values[i].is_zero()) out += embed(i, c.values[i]);
  return out;
}

CentralElem WedderburnData::central_components(const GroupRingElem& z) const {
  if (!z.is_central()) throw NotCentral("element is not central");
  CentralElem out;
  for (const auto& comp : components_) {
    CycNum s;
    for (std::size_t e = 0; e < group_->order(); ++e)
      if (sgn(z[e])) s += CycNum(z[e]) * comp.character[e];
    out.values.push_back(s * CycNum(make_rational(BigInt(1), BigInt(comp.degree))));
  }
  return out;
}

CycMatrix WedderburnData::apply(std::size_t i, const GroupRingElem& x) const {
  const auto& comp = components_.at(i);
  const std::size_t d = comp.degree;
  CycMatrix m(d, d, CycNum());
  for (std::size_t e = 0; e < group_->order(); ++e) {
    if (sgn(x[e]) == 0) continue;
    const CycNum c(x[e]);
    const CycMatrix& r = comp.representation[e];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (!r(a, b).is_zero()) m(a, b) += c * r(a, b);
  }
  return m;
}

CycMatrix WedderburnData::apply(std::size_t i, const GRMatrix& h) const {
  const std::size_t d = components_.at(i).degree;
  CycMatrix m(h.rows() * d, h.cols() * d, CycNum());
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) {
      const CycMatrix blk = apply(i, h(r, c));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) m(r * d + a, c * d + b) = blk(a, b);
    }
  return m;
}

CentralElem WedderburnData::one() const { return CentralElem{std::vector<CycNum>(size(), CycNum(1L))}; }
CentralElem WedderburnData::zero() const { return CentralElem{std::vector<CycNum>(size(), CycNum())}; }

std::vector<GroupRingElem> central_idempotents(const WedderburnData& w) {
  std::vector<GroupRingElem> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.idempotent(i));
  return out;
}

CentralElem reduced_norm(const WedderburnData& w, const GRMatrix& h) {
  if (h.rows() != h.cols()) throw DomainError("reduced norm of a non-square matrix");
  CentralElem out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out.values.push_back(determinant(w.apply(i, h), CycNum(), CycNum(1L)));
  return out;
}

CentralElem reduced_norm(const WedderburnData& w, const GroupRingElem& x) {
  return reduced_norm(w, GRMatrix(1, 1, x));
}

std::vector<CycNum> characteristic_polynomial(const CycMatrix& a) {
  const std::size_t m = a.rows();
  std::vector<CycNum> c(m + 1);
  c[m] = CycNum(1L);
  CycMatrix mk(m, m, CycNum());
  for (std::size_t k = 1; k <= m; ++k) {
    CycMatrix next = cyc_mul(a, mk);
    for (std::size_t i = 0; i < m; ++i) next(i, i) += c[m - k + 1];
    mk = std::move(next);
    const CycMatrix amk = cyc_mul(a, mk);
    c[m - k] = -trace_of(amk) * CycNum(make_rational(BigInt(1), BigInt(static_cast<unsigned long>(k))));
  }
  return c;
}

std::vector<CycNum> reduced_charpoly(const WedderburnData& w, const GRMatrix& h, std::size_t i) {
  if (h.rows() != h.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  return characteristic_polynomial(w.apply(i, h));
}

GRMatrix generalized_adjoint(const WedderburnData& w, const GRMatrix& h) {
  if (h.rows() != h.cols()) throw DomainError("adjoint of a non-square matrix");
  const GroupPtr g = w.group();
  const std::size_t n = h.rows();
  std::vector<std::vector<CycNum>> polys;
  std::size_t max_m = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    polys.push_back(reduced_charpoly(w, h, i));
    max_m = std::max(max_m, polys.back().size() - 1);
  }
  std::vector<GRMatrix> powers{gr_identity(g, n)};
  while (powers.size() < max_m) powers.push_back(gr_multiply(powers.back(), h));

  GRMatrix out = gr_zero(g, n, n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t m = polys[i].size() - 1;
    const Rational sign = (m + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    for (std::size_t j = 1; j <= m; ++j) {
      if (polys[i][j].is_zero()) continue;
      const GroupRingElem z = w.embed(i, polys[i][j]) * sign;
      const GRMatrix term = gr_scale(z, powers[j - 1]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) += term(r, c);
    }
  }
  return out;
}

CentralElem operator*(const CentralElem& x, const CentralElem& y) {
  if (x.values.size() != y.values.size()) throw DomainError("central elements of different algebras");
  CentralElem out;
  for (std::size_t i = 0; i < x.values.size(); ++i) out.values.push_back(x.values[i] * y.values[i]);
  return out;
}

}  // namespace fitkernel
