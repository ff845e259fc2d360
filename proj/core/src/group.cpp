#include "fitkernel/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fitkernel/error.hpp"

namespace fitkernel {

std::string family_name(Family f) {
  switch (f) {
    case Family::Cyclic:
      return "cyclic";
    case Family::AbelianProduct:
      return "abelian";
    case Family::Dihedral:
      return "dihedral";
    case Family::Quaternion8:
      return "quaternion8";
    case Family::Alternating4:
      return "alternating4";
    case Family::Metacyclic:
      return "metacyclic";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::Cyclic, Family::AbelianProduct, Family::Dihedral, Family::Quaternion8,
                   Family::Alternating4, Family::Metacyclic})
    if (family_name(f) == name) return f;
  throw NotInCatalog("unknown group family \"" + name + "\"");
}

std::string GroupSpec::name() const {
  std::string s = family_name(family);
  if (params.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

namespace {

std::string power_label(const std::string& gen, long k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

std::string join_label(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "1" : out;
}

std::string cycle_label(const std::vector<long>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<long>(s)) continue;
    out += "(";
    std::size_t c = s;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      out += (first ? "" : " ") + std::to_string(c + 1);
      first = false;
      c = static_cast<std::size_t>(perm[c]);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

unsigned long mult_order(unsigned long r, unsigned long p) {
  unsigned long x = r % p, k = 1;
  while (x != 1) {
    x = (x * r) % p;
    if (++k > p) return 0;
  }
  return k;
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::make(const GroupSpec& spec) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->spec_ = spec;
  const auto& prm = spec.params;
  auto need = [&](std::size_t count) {
    if (prm.size() != count)
      throw NotInCatalog(family_name(spec.family) + " expects " + std::to_string(count) + " parameter(s)");
  };
  // Product of two elements given by coordinates.
  std::function<std::vector<long>(const std::vector<long>&, const std::vector<long>&)> mul;

  switch (spec.family) {
    case Family::Cyclic: {
      need(1);
      const long n = static_cast<long>(prm[0]);
      if (n < 1) throw NotInCatalog("cyclic group needs n >= 1");
      for (long i = 0; i < n; ++i) {
        g->coords_.push_back({i});
        g->labels_.push_back(join_label({power_label("x", i)}));
      }
      mul = [n](const auto& a, const auto& b) { return std::vector<long>{(a[0] + b[0]) % n}; };
      g->conductor_ = prm[0];
      break;
    }
    case Family::AbelianProduct: {
      if (prm.empty()) throw NotInCatalog("abelian product needs at least one factor");
      std::size_t total = 1;
      for (auto n : prm) {
        if (n < 1) throw NotInCatalog("abelian factors must be >= 1");
        total *= n;
        g->conductor_ = std::lcm(g->conductor_, n);
      }
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<long> c(prm.size());
        std::size_t rest = idx;
        for (std::size_t k = prm.size(); k-- > 0;) {
          c[k] = static_cast<long>(rest % prm[k]);
          rest /= prm[k];
        }
        std::vector<std::string> parts;
        for (std::size_t k = 0; k < c.size(); ++k) parts.push_back(power_label("x" + std::to_string(k + 1), c[k]));
        g->coords_.push_back(c);
        g->labels_.push_back(join_label(parts));
      }
      mul = [prm](const auto& a, const auto& b) {
        std::vector<long> c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c[k] = (a[k] + b[k]) % static_cast<long>(prm[k]);
        return c;
      };
      break;
    }
    case Family::Dihedral:
    case Family::Quaternion8:
    case Family::Metacyclic: {
      long n = 0, q = 2, r = -1;
      bool quat = spec.family == Family::Quaternion8;
      if (spec.family == Family::Dihedral) {
        need(1);
        if (prm[0] < 4 || prm[0] % 2) throw NotInCatalog("dihedral group order must be even and >= 4");
        n = static_cast<long>(prm[0] / 2);
        g->conductor_ = static_cast<unsigned long>(n);
      } else if (quat) {
        need(0);
        n = 4;
        g->conductor_ = 4;
      } else {
        need(3);
        if (!is_prime(prm[0]) || prm[1] < 2 || (prm[0] - 1) % prm[1])
          throw NotInCatalog("metacyclic(p,q,r) needs p prime and q | p-1");
        if (mult_order(prm[2] % prm[0], prm[0]) != prm[1])
          throw NotInCatalog("metacyclic(p,q,r) needs r of multiplicative order q mod p");
        n = static_cast<long>(prm[0]);
        q = static_cast<long>(prm[1]);
        r = static_cast<long>(prm[2] % prm[0]);
        g->conductor_ = std::lcm(prm[0], prm[1]);
      }
      for (long j = 0; j < q; ++j)
        for (long i = 0; i < n; ++i) {
          g->coords_.push_back({i, j});
          g->labels_.push_back(join_label({power_label("x", i), power_label("y", j)}));
        }
      // y^j x^k = x^(k * s^j) y^j with s = -1 (dihedral, quaternion) or r.
      const long s = r < 0 ? n - 1 : r;
      mul = [n, q, s, quat](const auto& a, const auto& b) {
        long sk = b[0];
        for (long t = 0; t < a[1]; ++t) sk = (sk * s) % n;
        long i = a[0] + sk;
        long j = a[1] + b[1];
        if (j >= q) {
          j -= q;
          if (quat) i += 2;  // y^2 = x^2
        }
        return std::vector<long>{i % n, j};
      };
      break;
    }
    case Family::Alternating4: {
      need(0);
      std::vector<long> perm{0, 1, 2, 3};
      do {
        long inversions = 0;
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b)
            if (perm[a] > perm[b]) ++inversions;
        if (inversions % 2) continue;
        g->coords_.push_back(perm);
        g->labels_.push_back(cycle_label(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      mul = [](const auto& a, const auto& b) {
        std::vector<long> c(4);
        for (int k = 0; k < 4; ++k) c[k] = a[static_cast<std::size_t>(b[k])];
        return c;
      };
      g->conductor_ = 3;
      break;
    }
  }

  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t i = 0; i < g->coords_.size(); ++i) index[g->coords_[i]] = i;
  const std::size_t n = g->coords_.size();
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g->table_[a * n + b] = index.at(mul(g->coords_[a], g->coords_[b]));
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw DomainError("element 0 is not the identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n || mul(inverse_[a], a) != 0) throw DomainError("multiplication table lacks inverses");
  // Associativity spot check on a sparse grid.
  const std::size_t step = n > 24 ? n / 12 : 1;
  for (std::size_t a = 0; a < n; a += step)
    for (std::size_t b = 0; b < n; b += step)
      for (std::size_t c = 0; c < n; c += step)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("multiplication table is not associative");
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw SchemaError("no element labelled \"" + label + "\" in " + spec_.name());
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  if (k < 0) return power(inv(a), -k);
  std::size_t x = 0;
  for (long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::subgroup_generated(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> elems{0};
  in[0] = true;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (auto g : gens) {
      const std::size_t x = mul(elems[k], g);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::is_normal(const std::vector<std::size_t>& subgroup) const {
  std::vector<bool> in(order(), false);
  for (auto h : subgroup) in[h] = true;
  for (std::size_t g = 0; g < order(); ++g)
    for (auto h : subgroup)
      if (!in[mul(mul(g, h), inv(g))]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> done(order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < order(); ++x) {
    if (done[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t g = 0; g < order(); ++g) cls.insert(mul(mul(g, x), inv(g)));
    for (auto c : cls) done[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<std::size_t> commutator_subgroup(const FiniteGroup& g) {
  std::set<std::size_t> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return g.subgroup_generated({comms.begin(), comms.end()});
}

namespace {

bool is_p_power(std::size_t n, unsigned long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<std::size_t> sylow_subgroup(const FiniteGroup& g, unsigned long p) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  std::vector<std::size_t> h{0};
  while (h.size() < target) {
    bool grown = false;
    for (std::size_t x = 0; x < g.order() && !grown; ++x) {
      if (std::binary_search(h.begin(), h.end(), x) || !is_p_power(g.element_order(x), p)) continue;
      std::vector<std::size_t> gens = h;
      gens.push_back(x);
      auto k = g.subgroup_generated(gens);
      if (is_p_power(k.size(), p)) {
        h = std::move(k);
        grown = true;
      }
    }
    if (!grown) throw DomainError("Sylow search stalled");
  }
  return h;
}

NiceWitness classify_nice(const FiniteGroup& g, unsigned long p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  NiceWitness w;
  w.commutator_order = commutator_subgroup(g).size();
  w.nice = w.commutator_order % p != 0;
  w.sylow = sylow_subgroup(g, p);
  w.sylow_abelian = true;
  for (auto a : w.sylow)
    for (auto b : w.sylow)
      if (g.mul(a, b) != g.mul(b, a)) w.sylow_abelian = false;
  std::vector<std::size_t> prime_to_p;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p) prime_to_p.push_back(x);
  if (prime_to_p.size() * w.sylow.size() == g.order() && g.subgroup_generated(prime_to_p) == prime_to_p &&
      g.is_normal(prime_to_p))
    w.complement = prime_to_p;
  return w;
}

GroupRingElem::GroupRingElem(GroupPtr g) : group_(std::move(g)), coeffs_(group_->order(), Rational(0)) {}

GroupRingElem::GroupRingElem(GroupPtr g, std::vector<Rational> coeffs)
    : group_(std::move(g)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order()) throw DomainError("coefficient vector has the wrong length");
}

GroupRingElem GroupRingElem::basis(GroupPtr g, std::size_t element, const Rational& c) {
  GroupRingElem x(std::move(g));
  x.coeffs_.at(element) = c;
  return x;
}

GroupRingElem GroupRingElem::scalar(GroupPtr g, const Rational& c) { return basis(std::move(g), 0, c); }

GroupRingElem GroupRingElem::sum_of(GroupPtr g, const std::vector<std::size_t>& elements) {
  GroupRingElem x(std::move(g));
  for (auto e : elements) x.coeffs_.at(e) += 1;
  return x;
}

bool GroupRingElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool GroupRingElem::is_p_integral(unsigned long p) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [p](const Rational& c) { return fitkernel::is_p_integral(c, p); });
}

bool GroupRingElem::is_central() const {
  const FiniteGroup& g = *group_;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t h = 0; h < g.order(); ++h)
      if (coeffs_[g.mul(g.mul(x, h), g.inv(x))] != coeffs_[h]) return false;
  return true;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  if (group_ != o.group_ && !(group_->spec() == o.group_->spec()))
    throw RingMismatch("group ring elements of different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  if (group_ != o.group_ && !(group_->spec() == o.group_->spec()))
    throw RingMismatch("group ring elements of different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.group_ != b.group_ && !(a.group_->spec() == b.group_->spec()))
    throw RingMismatch("group ring elements of different groups");
  const FiniteGroup& g = *a.group_;
  GroupRingElem c(a.group_);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (sgn(a.coeffs_[x]) == 0) continue;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (sgn(b.coeffs_[y])) c.coeffs_[g.mul(x, y)] += a.coeffs_[x] * b.coeffs_[y];
  }
  return c;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
  return a.group_->spec() == b.group_->spec() && a.coeffs_ == b.coeffs_;
}

GRMatrix gr_zero(GroupPtr g, std::size_t rows, std::size_t cols) {
  return GRMatrix(rows, cols, GroupRingElem(std::move(g)));
}

GRMatrix gr_identity(GroupPtr g, std::size_t n) {
  GRMatrix m = gr_zero(g, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElem::scalar(g, 1);
  return m;
}

GRMatrix gr_multiply(const GRMatrix& a, const GRMatrix& b) {
  if (a.cols() != b.rows() || a.empty() || b.empty()) throw DomainError("group ring matrix shape mismatch");
  GRMatrix c = gr_zero(a(0, 0).group(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

GRMatrix gr_scale(const GroupRingElem& z, const GRMatrix& m) {
  GRMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = z * m(i, j);
  return out;
}

GroupRingElem trace_idempotent(GroupPtr g) {
  const auto comm = commutator_subgroup(*g);
  GroupRingElem e = GroupRingElem::sum_of(g, comm);
  return e * make_rational(BigInt(1), BigInt(static_cast<unsigned long>(comm.size())));
}

std::vector<GroupRingElem> centre_basis(GroupPtr g) {
  std::vector<GroupRingElem> out;
  for (const auto& cls : g->conjugacy_classes()) out.push_back(GroupRingElem::sum_of(g, cls));
  return out;
}

IntLattice lattice_of(const std::vector<GroupRingElem>& elements) {
  if (elements.empty()) throw DomainError("lattice_of needs at least one element");
  RatMatrix m(0, elements.front().coeffs().size());
  for (const auto& x : elements) m.append_row(x.coeffs());
  return IntLattice(std::move(m));
}

}  // namespace fitkernel
