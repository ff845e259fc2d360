#include "fitkernel/invariants.hpp"

#include "fitkernel/error.hpp"
#include "fitkernel/hybrid_order.hpp"
#include "fitkernel/parallel.hpp"

namespace fitkernel {

GroupRingPresentation make_gr_presentation(GroupPtr g, unsigned long p, GRMatrix matrix) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const auto& x = matrix(i, j);
      if (!(x.group()->spec() == g->spec())) throw RingMismatch("presentation entry from another group");
      if (!x.is_p_integral(p)) throw DomainError("presentation entry is not " + std::to_string(p) + "-integral");
    }
  return GroupRingPresentation{std::move(g), p, std::move(matrix)};
}

std::string exactness_name(Exactness e) {
  switch (e) {
    case Exactness::ExactQuadratic:
      return "exact_quadratic";
    case Exactness::ExactNice:
      return "exact_nice";
    case Exactness::LowerBound:
      return "lower_bound";
  }
  return "?";
}

CentralIdeal valuations_of(const WedderburnData& w, const CentralElem& x) {
  CentralIdeal out;
  for (std::size_t i = 0; i < w.size(); ++i) out.valuations.push_back(w.component(i).field.valuation(x.values.at(i)));
  return out;
}

CentralIdeal expansion_of(const WedderburnData& w, const std::vector<CentralElem>& gens) {
  CentralIdeal out{std::vector<Valuation>(w.size(), std::nullopt)};
  for (const auto& g : gens) {
    const CentralIdeal v = valuations_of(w, g);
    for (std::size_t i = 0; i < w.size(); ++i) out.valuations[i] = min_valuation(out.valuations[i], v.valuations[i]);
  }
  return out;
}

namespace {

GRMatrix select_rows(const GRMatrix& m, const std::vector<std::size_t>& rows) {
  GRMatrix out = gr_zero(m(0, 0).group(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  return out;
}

// Coordinates of a row (x_1, ..., x_b) of Lambda^b in Q^{b |G|}.
std::vector<Rational> flatten_row(const std::vector<GroupRingElem>& row) {
  std::vector<Rational> out;
  for (const auto& x : row) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  return out;
}

// Z_(p)-span of c * g * (row j of h) for g in G and every row j.
IntLattice relation_lattice(const GroupRingPresentation& pres, const GroupRingElem& c) {
  const GroupPtr g = pres.group;
  RatMatrix gens(0, pres.b() * g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    const GroupRingElem left = c * GroupRingElem::basis(g, x);
    for (std::size_t j = 0; j < pres.a(); ++j) {
      std::vector<GroupRingElem> row;
      for (std::size_t k = 0; k < pres.b(); ++k) row.push_back(left * pres.matrix(j, k));
      gens.append_row(flatten_row(row));
    }
  }
  return IntLattice(std::move(gens));
}

bool matches_module_length(const WedderburnData& w, const GroupRingPresentation& pres, const CentralIdeal& expansion) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& comp = w.component(i);
    if (comp.degree == 1) continue;
    if (comp.schur_index != 1 || !w.idempotent(i).is_p_integral(w.prime())) return false;
    const auto len = component_length(w, pres, i);
    if (!len) {
      if (expansion.valuations[i]) return false;
      continue;
    }
    const long scale = static_cast<long>(comp.field.residue_degree() * comp.matrix_size);
    if (*len % scale || expansion.valuations[i] != Valuation(*len / scale)) return false;
  }
  return true;
}

Exactness classify_result(const WedderburnData& w, const GroupRingPresentation& pres, const CentralIdeal& expansion) {
  if (pres.a() == pres.b()) return Exactness::ExactQuadratic;
  if (classify_nice(*w.group(), w.prime()).nice && matches_module_length(w, pres, expansion))
    return Exactness::ExactNice;
  return Exactness::LowerBound;
}

}  // namespace

std::optional<long> component_length(const WedderburnData& w, const GroupRingPresentation& pres, std::size_t i) {
  const GroupPtr g = pres.group;
  const GroupRingElem e = w.idempotent(i);
  RatMatrix ambient(0, pres.b() * g->order());
  for (std::size_t x = 0; x < g->order(); ++x)
    for (std::size_t k = 0; k < pres.b(); ++k) {
      std::vector<GroupRingElem> row(pres.b(), GroupRingElem(g));
      row[k] = e * GroupRingElem::basis(g, x);
      ambient.append_row(flatten_row(row));
    }
  const IntLattice full(std::move(ambient));
  const IntLattice rel = relation_lattice(pres, e);
  if (rel.rank() < full.rank()) return std::nullopt;
  return lattice_index(full, rel, pres.p).exponent;
}

FitResult fit_of_presentation(const WedderburnData& w, const GroupRingPresentation& pres) {
  if (pres.group->spec() != w.group()->spec() || pres.p != w.prime())
    throw RingMismatch("presentation and Wedderburn data disagree on (G, p)");
  FitResult out;
  if (pres.a() < pres.b() || pres.b() == 0) {
    out.generators.push_back(pres.b() == 0 ? w.one() : w.zero());
  } else {
    const auto rows = subsets(pres.a(), pres.b());
    out.generators.assign(rows.size(), CentralElem{});
    parallel_for(rows.size(), [&](std::size_t k) {
      out.generators[k] = reduced_norm(w, select_rows(pres.matrix, rows[k]));
    });
  }
  out.expansion = expansion_of(w, out.generators);
  out.exactness = classify_result(w, pres, out.expansion);
  return out;
}

IdempotentCut idempotent_cut(const WedderburnData& w, const GroupRingPresentation& pres) {
  IdempotentCut out{{}, GroupRingElem(w.group()), fit_of_presentation(w, pres)};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t full = pres.b() * w.component(i).degree;
    const bool in_upsilon = rank(w.apply(i, pres.matrix), CycNum(1L)) == full;
    if (in_upsilon) {
      out.upsilon.push_back(i);
      out.idempotent += w.idempotent(i);
      continue;
    }
    for (auto& gen : out.cut.generators) gen.values[i] = CycNum();
    out.cut.expansion.valuations[i] = std::nullopt;
  }
  return out;
}

LeftIdealQuotient quotient_by_left_ideal(const WedderburnData& w, const std::vector<GroupRingElem>& generators) {
  if (generators.empty()) throw DomainError("left ideal needs at least one generator");
  const GroupPtr g = w.group();
  GRMatrix stack = gr_zero(g, generators.size(), 1);
  for (std::size_t k = 0; k < generators.size(); ++k) stack(k, 0) = generators[k];
  const GroupRingPresentation pres = make_gr_presentation(g, w.prime(), stack);

  LeftIdealQuotient out;
  if (generators.size() == 1) {
    out.elements = generators;
  } else {
    // x_k, g x_k and x_k + g x_l: a finite multiplier set.
    auto push = [&](const GroupRingElem& x) {
      for (const auto& y : out.elements)
        if (y == x) return;
      out.elements.push_back(x);
    };
    for (const auto& x : generators) push(x);
    for (const auto& x : generators)
      for (std::size_t h = 1; h < g->order(); ++h) push(GroupRingElem::basis(g, h) * x);
    for (const auto& x : generators)
      for (const auto& y : generators)
        for (std::size_t h = 0; h < g->order(); ++h)
          if (&x != &y) push(x + GroupRingElem::basis(g, h) * y);
  }
  out.fit.generators.assign(out.elements.size(), CentralElem{});
  parallel_for(out.elements.size(),
               [&](std::size_t k) { out.fit.generators[k] = reduced_norm(w, out.elements[k]); });
  out.fit.expansion = expansion_of(w, out.fit.generators);
  out.fit.exactness = classify_result(w, pres, out.fit.expansion);
  return out;
}

bool verify_annihilation(const GroupRingElem& z, const GroupRingPresentation& pres) {
  if (!z.is_central()) throw NotCentral("annihilation check needs a central element");
  const GroupPtr g = pres.group;
  const RatMatrix basis = relation_lattice(pres, GroupRingElem::scalar(g, 1)).basis(pres.p);
  for (std::size_t k = 0; k < pres.b(); ++k) {
    std::vector<GroupRingElem> row(pres.b(), GroupRingElem(g));
    row[k] = z;
    const auto coords = echelon_coordinates(flatten_row(row), basis);
    if (!coords) return false;
    for (const auto& c : *coords)
      if (!is_p_integral(c, pres.p)) return false;
  }
  return true;
}

SaturationCertificate witness_I_saturation(const WedderburnData& w, const std::vector<GRMatrix>& witnesses) {
  const GroupPtr g = w.group();
  const unsigned long p = w.prime();
  const auto centre = centre_basis(g);
  std::vector<GroupRingElem> gens = centre;
  for (const auto& h : witnesses) {
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j)
        if (!h(i, j).is_p_integral(p)) throw DomainError("witness is not a matrix over the group ring");
    const GroupRingElem n = w.to_group_ring(reduced_norm(w, h));
    for (const auto& c : centre) gens.push_back(c * n);
  }
  RatMatrix basis = lattice_of(gens).basis(p);
  while (true) {
    RatMatrix grown = basis;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = i; j < basis.rows(); ++j) {
        const GroupRingElem x(g, std::vector<Rational>(basis.row(i).begin(), basis.row(i).end()));
        const GroupRingElem y(g, std::vector<Rational>(basis.row(j).begin(), basis.row(j).end()));
        grown.append_row((x * y).coeffs());
      }
    grown = hermite_form_local(grown, p);
    if (grown == basis) break;
    basis = std::move(grown);
  }
  SaturationCertificate cert;
  cert.generated = IntLattice(basis);
  cert.certified = true;
  const RatMatrix target = maximal_order_centre(w).generators();
  for (std::size_t r = 0; r < target.rows(); ++r) {
    auto coords = echelon_coordinates(target.row(r), basis);
    bool ok = coords.has_value();
    if (ok)
      for (const auto& c : *coords) ok = ok && is_p_integral(c, p);
    if (!ok) {
      cert.certified = false;
      cert.coordinates.clear();
      break;
    }
    cert.coordinates.push_back(std::move(*coords));
  }
  return cert;
}

SaturationCertificate witness_I_saturation(const WedderburnData& w, const std::vector<GroupRingElem>& witnesses) {
  std::vector<GRMatrix> mats;
  for (const auto& x : witnesses) mats.emplace_back(1, 1, x);
  return witness_I_saturation(w, mats);
}

std::vector<GroupRingElem> default_witnesses(GroupPtr g) {
  std::vector<GroupRingElem> out;
  for (std::size_t x = 0; x < g->order(); ++x) {
    const GroupRingElem gx = GroupRingElem::basis(g, x);
    out.push_back(gx);
    out.push_back(-gx);
    out.push_back(gx + GroupRingElem::basis(g, g->inv(x)));
  }
  return out;
}

bool gl_invariance_check(const WedderburnData& w, const GroupRingPresentation& pres, const GRMatrix& u,
                         const GRMatrix& u_inverse) {
  if (pres.a() != pres.b()) throw DomainError("invariance check needs a quadratic presentation");
  if (u.rows() != pres.a() || u.cols() != pres.a() || u_inverse.rows() != pres.a() || u_inverse.cols() != pres.a())
    throw DomainError("unit has the wrong size");
  for (const GRMatrix* m : {&u, &u_inverse})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (!(*m)(i, j).is_p_integral(pres.p)) throw NotInvertible("unit entries must be p-integral");
  if (!(gr_multiply(u, u_inverse) == gr_identity(pres.group, pres.a())))
    throw NotInvertible("supplied inverse does not invert the unit");
  for (const auto& v : valuations_of(w, reduced_norm(w, u)).valuations)
    if (v != Valuation(0)) return false;
  const GroupRingPresentation moved{pres.group, pres.p, gr_multiply(u, pres.matrix)};
  return fit_of_presentation(w, moved).expansion == fit_of_presentation(w, pres).expansion;
}

}  // namespace fitkernel
