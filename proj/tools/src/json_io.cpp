#include "fitkernel_cli/json_io.hpp"

#include <sstream>

#include "fitkernel/error.hpp"

namespace fitkernel::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

unsigned long as_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<unsigned long>();
}

std::string sub(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string sub(const std::string& where, const std::string& key) { return where + "/" + key; }

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(' ');
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(' ') - a + 1);
}

// Exact label first, then a '*'-separated word of labels with optional
// integer exponents.
std::size_t parse_label(const FiniteGroup& g, const std::string& raw, const std::string& where) {
  const std::string label = trim(raw);
  for (std::size_t k = 0; k < g.order(); ++k)
    if (g.label(k) == label) return k;
  std::size_t acc = g.identity();
  std::stringstream ss(label);
  std::string factor;
  bool any = false;
  while (std::getline(ss, factor, '*')) {
    factor = trim(factor);
    long e = 1;
    std::string base = factor;
    if (auto caret = factor.rfind('^'); caret != std::string::npos && caret > 0 && factor.back() != ')') {
      base = factor.substr(0, caret);
      try {
        std::size_t used = 0;
        e = std::stol(factor.substr(caret + 1), &used);
        if (used != factor.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(where, "bad exponent in element label \"" + raw + "\"");
      }
    }
    std::optional<std::size_t> idx;
    for (std::size_t k = 0; k < g.order(); ++k)
      if (g.label(k) == base) idx = k;
    if (!idx) fail(where, "no element labelled \"" + raw + "\" in " + g.spec().name());
    acc = g.mul(acc, g.power(*idx, e));
    any = true;
  }
  if (!any) fail(where, "empty element label");
  return acc;
}

RatMatrix decode_rat_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) fail(sub(where, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = decode_rational(row[c], sub(sub(where, r), c));
  }
  return m;
}

json encode(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(io::encode(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

json encode(const Rational& q) { return format_rational(q); }

Rational decode_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string \"a/b\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const SchemaError& e) {
    fail(where, e.what());
  }
}

json encode(const CycNum& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(encode(c));
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycNum decode_cyc(const json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return CycNum(decode_rational(j, where));
  const unsigned long e = as_count(field(j, "conductor", where), sub(where, "conductor"));
  if (e == 0) fail(sub(where, "conductor"), "conductor must be positive");
  const json& cs = field(j, "coeffs", where);
  if (!cs.is_array()) fail(sub(where, "coeffs"), "expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < cs.size(); ++k) coeffs.push_back(decode_rational(cs[k], sub(sub(where, "coeffs"), k)));
  return CycNum::from_powers(e, coeffs);
}

json encode(const Valuation& v) {
  if (!v) return {{"zero", true}};
  return *v;
}

Valuation decode_valuation(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_object() && j.size() == 1 && j.contains("zero") && j["zero"] == true) return std::nullopt;
  fail(where, "expected an integer valuation or {\"zero\": true}");
}

json encode(const GroupSpec& spec) {
  json out{{"family", family_name(spec.family)}};
  if (spec.params.size() == 1) out["param"] = spec.params[0];
  else if (!spec.params.empty()) out["params"] = spec.params;
  return out;
}

GroupSpec decode_group(const json& j, const std::string& where) {
  const json& fam = field(j, "family", where);
  if (!fam.is_string()) fail(sub(where, "family"), "expected a string");
  GroupSpec spec;
  spec.family = family_from_name(fam.get<std::string>());
  if (j.contains("param") && j.contains("params")) fail(where, "give either \"param\" or \"params\"");
  if (j.contains("param")) {
    spec.params.push_back(as_count(j["param"], sub(where, "param")));
  } else if (j.contains("params")) {
    const json& ps = j["params"];
    if (!ps.is_array()) fail(sub(where, "params"), "expected an array");
    for (std::size_t k = 0; k < ps.size(); ++k) spec.params.push_back(as_count(ps[k], sub(sub(where, "params"), k)));
  }
  return spec;
}

unsigned long decode_prime(const json& j, const std::string& where) {
  const unsigned long p = as_count(j, where);
  if (!is_prime(p)) fail(where, std::to_string(p) + " is not prime");
  return p;
}

GroupRingElem decode_element(GroupPtr g, const json& j, const std::string& where) {
  GroupRingElem x(g);
  if (j.is_string() || j.is_number_integer()) return GroupRingElem::scalar(g, decode_rational(j, where));
  if (!j.is_object()) fail(where, "expected an object {label: coefficient}");
  for (const auto& [label, coeff] : j.items()) {
    const std::size_t idx = parse_label(*g, label, where);
    x += GroupRingElem::basis(g, idx, decode_rational(coeff, sub(where, label)));
  }
  return x;
}

json encode(const GroupRingElem& x) {
  // Ordered by element index, zero coefficients dropped.
  json out = json::array();
  for (std::size_t k = 0; k < x.coeffs().size(); ++k)
    if (!is_zero(x[k])) out.push_back({x.group()->label(k), encode(x[k])});
  return out;
}

GRMatrix decode_gr_matrix(GroupPtr g, const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(sub(where, 0), "expected a non-empty row");
  const std::size_t cols = j[0].size();
  GRMatrix m = gr_zero(g, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(sub(where, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = decode_element(g, j[r][c], sub(sub(where, r), c));
  }
  return m;
}

json encode(const GRMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    out.push_back(row);
  }
  return out;
}

GroupRingPresentation decode_gr_presentation(const json& doc) {
  const GroupPtr g = FiniteGroup::make(decode_group(field(doc, "group", ""), "/group"));
  const unsigned long p = decode_prime(field(doc, "p", ""), "/p");
  const std::size_t a = as_count(field(doc, "a", ""), "/a");
  const std::size_t b = as_count(field(doc, "b", ""), "/b");
  if (a == 0 || b == 0) fail("", "a and b must be positive");
  const GRMatrix m = decode_gr_matrix(g, field(doc, "entries", ""), "/entries");
  if (m.rows() != a || m.cols() != b) fail("/entries", "shape does not match a x b");
  return make_gr_presentation(g, p, m);
}

CommRing decode_ring(const json& j, const std::string& where) {
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(sub(where, "kind"), "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "integers") return CommRing::integers();
  if (k == "integers_mod") return CommRing::integers_mod(as_count(field(j, "param", where), sub(where, "param")));
  if (k == "localized") return CommRing::localized(decode_prime(field(j, "param", where), sub(where, "param")));
  fail(sub(where, "kind"), "unknown ring kind \"" + k + "\"");
}

json encode(const CommRing& r) {
  switch (r.kind()) {
    case CommRing::Kind::Integers: return {{"kind", "integers"}};
    case CommRing::Kind::IntegersMod: return {{"kind", "integers_mod"}, {"param", r.parameter()}};
    case CommRing::Kind::LocalizedIntegers: return {{"kind", "localized"}, {"param", r.parameter()}};
  }
  return nullptr;
}

Presentation decode_presentation(const json& doc) {
  const CommRing ring = decode_ring(field(doc, "ring", ""), "/ring");
  const std::size_t a = as_count(field(doc, "a", ""), "/a");
  const std::size_t b = as_count(field(doc, "b", ""), "/b");
  return make_presentation(ring, decode_rat_matrix(field(doc, "entries", ""), a, b, "/entries"));
}

MatRingPresentation decode_matring_presentation(const json& doc) {
  const CommRing ring = decode_ring(field(doc, "ring", ""), "/ring");
  const std::size_t a = as_count(field(doc, "a", ""), "/a");
  const std::size_t b = as_count(field(doc, "b", ""), "/b");
  const std::size_t n = as_count(field(doc, "n", ""), "/n");
  if (a == 0 || b == 0 || n == 0) fail("", "a, b and n must be positive");
  const json& blocks = field(doc, "blocks", "");
  if (!blocks.is_array() || blocks.size() != a) fail("/blocks", "expected " + std::to_string(a) + " rows of blocks");
  std::vector<MatRingElem> out;
  for (std::size_t i = 0; i < a; ++i) {
    const std::string wi = sub("/blocks", i);
    if (!blocks[i].is_array() || blocks[i].size() != b) fail(wi, "expected " + std::to_string(b) + " blocks");
    for (std::size_t j = 0; j < b; ++j) out.emplace_back(ring, decode_rat_matrix(blocks[i][j], n, n, sub(wi, j)));
  }
  return MatRingPresentation(a, b, std::move(out));
}

json encode(const IdealFG& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(encode(g));
  return {{"ring", encode(ideal.ring())},
          {"generators", gens},
          {"generator", encode(ideal.normal_form())},
          {"zero", ideal.is_zero()}};
}

json encode(const CentralElem& x) {
  json out = json::array();
  for (const auto& v : x.values) out.push_back(encode(v));
  return out;
}

json encode(const CentralIdeal& c) {
  json out = json::array();
  for (const auto& v : c.valuations) out.push_back(encode(v));
  return out;
}

json encode(const FitResult& f) {
  json gens = json::array();
  for (const auto& g : f.generators) gens.push_back(encode(g));
  return {{"generators", gens}, {"expansion", encode(f.expansion)}, {"exactness", exactness_name(f.exactness)}};
}

json encode_component(const WedderburnComponent& c) {
  json character = json::array();
  for (const auto& x : c.character) character.push_back(encode(x));
  json basis = json::array();
  for (const auto& x : c.integral_basis) basis.push_back(encode(x));
  return {{"index", c.index + 1},
          {"degree", c.degree},
          {"matrix_size", c.matrix_size},
          {"schur_index", c.schur_index},
          {"orbit", c.orbit},
          {"field",
           {{"conductor", c.field.conductor()},
            {"fixing", c.field.fixing_group()},
            {"degree", c.field.degree()},
            {"ramification", c.field.ramification()},
            {"residue_degree", c.field.residue_degree()}}},
          {"different_exponent", c.different_exponent},
          {"uniformizer", encode(c.uniformizer)},
          {"integral_basis", basis},
          {"character", character}};
}

json encode_lattice(const IntLattice& lattice, unsigned long p) {
  return {{"dim", lattice.dim()}, {"basis", encode(lattice.basis(p))}};
}

namespace {

bool is_rational_string(const json& j) {
  if (!j.is_string()) return false;
  try {
    parse_rational(j.get<std::string>());
    return true;
  } catch (const SchemaError&) {
    return false;
  }
}

bool is_cyc(const json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs")) return false;
  if (!j["conductor"].is_number_unsigned() || !j["coeffs"].is_array()) return false;
  for (const auto& c : j["coeffs"])
    if (!is_rational_string(c)) return false;
  return true;
}

bool is_valuation(const json& j) { return j.is_number_integer() || (j.is_object() && j.value("zero", false)); }

template <class Pred>
bool all_of(const json& j, Pred pred) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!pred(x)) return false;
  return true;
}

bool is_central(const json& j) { return all_of(j, is_cyc); }
bool is_ideal(const json& j) { return all_of(j, is_valuation); }

bool is_element(const json& j) {
  return all_of(j, [](const json& t) { return t.is_array() && t.size() == 2 && t[0].is_string() && is_rational_string(t[1]); });
}

bool is_fit(const json& j) {
  return j.is_object() && j.contains("generators") && all_of(j["generators"], is_central) && j.contains("expansion") &&
         is_ideal(j["expansion"]) && j.contains("exactness") && j["exactness"].is_string();
}

bool is_lattice(const json& j) {
  return j.is_object() && j.contains("dim") && j.contains("basis") &&
         all_of(j["basis"], [](const json& row) { return all_of(row, is_rational_string); });
}

}  // namespace

std::string check_report(const std::string& verb, const json& r) {
  auto need = [&](const char* key) { return r.is_object() && r.contains(key); };
  if (!need("schema_version") || r["schema_version"] != kSchemaVersion) return "schema_version missing or wrong";
  if (!need("verb") || r["verb"] != verb) return "verb missing or wrong";
  if (verb == "classify") {
    if (!need("nice") || !r["nice"].is_boolean()) return "nice";
    if (!need("commutator_order") || !r["commutator_order"].is_number_unsigned()) return "commutator_order";
    return "";
  }
  if (verb == "wedderburn") {
    if (!need("components") || !r["components"].is_array()) return "components";
    for (const auto& c : r["components"]) {
      if (!c.contains("field") || !c.contains("uniformizer") || !is_cyc(c["uniformizer"])) return "component field";
      if (!c.contains("character") || !all_of(c["character"], is_cyc)) return "component character";
    }
    return "";
  }
  if (verb == "nr") return need("nr") && is_central(r["nr"]) ? "" : "nr";
  if (verb == "adjoint") {
    if (!need("adjoint") || !all_of(r["adjoint"], [](const json& row) { return all_of(row, is_element); })) return "adjoint";
    return need("nr") && is_central(r["nr"]) ? "" : "nr";
  }
  if (verb == "fit") {
    if (!need("kind")) return "kind";
    if (r["kind"] == "group_ring") return need("fit") && is_fit(r["fit"]) ? "" : "fit";
    for (const char* key : {"fit", "annihilator"})
      if (!need(key) || !r[key].contains("generator") || !is_rational_string(r[key]["generator"])) return key;
    return "";
  }
  if (verb == "conductor") {
    for (const char* key : {"maximal", "centres", "char_value_ideals"})
      if (!need(key) || !is_ideal(r[key])) return key;
    for (const char* key : {"hybrid", "h_bound"})
      if (!need(key) || !is_lattice(r[key].value("lattice", json()))) return key;
    return "";
  }
  if (verb == "index") {
    if (!need("indices") || !r["indices"].is_array()) return "indices";
    for (const auto& e : r["indices"])
      if (!e.contains("larger") || !e.contains("smaller") || !e.contains("exponent")) return "index entry";
    return "";
  }
  if (verb == "annihilate") {
    if (!need("fit") || !is_fit(r["fit"])) return "fit";
    if (!need("annihilators") || !all_of(r["annihilators"], is_element)) return "annihilators";
    return need("verified") && r["verified"].is_boolean() ? "" : "verified";
  }
  if (verb == "quotient") {
    if (!need("fit") || !is_fit(r["fit"])) return "fit";
    return need("elements") && all_of(r["elements"], is_element) ? "" : "elements";
  }
  return "unknown verb";
}

}  // namespace fitkernel::io
