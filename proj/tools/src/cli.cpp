#include "fitkernel_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "fitkernel/error.hpp"
#include "fitkernel/hybrid_order.hpp"
#include "fitkernel_cli/json_io.hpp"

namespace fitkernel::cli {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return doc[key];
}

struct GroupInput {
  GroupPtr group;
  unsigned long p;
};

GroupInput group_input(const json& doc) {
  const GroupSpec spec = io::decode_group(require(doc, "group"), "/group");
  const unsigned long p = io::decode_prime(require(doc, "p"), "/p");
  return {FiniteGroup::make(spec), p};
}

json header(const std::string& verb, const json& doc) {
  json out{{"schema_version", io::kSchemaVersion}, {"verb", verb}};
  if (doc.contains("group")) out["group"] = io::encode(io::decode_group(doc["group"], "/group"));
  if (doc.contains("p")) out["p"] = doc["p"];
  return out;
}

GroupRingElem element_of_row(GroupPtr g, const RatMatrix& basis, std::size_t r) {
  std::vector<Rational> c(basis.cols());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = basis(r, k);
  return GroupRingElem(g, std::move(c));
}

json do_classify(const json& doc) {
  const auto [g, p] = group_input(doc);
  const NiceWitness nw = classify_nice(*g, p);
  json out = header("classify", doc);
  out["nice"] = nw.nice;
  out["commutator_order"] = nw.commutator_order;
  out["sylow_order"] = nw.sylow.size();
  out["sylow_abelian"] = nw.sylow_abelian;
  out["normal_complement"] = !nw.complement.empty() || nw.sylow.size() == g->order();
  return out;
}

json do_wedderburn(const json& doc) {
  const auto [g, p] = group_input(doc);
  const WedderburnData w = wedderburn_data(g, p);
  json out = header("wedderburn", doc);
  json elements = json::array();
  for (std::size_t k = 0; k < g->order(); ++k) elements.push_back(g->label(k));
  out["elements"] = elements;
  out["components"] = json::array();
  const auto idem = central_idempotents(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    json c = io::encode_component(w.component(i));
    c["idempotent"] = io::encode(idem[i]);
    out["components"].push_back(c);
  }
  return out;
}

GRMatrix matrix_input(GroupPtr g, const json& doc) {
  if (doc.contains("element") && doc.contains("matrix")) throw SchemaError("give either \"element\" or \"matrix\"");
  if (doc.contains("element")) {
    GRMatrix m = gr_zero(g, 1, 1);
    m(0, 0) = io::decode_element(g, doc["element"], "/element");
    return m;
  }
  const GRMatrix m = io::decode_gr_matrix(g, require(doc, "matrix"), "/matrix");
  if (m.rows() != m.cols()) throw SchemaError("/matrix: expected a square matrix");
  return m;
}

json do_nr(const json& doc) {
  const auto [g, p] = group_input(doc);
  const WedderburnData w = wedderburn_data(g, p);
  const CentralElem nr = reduced_norm(w, matrix_input(g, doc));
  json out = header("nr", doc);
  out["nr"] = io::encode(nr);
  out["valuations"] = io::encode(valuations_of(w, nr));
  out["group_ring"] = io::encode(w.to_group_ring(nr));
  return out;
}

json do_adjoint(const json& doc) {
  const auto [g, p] = group_input(doc);
  const WedderburnData w = wedderburn_data(g, p);
  const GRMatrix h = matrix_input(g, doc);
  json out = header("adjoint", doc);
  out["adjoint"] = io::encode(generalized_adjoint(w, h));
  out["nr"] = io::encode(reduced_norm(w, h));
  return out;
}

json do_fit(const json& doc) {
  json out{{"schema_version", io::kSchemaVersion}, {"verb", "fit"}};
  if (doc.contains("group")) {
    const GroupRingPresentation pres = io::decode_gr_presentation(doc);
    const WedderburnData w = wedderburn_data(pres.group, pres.p);
    out = header("fit", doc);
    out["kind"] = "group_ring";
    out["fit"] = io::encode(fit_of_presentation(w, pres));
    json lengths = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto len = component_length(w, pres, i);
      lengths.push_back(len ? json(*len) : json(nullptr));
    }
    out["component_lengths"] = lengths;
    const IdempotentCut cut = idempotent_cut(w, pres);
    json upsilon = json::array();
    for (auto i : cut.upsilon) upsilon.push_back(i + 1);
    out["cut"] = {{"components", upsilon}, {"idempotent", io::encode(cut.idempotent)}, {"fit", io::encode(cut.cut)}};
    return out;
  }
  out["ring"] = io::encode(io::decode_ring(require(doc, "ring"), "/ring"));
  if (doc.contains("blocks")) {
    const MatRingPresentation pres = io::decode_matring_presentation(doc);
    out["kind"] = "matrix_ring";
    out["n"] = pres.n();
    out["fit"] = io::encode(fit_matrix_ring(pres));
    out["fit_r"] = io::encode(fit_as_r_module(pres));
    out["annihilator"] = io::encode(annihilator_r(pres));
    return out;
  }
  const Presentation pres = io::decode_presentation(doc);
  out["kind"] = "commutative";
  out["fit"] = io::encode(fitting_ideal(pres));
  out["annihilator"] = io::encode(annihilator_ideal(pres));
  json minors = json::array();
  for (const auto& m : maximal_minors(pres.matrix)) minors.push_back(io::encode(m));
  out["minors"] = minors;
  return out;
}

json do_conductor(const json& doc) {
  const auto [g, p] = group_input(doc);
  const WedderburnData w = wedderburn_data(g, p);
  json out = header("conductor", doc);
  const CentralIdeal maximal = central_conductor_maximal(w);
  const CentralIdeal centres = central_conductor_centres(w);
  out["maximal"] = io::encode(maximal);
  out["centres"] = io::encode(centres);
  json values = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) values.push_back(char_value_ideal(w, i));
  out["char_value_ideals"] = values;
  out["maximal_lattice"] = io::encode_lattice(central_ideal_lattice(w, maximal), p);
  out["centres_lattice"] = io::encode_lattice(central_ideal_lattice(w, centres), p);
  out["hybrid"] = {{"lattice", io::encode_lattice(hybrid_conductor(w), p)}};
  const HBound hb = h_lambda_lower_bound(w);
  out["h_bound"] = {{"lattice", io::encode_lattice(hb.lattice, p)}, {"exact", hb.exact}, {"source", hb.source}};
  return out;
}

json do_index(const json& doc) {
  const auto [g, p] = group_input(doc);
  const WedderburnData w = wedderburn_data(g, p);
  json out = header("index", doc);
  out["indices"] = json::array();
  for (const auto& e : conductor_index_report(w)) {
    json entry{{"larger", e.larger}, {"smaller", e.smaller}};
    if (e.exponent) {
      entry["exponent"] = *e.exponent;
      entry["value"] = LatticeIndex{p, *e.exponent}.value().get_str();
    } else {
      entry["exponent"] = nullptr;
    }
    out["indices"].push_back(entry);
  }
  return out;
}

json do_annihilate(const json& doc) {
  const GroupRingPresentation pres = io::decode_gr_presentation(doc);
  const WedderburnData w = wedderburn_data(pres.group, pres.p);
  const FitResult fit = fit_of_presentation(w, pres);
  const HBound hb = h_lambda_lower_bound(w);
  const RatMatrix basis = hb.lattice.basis(pres.p);
  json out = header("annihilate", doc);
  out["fit"] = io::encode(fit);
  out["h_bound"] = {{"exact", hb.exact}, {"source", hb.source}};
  json products = json::array();
  bool verified = true;
  for (const auto& f : fit.generators) {
    const GroupRingElem fz = w.to_group_ring(f);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const GroupRingElem z = element_of_row(pres.group, basis, r) * fz;
      verified = verified && z.is_p_integral(pres.p) && verify_annihilation(z, pres);
      products.push_back(io::encode(z));
    }
  }
  out["annihilators"] = products;
  out["verified"] = verified;
  return out;
}

json do_quotient(const json& doc) {
  const auto [g, p] = group_input(doc);
  const WedderburnData w = wedderburn_data(g, p);
  const json& gens = require(doc, "generators");
  if (!gens.is_array() || gens.empty()) throw SchemaError("/generators: expected a non-empty array");
  std::vector<GroupRingElem> xs;
  for (std::size_t k = 0; k < gens.size(); ++k)
    xs.push_back(io::decode_element(g, gens[k], "/generators/" + std::to_string(k)));
  const LeftIdealQuotient q = quotient_by_left_ideal(w, xs);
  json out = header("quotient", doc);
  out["fit"] = io::encode(q.fit);
  json elements = json::array();
  for (const auto& x : q.elements) elements.push_back(io::encode(x));
  out["elements"] = elements;
  return out;
}

using Handler = json (*)(const json&);

Handler handler_for(const std::string& verb) {
  if (verb == "classify") return do_classify;
  if (verb == "wedderburn") return do_wedderburn;
  if (verb == "nr") return do_nr;
  if (verb == "adjoint") return do_adjoint;
  if (verb == "fit") return do_fit;
  if (verb == "conductor") return do_conductor;
  if (verb == "index") return do_index;
  if (verb == "annihilate") return do_annihilate;
  if (verb == "quotient") return do_quotient;
  throw SchemaError("unknown verb \"" + verb + "\"");
}

// ---- text rendering

std::string text_of(const json& j);

std::string cyc_text(const json& c) {
  const auto& cs = c["coeffs"];
  const std::string z = "z" + std::to_string(c["conductor"].get<unsigned long>());
  std::string s;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::string v = cs[k].get<std::string>();
    if (v == "0") continue;
    const bool neg = v[0] == '-';
    if (neg) v = v.substr(1);
    std::string term = k == 0 ? v : (v == "1" ? "" : v + "*") + z + (k > 1 ? "^" + std::to_string(k) : "");
    s += s.empty() ? (neg ? "-" : "") + term : (neg ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

std::string elem_text(const json& e) {
  std::string s;
  for (const auto& t : e) {
    std::string c = t[1].get<std::string>();
    const std::string label = t[0].get<std::string>();
    const bool neg = c[0] == '-';
    if (neg) c = c.substr(1);
    std::string term = label == "1" ? c : (c == "1" ? "" : c + "*") + label;
    s += s.empty() ? (neg ? "-" : "") + term : (neg ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

bool looks_cyc(const json& j) { return j.is_object() && j.contains("conductor") && j.contains("coeffs"); }
bool looks_elem(const json& j) {
  return j.is_array() && !j.empty() && j[0].is_array() && j[0].size() == 2 && j[0][0].is_string() && j[0][1].is_string();
}

std::string text_of(const json& j) {
  if (looks_cyc(j)) return cyc_text(j);
  if (looks_elem(j)) return elem_text(j);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.size() == 1 && j.contains("zero")) return "inf";
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + text_of(j[k]);
    return s + ")";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : ", ") + k + ": " + text_of(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (key == "schema_version") continue;
    if (value.is_array() && !value.empty() && value[0].is_object() && !looks_cyc(value[0])) {
      os << key << ":\n";
      for (const auto& item : value) os << "  " << text_of(item) << "\n";
    } else {
      os << key << ": " << text_of(value) << "\n";
    }
  }
  return os.str();
}

Outcome finish(int status, json report, Format format) {
  Outcome o{status, std::move(report), ""};
  o.rendered = format == Format::Json ? o.report.dump(2) + "\n" : render_text(o.report);
  return o;
}

int status_for(const std::string& kind) {
  if (kind == "schema_error") return 2;
  if (kind == "not_in_catalog") return 3;
  if (kind == "unsupported_field") return 4;
  return 5;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"classify", "wedderburn", "nr",        "adjoint", "fit",
                                          "conductor", "index",     "annihilate", "quotient"};
  return v;
}

Outcome report_error(const std::string& verb, const std::string& kind, const std::string& message, Format format) {
  json report{{"schema_version", io::kSchemaVersion},
              {"verb", verb},
              {"error", {{"kind", kind}, {"message", message}}}};
  return finish(kind == "internal" ? 1 : status_for(kind), std::move(report), format);
}

Outcome run(const Command& command) {
  try {
    const Handler h = handler_for(command.verb);
    if (!command.input.is_object()) throw SchemaError("input must be a JSON object");
    return finish(0, h(command.input), command.format);
  } catch (const Error& e) {
    return report_error(command.verb, e.kind(), e.what(), command.format);
  } catch (const std::exception& e) {
    return report_error(command.verb, "internal", e.what(), command.format);
  }
}

json load_input(const std::string& source) {
  std::string text;
  if (!source.empty() && source.front() == '{') {
    text = source;
  } else if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(source);
    if (!in) throw SchemaError("cannot read input file " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fitkernel::cli
