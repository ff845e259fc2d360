#pragma once

// JSON encoding of library values. Decoders throw SchemaError with a
// JSON-pointer-like location on malformed input.

#include <nlohmann/json.hpp>

#include "fitkernel/comm_fitting.hpp"
#include "fitkernel/conductors.hpp"
#include "fitkernel/invariants.hpp"
#include "fitkernel/matrix_ring.hpp"
#include "fitkernel/wedderburn.hpp"

namespace fitkernel::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// scalars
json encode(const Rational& q);
Rational decode_rational(const json& j, const std::string& where);
json encode(const CycNum& x);
CycNum decode_cyc(const json& j, const std::string& where);
json encode(const Valuation& v);
Valuation decode_valuation(const json& j, const std::string& where);

// groups and group-ring elements
json encode(const GroupSpec& spec);
GroupSpec decode_group(const json& j, const std::string& where);
unsigned long decode_prime(const json& j, const std::string& where);
// {label: coeff}; labels may also be products "y*x^2" of element labels.
GroupRingElem decode_element(GroupPtr g, const json& j, const std::string& where);
json encode(const GroupRingElem& x);
GRMatrix decode_gr_matrix(GroupPtr g, const json& j, const std::string& where);
json encode(const GRMatrix& m);

// presentations
GroupRingPresentation decode_gr_presentation(const json& doc);
CommRing decode_ring(const json& j, const std::string& where);
json encode(const CommRing& r);
Presentation decode_presentation(const json& doc);
MatRingPresentation decode_matring_presentation(const json& doc);
json encode(const IdealFG& ideal);

// results
json encode(const CentralElem& x);
json encode(const CentralIdeal& c);
json encode(const FitResult& f);
json encode_component(const WedderburnComponent& c);
json encode_lattice(const IntLattice& lattice, unsigned long p);

// Structural check of a report against docs/schema.md. Returns an empty
// string when it conforms, otherwise a description of the first problem.
std::string check_report(const std::string& verb, const json& report);

}  // namespace fitkernel::io
