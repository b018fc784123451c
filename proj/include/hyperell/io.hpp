#pragma once

// JSON documents: builder/raw input data and every report. Exact numbers are
// written as strings ("p/q" in lowest terms); object keys come out sorted.

#include <string>
#include <variant>

#include "json.hpp"

#include "hyperell/action.hpp"
#include "hyperell/albanese.hpp"
#include "hyperell/invariants.hpp"
#include "hyperell/oracle.hpp"

namespace hyperell {

using Json = nlohmann::json;

struct RawSpec {
    std::size_t rank = 0;
    std::optional<RatMatrix> basis;
    std::vector<EllipticFactor> factors;
    std::vector<RatVector> quotient_gens;
    std::vector<RawGenerator> generators;
    std::optional<AlternatingForm> form;
    bool validated = false;
    bool builder_mode = false;
};

struct InputDocument {
    std::variant<BuilderSpec, RawSpec> content;
};

// All parse functions throw Error with ErrorKind::Parse on malformed input.
Rational parse_rational(const Json& j);
InputDocument parse_document(const Json& j);
InputDocument parse_document_text(const std::string& text);
// Builds the datum (not yet validated).
HyperellipticDatum to_datum(const InputDocument& doc);

Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const BuilderSpec& spec);
// Raw document of a datum (generators only; the closure is recomputed on load).
Json to_json(const HyperellipticDatum& d);
Json to_json(const ValidationReport& r);
Json to_json(const FiberClass& c);
Json to_json(const AlbaneseReport& r);
Json to_json(const HodgeDiamond& d);
Json to_json(const InvariantsReport& r);
Json to_json(const PullbackDiagnostic& p);
Json to_json(const OracleReport& r);

HyperellipticDatum datum_from_json(const Json& j);
AlbaneseReport albanese_report_from_json(const Json& j);

std::string dump(const Json& j);

}  // namespace hyperell
