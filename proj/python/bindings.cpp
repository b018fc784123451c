#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperell/albanese.hpp"
#include "hyperell/catalog.hpp"
#include "hyperell/invariants.hpp"
#include "hyperell/io.hpp"
#include "hyperell/oracle.hpp"

namespace py = pybind11;
using namespace hyperell;

namespace {

HyperellipticDatum load(const std::string& text) {
    return to_datum(parse_document_text(text));
}

HyperellipticDatum load_validated(const std::string& text) {
    HyperellipticDatum d = load(text);
    ValidationReport vr = validate(d);
    if (!vr.passed())
        throw Error("InvalidDatum", vr.failures().front());
    return d;
}

std::string check(const std::string& text) {
    HyperellipticDatum d = load(text);
    return to_json(validate(d)).dump();
}

std::string albanese(const std::string& text, bool recurse) {
    return to_json(run_pipeline(load_validated(text), recurse)).dump();
}

std::string invariants(const std::string& text) {
    return to_json(compute_invariants(load_validated(text))).dump();
}

std::string oracle(const std::string& text, std::optional<long> level) {
    HyperellipticDatum d = load(text);
    validate(d);
    return to_json(run_oracle(d, level)).dump();
}

bool albanese_round_trip(const std::string& report_json) {
    AlbaneseReport r = albanese_report_from_json(Json::parse(report_json));
    return albanese_report_from_json(to_json(r)) == r && to_json(r) == Json::parse(report_json);
}

std::string catalog_run(const std::string& name) {
    CatalogRun run = run_entry(name);
    Json diff = Json::array();
    for (const auto& m : run.diff)
        diff.push_back(
            {{"field", m.field}, {"source", m.source}, {"expected", m.expected}, {"computed", m.computed}});
    return Json{{"name", run.name}, {"negative", run.negative}, {"diff", diff}}.dump();
}

std::string catalog_export(const std::string& name) {
    return to_json(find_entry(name).spec).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Albanese varieties and invariants of hyperelliptic varieties";

    py::register_exception<Error>(m, "HyperellError", PyExc_ValueError);

    m.def("check", &check, py::arg("document"), "Validation report (JSON text)");
    m.def("albanese", &albanese, py::arg("document"), py::arg("recurse") = false,
          "Albanese report (JSON text)");
    m.def("invariants", &invariants, py::arg("document"), "Invariants report (JSON text)");
    m.def("oracle", &oracle, py::arg("document"), py::arg("level") = py::none(),
          "Torsion-enumeration cross-check (JSON text)");
    m.def("albanese_round_trip", &albanese_round_trip, py::arg("report"));
    m.def("catalog_list", &list_entries);
    m.def("catalog_run", &catalog_run, py::arg("name"));
    m.def("catalog_export", &catalog_export, py::arg("name"));
}
