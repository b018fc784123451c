#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperell/albanese.hpp"
#include "hyperell/catalog.hpp"
#include "hyperell/invariants.hpp"
#include "hyperell/io.hpp"
#include "hyperell/oracle.hpp"

using namespace hyperell;

namespace {

enum Exit { Ok = 0, ParseFailure = 1, ValidationFailure = 2, InternalFailure = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("IOError", "cannot read '" + path + "'", ErrorKind::Parse);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HyperellipticDatum load(const std::string& path) {
    return to_datum(parse_document_text(read_file(path)));
}

void print_lines(const std::vector<std::string>& v, const std::string& indent = "  ") {
    for (const auto& s : v)
        std::cout << indent << s << "\n";
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i];
    return s;
}

std::string join(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].get_str();
    return s;
}

int report_validation(const ValidationReport& vr, bool json) {
    if (json) {
        std::cout << dump(to_json(vr));
    } else {
        std::cout << "group order: " << vr.group_order << "\n";
        std::cout << (vr.passed() ? "valid hyperelliptic datum\n" : "invalid datum:\n");
        print_lines(vr.failures());
    }
    return vr.passed() ? Ok : ValidationFailure;
}

void print_albanese(const AlbaneseReport& r, const std::string& indent) {
    std::cout << indent << "dim X: " << r.dim << "\n"
              << indent << "q: " << r.q << "\n"
              << indent << "group order: " << r.group_order << "\n"
              << indent << "|K|: " << r.k.order() << "  |K0|: " << r.k0.order()
              << "  |K1|: " << r.k1.order() << "\n"
              << indent << "albanese isogeny factors: [" << join(r.albanese_isogeny_factors) << "]\n"
              << indent << "H: {" << join(r.subgroup_h) << "}\n"
              << indent << "fiber dim: " << r.fiber_dim << "\n"
              << indent << "fiber: "
              << (r.fiber_class.abelian_variety ? "abelian variety" : "hyperelliptic variety");
    if (!r.fiber_class.abelian_variety)
        std::cout << ", holonomy order " << r.fiber_class.holonomy_order
                  << (r.fiber_class.cyclic ? " (cyclic)" : "");
    std::cout << "\n";
    if (!r.fiber_support.empty())
        std::cout << indent << "fiber support: " << join(r.fiber_support) << "\n";
    std::cout << indent << "j stability: " << r.j_stability << "\n"
              << indent << "basepoint: " << r.basepoint << "\n";
    for (const auto& f : r.fiber_report) {
        std::cout << indent << "fiber report:\n";
        print_albanese(f, indent + "  ");
    }
}

HyperellipticDatum load_validated(const std::string& path) {
    HyperellipticDatum d = load(path);
    ValidationReport vr = validate(d);
    if (!vr.passed())
        throw Error("InvalidDatum", join(vr.failures()));
    return d;
}

int cmd_check(const std::string& path, bool json) {
    HyperellipticDatum d = load(path);
    return report_validation(validate(d), json);
}

int cmd_albanese(const std::string& path, bool recurse, bool json) {
    HyperellipticDatum d = load_validated(path);
    AlbaneseReport r = run_pipeline(d, recurse);
    if (json)
        std::cout << dump(to_json(r));
    else
        print_albanese(r, "");
    return Ok;
}

int cmd_invariants(const std::string& path, bool json) {
    HyperellipticDatum d = load_validated(path);
    InvariantsReport inv = compute_invariants(d);
    AlbaneseReport r = run_pipeline(d, false);
    InvariantsReport inv_f = compute_invariants(r.fiber);
    PullbackDiagnostic p = canonical_report(r, inv, inv_f);
    if (json) {
        Json j = to_json(inv);
        j["fiber"] = to_json(inv_f);
        j["pullback"] = to_json(p);
        std::cout << dump(j);
    } else {
        std::cout << "dim: " << inv.dim << "\n"
                  << "q: " << inv.q << "\n"
                  << "canonical order: " << inv.canonical_order << "\n"
                  << "chi(O): " << inv.euler_char_O.get_str() << "\n"
                  << "fiber canonical order: " << p.fiber_order << "\n"
                  << "canonical bundle pulled back from Alb: " << (p.pulled_back ? "yes" : "no")
                  << "\n"
                  << "hodge diamond:\n"
                  << format_diamond(inv.diamond);
    }
    return Ok;
}

int cmd_oracle(const std::string& path, std::optional<long> level, bool json) {
    HyperellipticDatum d = load(path);
    validate(d);
    OracleReport r = run_oracle(d, level);
    if (json) {
        std::cout << dump(to_json(r));
    } else {
        std::cout << "level: " << r.level.level << " (nominal " << r.level.nominal_level << ")\n";
        if (!r.level.note.empty())
            std::cout << "note: " << r.level.note << "\n";
        for (const auto& c : r.fixed_points)
            std::cout << "  " << c.element << ": " << c.oracle_count << " torsion fixed points, exact "
                      << (c.exact_has_fixed_point ? "fixed" : "free")
                      << (c.agree ? "" : "  DISAGREE") << "\n";
        if (r.fiber)
            std::cout << "fiber count: " << (r.fiber->pass ? "pass" : "fail") << " ("
                      << r.fiber->message << ")\n";
        std::cout << (r.pass() ? "pass\n" : "fail\n");
    }
    return r.pass() ? Ok : InternalFailure;
}

int cmd_catalog_list(bool json) {
    if (json) {
        Json a = Json::array();
        for (const auto& e : catalog_entries())
            a.push_back({{"name", e.name}, {"negative", e.negative()}, {"provenance", e.provenance}});
        std::cout << dump(a);
    } else {
        for (const auto& e : catalog_entries())
            std::cout << e.name << (e.negative() ? "  (negative)" : "") << "\n";
    }
    return Ok;
}

int cmd_catalog_run(const std::string& name, bool json) {
    CatalogRun run = run_entry(name);
    if (json) {
        Json diff = Json::array();
        for (const auto& m : run.diff)
            diff.push_back({{"field", m.field},
                            {"source", m.source},
                            {"expected", m.expected},
                            {"computed", m.computed}});
        std::cout << dump({{"name", run.name}, {"negative", run.negative}, {"diff", diff}});
    } else {
        std::cout << run.name << ": " << (run.ok() ? "empty diff" : "MISMATCH") << "\n";
        for (const auto& m : run.diff)
            std::cout << "  " << m.field << " [" << m.source << "]: expected " << m.expected
                      << ", computed " << m.computed << "\n";
    }
    return run.ok() ? Ok : InternalFailure;
}

int cmd_catalog_export(const std::string& name) {
    std::cout << dump(to_json(find_entry(name).spec));
    return Ok;
}

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse:
        return ParseFailure;
    case ErrorKind::Validation:
        return ValidationFailure;
    case ErrorKind::Internal:
        return InternalFailure;
    }
    return InternalFailure;
}

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse:
        return "parse";
    case ErrorKind::Validation:
        return "validation";
    case ErrorKind::Internal:
        return "internal";
    }
    return "internal";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Albanese varieties, fibers and invariants of hyperelliptic varieties"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string path;
    auto* check = app.add_subcommand("check", "Validate a datum");
    check->add_option("file", path, "Input JSON document")->required();

    bool recurse = false;
    auto* alb = app.add_subcommand("albanese", "Albanese variety and fiber");
    alb->add_option("file", path, "Input JSON document")->required();
    alb->add_flag("--recurse", recurse, "Run the pipeline again on a hyperelliptic fiber");

    auto* inv = app.add_subcommand("invariants", "Hodge numbers, irregularity, canonical order");
    inv->add_option("file", path, "Input JSON document")->required();

    std::optional<long> level;
    auto* orc = app.add_subcommand("oracle", "Torsion-point enumeration cross-check");
    orc->add_option("file", path, "Input JSON document")->required();
    orc->add_option("--level", level, "Torsion level N")->check(CLI::PositiveNumber);

    std::string name;
    auto* cat = app.add_subcommand("catalog", "Built-in constructions");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List entries");
    auto* cat_run = cat->add_subcommand("run", "Compare an entry with its expected values");
    cat_run->add_option("name", name)->required();
    auto* cat_export = cat->add_subcommand("export", "Print an entry as an input document");
    cat_export->add_option("name", name)->required();

    for (auto* sub : {check, alb, inv, orc, cat_list, cat_run})
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : ParseFailure;
    }
    const bool json = format == "json";

    try {
        if (*check)
            return cmd_check(path, json);
        if (*alb)
            return cmd_albanese(path, recurse, json);
        if (*inv)
            return cmd_invariants(path, json);
        if (*orc)
            return cmd_oracle(path, level, json);
        if (*cat_list)
            return cmd_catalog_list(json);
        if (*cat_run)
            return cmd_catalog_run(name, json);
        if (*cat_export)
            return cmd_catalog_export(name);
    } catch (const Error& e) {
        std::cerr << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error (internal): " << e.what() << "\n";
        return InternalFailure;
    }
    return InternalFailure;
}
