#include "hyperell/io.hpp"

#include <regex>

namespace hyperell {

namespace {

[[noreturn]] void parse_error(const std::string& code, const std::string& message) {
    throw Error(code, message, ErrorKind::Parse);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object())
        parse_error("BadDocument", std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        parse_error("MissingField", std::string("missing field '") + key + "'");
    return *it;
}

const Json* optional_field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null())
        return nullptr;
    return &*it;
}

std::string get_string(const Json& j, const std::string& what) {
    if (!j.is_string())
        parse_error("BadType", what + " must be a string");
    return j.get<std::string>();
}

std::size_t get_size(const Json& j, const std::string& what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        parse_error("BadType", what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

bool get_bool(const Json& j, const std::string& what) {
    if (!j.is_boolean())
        parse_error("BadType", what + " must be a boolean");
    return j.get<bool>();
}

const Json& get_array(const Json& j, const std::string& what) {
    if (!j.is_array())
        parse_error("BadType", what + " must be an array");
    return j;
}

Integer parse_integer(const Json& j) {
    Rational r = parse_rational(j);
    if (r.get_den() != 1)
        parse_error("NotIntegral", "expected an integer, got " + r.get_str());
    return r.get_num();
}

RatVector parse_vector(const Json& j, const std::string& what) {
    RatVector v;
    for (const auto& x : get_array(j, what))
        v.push_back(parse_rational(x));
    return v;
}

template <typename T, typename F>
Matrix<T> parse_matrix(const Json& j, const std::string& what, F entry) {
    const Json& rows = get_array(j, what);
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : get_array(rows[0], what).size();
    Matrix<T> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const Json& row = get_array(rows[i], what);
        if (row.size() != c)
            parse_error("RaggedMatrix", what + " has rows of different lengths");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = entry(row[k]);
    }
    return m;
}

RatMatrix parse_rat_matrix(const Json& j, const std::string& what) {
    return parse_matrix<Rational>(j, what, [](const Json& x) { return parse_rational(x); });
}

IntMatrix parse_int_matrix(const Json& j, const std::string& what) {
    return parse_matrix<Integer>(j, what, [](const Json& x) { return parse_integer(x); });
}

RootOfUnity parse_root(const Json& j) {
    return RootOfUnity::parse(get_string(j, "root of unity"));
}

std::vector<RootOfUnity> parse_roots(const Json& j) {
    std::vector<RootOfUnity> out;
    for (const auto& x : get_array(j, "eigenvalues"))
        out.push_back(parse_root(x));
    return out;
}

EllipticFactor parse_factor(const Json& j) {
    EllipticFactor f;
    try {
        f.kind = parse_factor_kind(get_string(field(j, "kind"), "factor kind"));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse)
            throw;
        parse_error(e.code(), e.what());
    }
    f.label = get_string(field(j, "label"), "factor label");
    return f;
}

std::vector<EllipticFactor> parse_factors(const Json& j) {
    std::vector<EllipticFactor> out;
    for (const auto& f : get_array(j, "factors"))
        out.push_back(parse_factor(f));
    return out;
}

BuilderSpec parse_builder(const Json& j) {
    BuilderSpec spec;
    spec.factors = parse_factors(field(j, "factors"));
    if (spec.factors.empty())
        parse_error("BadDocument", "builder documents need at least one factor");
    if (const Json* k = optional_field(j, "k_gens"))
        for (const auto& v : get_array(*k, "k_gens"))
            spec.k_gens.push_back(parse_vector(v, "k_gens entry"));
    for (const auto& g : get_array(field(j, "generators"), "generators")) {
        BuilderGenerator bg;
        bg.name = get_string(field(g, "name"), "generator name");
        for (const auto& part : get_array(field(g, "linear"), "linear")) {
            if (part.is_string())
                bg.linear.emplace_back(parse_root(part));
            else if (part.is_array())
                bg.linear.emplace_back(parse_int_matrix(part, "linear block"));
            else
                parse_error("BadType", "linear entries are roots \"k/N\" or 2x2 integer blocks");
        }
        bg.translation = parse_vector(field(g, "translation"), "translation");
        spec.generators.push_back(std::move(bg));
    }
    return spec;
}

RawSpec parse_raw(const Json& j) {
    RawSpec spec;
    spec.rank = get_size(field(j, "rank"), "rank");
    if (const Json* b = optional_field(j, "basis"))
        spec.basis = parse_rat_matrix(*b, "basis");
    if (const Json* f = optional_field(j, "factors"))
        spec.factors = parse_factors(*f);
    if (const Json* q = optional_field(j, "quotient_gens"))
        for (const auto& v : get_array(*q, "quotient_gens"))
            spec.quotient_gens.push_back(parse_vector(v, "quotient_gens entry"));
    for (const auto& g : get_array(field(j, "generators"), "generators")) {
        RawGenerator rg;
        rg.name = get_string(field(g, "name"), "generator name");
        rg.matrix = parse_int_matrix(field(g, "matrix"), "matrix");
        rg.translation = parse_vector(field(g, "translation"), "translation");
        rg.eigenvalues = parse_roots(field(g, "eigenvalues"));
        spec.generators.push_back(std::move(rg));
    }
    if (const Json* e = optional_field(j, "form"))
        spec.form = AlternatingForm{parse_rat_matrix(*e, "form")};
    if (const Json* v = optional_field(j, "validated"))
        spec.validated = get_bool(*v, "validated");
    if (const Json* b = optional_field(j, "builder_mode"))
        spec.builder_mode = get_bool(*b, "builder_mode");
    return spec;
}

Json int_vector_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if (!x.fits_slong_p())
            internal_error("Overflow", "integer too large for a JSON number");
        a.push_back(x.get_si());
    }
    return a;
}

IntVector int_vector_from_json(const Json& j, const std::string& what) {
    IntVector v;
    for (const auto& x : get_array(j, what)) {
        if (!x.is_number_integer())
            parse_error("BadType", what + " entries must be integers");
        v.push_back(Integer(x.get<long>()));
    }
    return v;
}

Json strings_json(const std::vector<std::string>& v) {
    return Json(v);
}

std::vector<std::string> strings_from_json(const Json& j, const std::string& what) {
    std::vector<std::string> out;
    for (const auto& x : get_array(j, what))
        out.push_back(get_string(x, what));
    return out;
}

FiniteAbelianGroup group_from_json(const Json& j) {
    FiniteAbelianGroup g;
    g.invariant_factors = int_vector_from_json(field(j, "invariant_factors"), "invariant_factors");
    for (const auto& v : get_array(field(j, "generators"), "generators"))
        g.generators.push_back(parse_vector(v, "group generator"));
    return g;
}

FiberClass fiber_class_from_json(const Json& j) {
    FiberClass c;
    c.abelian_variety = get_bool(field(j, "abelian_variety"), "abelian_variety");
    c.holonomy_order = get_size(field(j, "holonomy_order"), "holonomy_order");
    c.cyclic = get_bool(field(j, "cyclic"), "cyclic");
    c.abelian_group = get_bool(field(j, "abelian_group"), "abelian_group");
    c.invariant_factors = int_vector_from_json(field(j, "invariant_factors"), "invariant_factors");
    for (const auto& x : get_array(field(j, "generator_orders"), "generator_orders"))
        c.generator_orders.push_back(get_size(x, "generator order"));
    return c;
}

Json factors_json(const std::vector<EllipticFactor>& factors) {
    Json a = Json::array();
    for (const auto& f : factors)
        a.push_back({{"kind", to_string(f.kind)}, {"label", f.label}});
    return a;
}

}  // namespace

Rational parse_rational(const Json& j) {
    if (j.is_number_integer())
        return Rational(Integer(j.dump()));
    if (j.is_number_float())
        parse_error("FloatNotAllowed", "numbers must be exact; write " + j.dump() + " as \"p/q\"");
    if (!j.is_string())
        parse_error("BadRational", "expected a rational string \"p/q\"");
    static const std::regex pattern(R"(\s*(-?[0-9]+)(\s*/\s*([0-9]+))?\s*)");
    std::smatch m;
    const std::string s = j.get<std::string>();
    if (!std::regex_match(s, m, pattern))
        parse_error("BadRational", "cannot read '" + s + "' as a rational");
    Integer num(m[1].str());
    Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
    if (den == 0)
        parse_error("BadRational", "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

InputDocument parse_document(const Json& j) {
    if (!j.is_object())
        parse_error("BadDocument", "input must be a JSON object");
    const std::string mode = get_string(field(j, "mode"), "mode");
    InputDocument doc;
    if (mode == "builder")
        doc.content = parse_builder(j);
    else if (mode == "raw")
        doc.content = parse_raw(j);
    else
        parse_error("BadMode", "mode must be 'builder' or 'raw', got '" + mode + "'");
    return doc;
}

InputDocument parse_document_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_error("BadJson", e.what());
    }
    return parse_document(j);
}

HyperellipticDatum to_datum(const InputDocument& doc) {
    if (const auto* b = std::get_if<BuilderSpec>(&doc.content))
        return build_datum(*b);
    const auto& r = std::get<RawSpec>(doc.content);
    TorusDatum t = raw_torus(r.rank, r.basis, r.factors);
    t.quotient_gens = r.quotient_gens;
    HyperellipticDatum d = make_raw_datum(std::move(t), r.generators, r.form);
    d.validated = r.validated;
    d.builder_mode = r.builder_mode;
    return d;
}

Json to_json(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const RatMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const IntMatrix& m) {
    return to_json(to_rational(m));
}

Json to_json(const FiniteAbelianGroup& g) {
    Json gens = Json::array();
    for (const auto& v : g.generators)
        gens.push_back(to_json(v));
    return {{"order", g.order().get_str()},
            {"invariant_factors", int_vector_json(g.invariant_factors)},
            {"generators", gens}};
}

Json to_json(const BuilderSpec& spec) {
    Json k = Json::array();
    for (const auto& v : spec.k_gens)
        k.push_back(to_json(v));
    Json gens = Json::array();
    for (const auto& g : spec.generators) {
        Json lin = Json::array();
        for (const auto& part : g.linear) {
            if (const auto* z = std::get_if<RootOfUnity>(&part))
                lin.push_back(z->to_string());
            else
                lin.push_back(to_json(std::get<IntMatrix>(part)));
        }
        gens.push_back({{"name", g.name}, {"linear", lin}, {"translation", to_json(g.translation)}});
    }
    return {{"mode", "builder"},
            {"factors", factors_json(spec.factors)},
            {"k_gens", k},
            {"generators", gens}};
}

Json to_json(const HyperellipticDatum& d) {
    Json gens = Json::array();
    for (const auto& g : d.group.generators()) {
        Json eig = Json::array();
        for (const auto& z : g.eigenvalues)
            eig.push_back(z.to_string());
        gens.push_back({{"name", g.name},
                        {"matrix", to_json(g.linear)},
                        {"translation", to_json(g.translation)},
                        {"eigenvalues", eig}});
    }
    Json q = Json::array();
    for (const auto& v : d.torus.quotient_gens)
        q.push_back(to_json(v));
    Json j = {{"mode", "raw"},
              {"rank", d.torus.rank},
              {"basis", to_json(d.torus.basis)},
              {"quotient_gens", q},
              {"generators", gens},
              {"form", to_json(d.form.matrix)},
              {"validated", d.validated},
              {"builder_mode", d.builder_mode}};
    if (d.torus.has_provenance())
        j["factors"] = factors_json(d.torus.factors);
    return j;
}

HyperellipticDatum datum_from_json(const Json& j) {
    InputDocument doc = parse_document(j);
    if (!std::holds_alternative<RawSpec>(doc.content))
        parse_error("BadMode", "expected a raw datum");
    return to_datum(doc);
}

Json to_json(const ValidationReport& r) {
    Json fps = Json::array();
    for (const auto& w : r.fixed_points)
        fps.push_back({{"element", w.element}, {"point", to_json(w.point)}});
    return {{"passed", r.passed()},
            {"group_order", r.group_order},
            {"free", r.free()},
            {"fixed_points", fps},
            {"translations", strings_json(r.translations)},
            {"has_non_translation", r.has_non_translation},
            {"form_antisymmetric", r.form_antisymmetric},
            {"form_nondegenerate", r.form_nondegenerate},
            {"form_invariant", r.form_invariant},
            {"eigen_consistent", r.eigen_consistent},
            {"eigen_failures", strings_json(r.eigen_failures)},
            {"faithful", r.faithful},
            {"failures", strings_json(r.failures())}};
}

Json to_json(const FiberClass& c) {
    return {{"kind", c.abelian_variety ? "abelian variety" : "hyperelliptic variety"},
            {"abelian_variety", c.abelian_variety},
            {"holonomy_order", c.holonomy_order},
            {"cyclic", c.cyclic},
            {"abelian_group", c.abelian_group},
            {"invariant_factors", int_vector_json(c.invariant_factors)},
            {"generator_orders", c.generator_orders}};
}

Json to_json(const AlbaneseReport& r) {
    Json cocycle = Json::array();
    for (const auto& c : r.cocycle)
        cocycle.push_back({{"element", c.element}, {"t0", to_json(c.t0)}, {"t1", to_json(c.t1)}});
    Json fgens = Json::array();
    for (const auto& g : r.fiber_generators)
        fgens.push_back({{"name", g.name}, {"parent", g.parent}});
    Json j = {{"dim", r.dim},
              {"q", r.q},
              {"group_order", r.group_order},
              {"lambda0", to_json(r.lambda0)},
              {"lambda1", to_json(r.lambda1)},
              {"lambda0_shape", {r.lambda0.rows(), r.lambda0.cols()}},
              {"lambda1_shape", {r.lambda1.rows(), r.lambda1.cols()}},
              {"k", to_json(r.k)},
              {"k0", to_json(r.k0)},
              {"k1", to_json(r.k1)},
              {"cocycle", cocycle},
              {"albanese_lattice", to_json(r.albanese_lattice)},
              {"albanese_lattice_shape", {r.albanese_lattice.rows(), r.albanese_lattice.cols()}},
              {"albanese_isogeny_factors", int_vector_json(r.albanese_isogeny_factors)},
              {"subgroup_h", strings_json(r.subgroup_h)},
              {"fiber_dim", r.fiber_dim},
              {"fiber", to_json(r.fiber)},
              {"fiber_generators", fgens},
              {"fiber_class", to_json(r.fiber_class)},
              {"fiber_support", strings_json(r.fiber_support)},
              {"j_stability", r.j_stability},
              {"basepoint", r.basepoint}};
    j["fiber_report"] = r.fiber_report.empty() ? Json(nullptr) : to_json(r.fiber_report.front());
    return j;
}

namespace {

template <typename T>
Matrix<T> shaped(const Matrix<T>& m, const Json& shape) {
    if (!shape.is_array() || shape.size() != 2)
        parse_error("BadType", "shape must be [rows, cols]");
    std::size_t r = get_size(shape[0], "rows"), c = get_size(shape[1], "cols");
    if (m.rows() == r && m.cols() == c)
        return m;
    if (m.rows() * m.cols() != 0 || r * c != 0)
        parse_error("DimensionMismatch", "matrix does not match its shape");
    return Matrix<T>(r, c);
}

}  // namespace

AlbaneseReport albanese_report_from_json(const Json& j) {
    AlbaneseReport r;
    r.dim = get_size(field(j, "dim"), "dim");
    r.q = get_size(field(j, "q"), "q");
    r.group_order = get_size(field(j, "group_order"), "group_order");
    r.lambda0 = shaped(parse_int_matrix(field(j, "lambda0"), "lambda0"), field(j, "lambda0_shape"));
    r.lambda1 = shaped(parse_int_matrix(field(j, "lambda1"), "lambda1"), field(j, "lambda1_shape"));
    r.k = group_from_json(field(j, "k"));
    r.k0 = group_from_json(field(j, "k0"));
    r.k1 = group_from_json(field(j, "k1"));
    for (const auto& c : get_array(field(j, "cocycle"), "cocycle"))
        r.cocycle.push_back({get_string(field(c, "element"), "element"),
                             parse_vector(field(c, "t0"), "t0"), parse_vector(field(c, "t1"), "t1")});
    r.albanese_lattice = shaped(parse_rat_matrix(field(j, "albanese_lattice"), "albanese_lattice"),
                                field(j, "albanese_lattice_shape"));
    r.albanese_isogeny_factors =
        int_vector_from_json(field(j, "albanese_isogeny_factors"), "albanese_isogeny_factors");
    r.subgroup_h = strings_from_json(field(j, "subgroup_h"), "subgroup_h");
    r.fiber_dim = get_size(field(j, "fiber_dim"), "fiber_dim");
    r.fiber = datum_from_json(field(j, "fiber"));
    for (const auto& g : get_array(field(j, "fiber_generators"), "fiber_generators"))
        r.fiber_generators.push_back(
            {get_string(field(g, "name"), "name"), get_string(field(g, "parent"), "parent")});
    r.fiber_class = fiber_class_from_json(field(j, "fiber_class"));
    r.fiber_support = strings_from_json(field(j, "fiber_support"), "fiber_support");
    r.j_stability = get_string(field(j, "j_stability"), "j_stability");
    r.basepoint = get_string(field(j, "basepoint"), "basepoint");
    if (const Json* f = optional_field(j, "fiber_report"))
        r.fiber_report.push_back(albanese_report_from_json(*f));
    return r;
}

Json to_json(const HodgeDiamond& d) {
    Json h = Json::array();
    for (const auto& row : d.h)
        h.push_back(int_vector_json(row));
    Json rows = Json::array();
    for (const auto& row : d.rows())
        rows.push_back(int_vector_json(row));
    return {{"n", d.n}, {"h", h}, {"rows", rows}};
}

Json to_json(const InvariantsReport& r) {
    return {{"dim", r.dim},
            {"q", r.q},
            {"hodge", to_json(r.diamond)},
            {"canonical_order", r.canonical_order},
            {"euler_char_O", r.euler_char_O.get_si()},
            {"group_order", r.group_order},
            {"cyclic", r.cyclic}};
}

Json to_json(const PullbackDiagnostic& p) {
    return {{"x_order", p.x_order},
            {"fiber_order", p.fiber_order},
            {"divides", p.divides},
            {"pulled_back", p.pulled_back}};
}

Json to_json(const OracleReport& r) {
    Json fps = Json::array();
    for (const auto& c : r.fixed_points)
        fps.push_back({{"element", c.element},
                       {"oracle_count", c.oracle_count},
                       {"exact_has_fixed_point", c.exact_has_fixed_point},
                       {"agree", c.agree}});
    Json j = {{"pass", r.pass()},
              {"level", {{"level", r.level.level},
                         {"nominal_level", r.level.nominal_level},
                         {"nominal", r.level.nominal},
                         {"exhaustive", r.level.exhaustive},
                         {"note", r.level.note}}},
              {"fixed_points", fps},
              {"fiber_count", nullptr}};
    if (r.fiber) {
        const auto& f = *r.fiber;
        j["fiber_count"] = {{"pass", f.pass},
                            {"points", f.points},
                            {"orbits", f.orbits},
                            {"base_points", f.base_points},
                            {"h_order", f.h_order},
                            {"expected_orbits_per_fiber", f.expected_orbits_per_fiber},
                            {"fibers", f.fibers},
                            {"witness", f.witness ? to_json(*f.witness) : Json(nullptr)},
                            {"witness_orbits", f.witness_orbits},
                            {"message", f.message}};
    }
    return j;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace hyperell
