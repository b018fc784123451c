#include "hyperell/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "hyperell/albanese.hpp"
#include "hyperell/invariants.hpp"

namespace hyperell {

namespace {

using Kind = EllipticFactor::Kind;

RatVector vec(std::initializer_list<const char*> entries) {
    RatVector v;
    for (const char* e : entries) {
        Rational r(e);
        r.canonicalize();
        v.push_back(r);
    }
    return v;
}

std::vector<RootOfUnity> roots(std::initializer_list<const char*> entries) {
    std::vector<RootOfUnity> out;
    for (const char* e : entries)
        out.push_back(RootOfUnity::parse(e));
    return out;
}

BuilderGenerator gen(const std::string& name, std::initializer_list<const char*> linear,
                     RatVector translation) {
    BuilderGenerator g;
    g.name = name;
    for (const auto& z : roots(linear))
        g.linear.emplace_back(z);
    g.translation = std::move(translation);
    return g;
}

// Unit vectors of factor f inside an ambient space with `factors` factors.
std::vector<RatVector> factor_units(std::size_t factors, std::size_t f) {
    std::vector<RatVector> out(2, RatVector(2 * factors));
    out[0][2 * f] = 1;
    out[1][2 * f + 1] = 1;
    return out;
}

std::vector<RatVector> with_units(std::size_t factors, std::size_t f, std::vector<RatVector> extra) {
    auto out = factor_units(factors, f);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

struct BiellipticRow {
    int row;
    Kind kind;
    const char* label;
    std::vector<RatVector> k;
    const char* root;
    const char* shift;
    long order;
    std::vector<RatVector> albanese_extra;
    IntVector factors;
    std::size_t canonical_order;
};

CatalogEntry bielliptic(const BiellipticRow& r) {
    CatalogEntry e;
    e.name = "bielliptic-" + std::to_string(r.row);
    e.provenance = "bielliptic surface family " + std::to_string(r.row) + ": (E_tau x " + r.label +
                   ") / K, g(z1, z2) = (z1 + " + r.shift + ", zeta z2) with zeta = exp(2 pi i " +
                   r.root + ")";
    e.conventions = "factor 0 is E_tau with coordinates (1, tau); a point a + b tau is written (a, b)";
    e.spec.factors = {{Kind::Generic, "E_tau"}, {r.kind, r.label}};
    e.spec.k_gens = r.k;
    e.spec.generators = {gen("g", {"0", r.root}, vec({r.shift, "0", "0", "0"}))};

    e.stated.dim = 2;
    e.stated.q = 1;
    e.stated.group_order = static_cast<std::size_t>(r.order);
    e.stated.isogeny_factors = r.factors;
    e.stated.albanese_lattice = with_units(2, 0, r.albanese_extra);
    e.stated.fiber_dim = 1;
    e.stated.fiber_abelian = true;
    e.stated.fiber_support = std::vector<std::string>{r.label};
    if (r.row == 1 || r.row == 7)
        e.stated.canonical_order = r.canonical_order;
    else
        e.snapshot.canonical_order = r.canonical_order;

    e.snapshot.cyclic = true;
    e.snapshot.subgroup_h = std::vector<std::string>{"e"};
    e.snapshot.hodge_rows = std::vector<std::vector<long>>{{1}, {1, 1}, {0, 2, 0}, {1, 1}, {1}};
    e.snapshot.euler_char = 0;
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    const std::vector<BiellipticRow> rows = {
        {1, Kind::Generic, "E_tau'", {}, "1/2", "1/2", 2, {vec({"1/2", "0", "0", "0"})}, {2}, 2},
        {2, Kind::Generic, "E_tau'", {vec({"0", "1/2", "1/2", "0"})}, "1/2", "1/2", 2,
         {vec({"1/2", "0", "0", "0"}), vec({"0", "1/2", "0", "0"})}, {2, 2}, 2},
        {3, Kind::Eisenstein, "E_rho", {}, "1/3", "1/3", 3, {vec({"1/3", "0", "0", "0"})}, {3}, 3},
        {4, Kind::Eisenstein, "E_rho", {vec({"0", "1/3", "1/3", "-1/3"})}, "1/3", "1/3", 3,
         {vec({"1/3", "0", "0", "0"}), vec({"0", "1/3", "0", "0"})}, {3, 3}, 3},
        {5, Kind::Gauss, "E_i", {}, "1/4", "1/4", 4, {vec({"1/4", "0", "0", "0"})}, {4}, 4},
        {6, Kind::Gauss, "E_i", {vec({"0", "1/2", "1/2", "1/2"})}, "1/4", "1/4", 4,
         {vec({"1/4", "0", "0", "0"}), vec({"0", "1/2", "0", "0"})}, {2, 4}, 4},
        {7, Kind::Eisenstein, "E_rho", {}, "1/6", "1/6", 6, {vec({"1/6", "0", "0", "0"})}, {6}, 6},
    };
    for (const auto& r : rows)
        out.push_back(bielliptic(r));

    {
        CatalogEntry e;
        e.name = "z4-threefold";
        e.provenance = "(E_tau0 x E_tau1 x E_i) / K with K generated by (1/2, 1/2, 0) and "
                       "g(z0, z1, z2) = (z0 + 1/4, -z1, i z2); the Albanese fiber is bielliptic";
        e.conventions = "K generator (1/2, 0 | 1/2, 0 | 0, 0) in (1, tau) coordinates per factor";
        e.spec.factors = {{Kind::Generic, "E_tau0"}, {Kind::Generic, "E_tau1"}, {Kind::Gauss, "E_i"}};
        e.spec.k_gens = {vec({"1/2", "0", "1/2", "0", "0", "0"})};
        e.spec.generators = {gen("g", {"0", "1/2", "1/4"}, vec({"1/4", "0", "0", "0", "0", "0"}))};
        e.stated.group_order = 4;
        e.stated.subgroup_h = std::vector<std::string>{"e", "g^2"};
        e.stated.fiber_dim = 2;
        e.stated.fiber_abelian = false;
        e.stated.holonomy_order = 2;
        e.stated.holonomy_cyclic = true;
        e.stated.k0 = std::vector<RatVector>{vec({"1/2", "0", "0", "0", "0", "0"})};
        e.snapshot.dim = 3;
        e.snapshot.q = 1;
        e.snapshot.cyclic = true;
        e.snapshot.fiber_support = std::vector<std::string>{"E_tau1", "E_i"};
        e.snapshot.canonical_order = 4;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "z2z2-threefold";
        e.provenance = "E1 x E2 x E3 / (Z/2)^2 with g1 = (-z1, -z2 + 1/2, z3 + 1/2) and "
                       "g2 = (z1 + 1/2, -z2, -z3)";
        e.conventions = "translations 1/2 are the point (1/2, 0) of the factor";
        e.spec.factors = {{Kind::Generic, "E1"}, {Kind::Generic, "E2"}, {Kind::Generic, "E3"}};
        e.spec.generators = {
            gen("g1", {"1/2", "1/2", "0"}, vec({"0", "0", "1/2", "0", "1/2", "0"})),
            gen("g2", {"0", "1/2", "1/2"}, vec({"1/2", "0", "0", "0", "0", "0"}))};
        e.stated.dim = 3;
        e.stated.q = 0;
        e.stated.group_order = 4;
        e.stated.group_invariants = IntVector{2, 2};
        e.stated.hodge_rows = std::vector<std::vector<long>>{
            {1}, {0, 0}, {0, 3, 0}, {1, 3, 3, 1}, {0, 3, 0}, {0, 0}, {1}};
        e.stated.canonical_order = 1;
        e.stated.euler_char = 0;
        e.snapshot.cyclic = false;
        e.snapshot.fiber_dim = 3;
        e.snapshot.fiber_abelian = false;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "zmzm-threefold-m2";
        e.provenance = "(E0 x E1 x E2) / K, K generated by (1/2, 0, 1/2), with "
                       "g1 = (z0 + 1/2, -z1, z2) and g2 = (z0 + tau0/2, z1, -z2)";
        e.conventions = "tau0/2 is (0, 1/2) on factor 0; K generator (1/2, 0 | 0, 0 | 1/2, 0)";
        e.spec.factors = {{Kind::Generic, "E0"}, {Kind::Generic, "E1"}, {Kind::Generic, "E2"}};
        e.spec.k_gens = {vec({"1/2", "0", "0", "0", "1/2", "0"})};
        e.spec.generators = {
            gen("g1", {"0", "1/2", "0"}, vec({"1/2", "0", "0", "0", "0", "0"})),
            gen("g2", {"0", "0", "1/2"}, vec({"0", "1/2", "0", "0", "0", "0"}))};
        e.stated.q = 1;
        e.stated.group_order = 4;
        e.stated.group_invariants = IntVector{2, 2};
        e.stated.subgroup_h = std::vector<std::string>{"e", "g1"};
        e.stated.fiber_abelian = false;
        e.stated.holonomy_order = 2;
        e.stated.holonomy_cyclic = true;
        e.snapshot.dim = 3;
        e.snapshot.fiber_dim = 2;
        e.snapshot.cyclic = false;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "zmzm-threefold-m3";
        e.provenance = "(E0 x E_rho1 x E_rho2) / K, K generated by (1/3, 0, (1 - rho)/3), with "
                       "g1 = (z0 + 1/3, rho z1, z2) and g2 = (z0 + tau0/3, z1, rho z2)";
        e.conventions = "tau0/3 is (0, 1/3) on factor 0; (1 - rho)/3 is (1/3, -1/3)";
        e.spec.factors = {
            {Kind::Generic, "E0"}, {Kind::Eisenstein, "E_rho1"}, {Kind::Eisenstein, "E_rho2"}};
        e.spec.k_gens = {vec({"1/3", "0", "0", "0", "1/3", "-1/3"})};
        e.spec.generators = {
            gen("g1", {"0", "1/3", "0"}, vec({"1/3", "0", "0", "0", "0", "0"})),
            gen("g2", {"0", "0", "1/3"}, vec({"0", "1/3", "0", "0", "0", "0"}))};
        e.stated.q = 1;
        e.stated.group_order = 9;
        e.stated.group_invariants = IntVector{3, 3};
        e.stated.subgroup_h = std::vector<std::string>{"e", "g1", "g1^2"};
        e.stated.fiber_abelian = false;
        e.stated.holonomy_order = 3;
        e.stated.holonomy_cyclic = true;
        e.snapshot.dim = 3;
        e.snapshot.fiber_dim = 2;
        e.snapshot.cyclic = false;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "abelian-fiber-construction";
        e.provenance = "A0 x A1 / (Z/2) with A0 = E0, A1 = E1 x E2 and g = (z0 + 1/2, -z1, -z2)";
        e.conventions = "1/2 on A0 is (1/2, 0) on factor 0";
        e.spec.factors = {{Kind::Generic, "E0"}, {Kind::Generic, "E1"}, {Kind::Generic, "E2"}};
        e.spec.generators = {gen("g", {"0", "1/2", "1/2"}, vec({"1/2", "0", "0", "0", "0", "0"}))};
        e.stated.q = 1;
        e.stated.fiber_abelian = true;
        e.stated.fiber_dim = 2;
        e.stated.fiber_support = std::vector<std::string>{"E1", "E2"};
        e.snapshot.dim = 3;
        e.snapshot.group_order = 2;
        e.snapshot.subgroup_h = std::vector<std::string>{"e"};
        e.snapshot.canonical_order = 1;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "low-irregularity-cyclic";
        e.provenance = "(T x E) / (Z/2) with T = E1 x E2 and (a, z) -> (-a, z + 1/2)";
        e.conventions = "the 2-torsion point t is (1/2, 0) on E";
        e.spec.factors = {{Kind::Generic, "E1"}, {Kind::Generic, "E2"}, {Kind::Generic, "E"}};
        e.spec.generators = {gen("g", {"1/2", "1/2", "0"}, vec({"0", "0", "0", "0", "1/2", "0"}))};
        e.stated.dim = 3;
        e.stated.q = 1;
        e.stated.group_order = 2;
        e.stated.cyclic = true;
        e.snapshot.fiber_dim = 2;
        e.snapshot.fiber_abelian = true;
        e.snapshot.subgroup_h = std::vector<std::string>{"e"};
        e.snapshot.fiber_support = std::vector<std::string>{"E1", "E2"};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "small-irregularity-cyclic";
        e.provenance = "product of the bielliptic actions of families 1 and 3 under one Z/6: "
                       "g = (z1 + 1/2, -z2, z3 + 1/3, rho z4)";
        e.conventions = "all translations are real points (a, 0) of their factor";
        e.spec.factors = {{Kind::Generic, "E_tau"},
                          {Kind::Generic, "E_tau'"},
                          {Kind::Generic, "E_sigma"},
                          {Kind::Eisenstein, "E_rho"}};
        e.spec.generators = {gen("g", {"0", "1/2", "0", "1/3"},
                                 vec({"1/2", "0", "0", "0", "1/3", "0", "0", "0"}))};
        e.snapshot.dim = 4;
        e.snapshot.q = 2;
        e.snapshot.group_order = 6;
        e.snapshot.cyclic = true;
        e.snapshot.fiber_dim = 2;
        e.snapshot.fiber_abelian = true;
        e.snapshot.subgroup_h = std::vector<std::string>{"e"};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "z4-threefold-corrupted";
        e.provenance = "z4-threefold with the translation 1/4 replaced by 1/2, so g^2 acts "
                       "linearly and fixes points";
        e.conventions = "as z4-threefold";
        e.spec = out[7].spec;
        e.spec.generators[0].translation = vec({"1/2", "0", "0", "0", "0", "0"});
        e.failure = ExpectedFailure{"validation", "g^2"};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "not-all-bielliptic-2x6";
        e.provenance = "(d1, d2) = (2, 6) configuration with linear parts diag(1, -1, 1) and "
                       "diag(1, 1, zeta6), translations chosen so that H = <g2^2> has order 3";
        e.conventions = "K trivial; g1 translates by tau'/2 on factor 0, g2 by 1/2 on factors 0 and 1";
        e.spec.factors = {
            {Kind::Generic, "E_tau'"}, {Kind::Generic, "E_tau"}, {Kind::Eisenstein, "E_rho"}};
        e.spec.generators = {
            gen("g1", {"0", "1/2", "0"}, vec({"0", "1/2", "0", "0", "0", "0"})),
            gen("g2", {"0", "0", "1/6"}, vec({"1/2", "0", "1/2", "0", "0", "0"}))};
        e.failure = ExpectedFailure{"validation", "g2^2"};
        out.push_back(std::move(e));
    }
    return out;
}

template <typename T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string show(bool b) {
    return b ? "true" : "false";
}

std::string show(const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i];
    return s + "]";
}

std::string show(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].get_str();
    return s + "]";
}

std::string show(const std::vector<std::vector<long>>& rows) {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            s += " / ";
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            s += (k ? " " : "") + std::to_string(rows[i][k]);
    }
    return s;
}

std::string show(const RationalLattice& l) {
    const RatMatrix b = l.basis();
    std::string s = "<";
    for (std::size_t j = 0; j < b.cols(); ++j)
        s += (j ? ", " : "") + to_string(b.column(j));
    return s + ">";
}

struct Computed {
    HyperellipticDatum datum;
    AlbaneseReport report;
    InvariantsReport inv;
};

class Differ {
public:
    Differ(CatalogRun& run, const Computed& c) : run_(run), c_(c) {}

    void compare(const Expectation& e, const std::string& source) {
        const auto& r = c_.report;
        const auto& d = c_.datum;
        check(e.dim, r.dim, "dim", source);
        check(e.q, r.q, "q", source);
        check(e.group_order, r.group_order, "group_order", source);
        if (e.group_invariants) {
            IntVector g = d.group.abelian() ? abelian_invariants(d.group) : IntVector{};
            check(e.group_invariants, g, "group_invariants", source);
        }
        check(e.cyclic, d.group.cyclic(), "cyclic", source);
        check(e.isogeny_factors, r.albanese_isogeny_factors, "albanese_isogeny_factors", source);
        if (e.albanese_lattice) {
            const std::size_t amb = d.torus.ambient_rank();
            RatMatrix alb = albanese_in_ambient(d, r);
            std::vector<RatVector> cols;
            for (std::size_t j = 0; j < alb.cols(); ++j)
                cols.push_back(alb.column(j));
            lattice(RationalLattice::generated_by(*e.albanese_lattice, amb),
                    RationalLattice::generated_by(cols, amb), "albanese_lattice", source);
        }
        if (e.k0) {
            const std::size_t amb = d.torus.ambient_rank();
            RatMatrix a0 = d.torus.basis * to_rational(r.lambda0);
            std::vector<RatVector> base;
            for (std::size_t j = 0; j < a0.cols(); ++j)
                base.push_back(a0.column(j));
            std::vector<RatVector> want = base, got = base;
            want.insert(want.end(), e.k0->begin(), e.k0->end());
            for (const auto& g : r.k0.generators)
                got.push_back(a0 * g);
            lattice(RationalLattice::generated_by(want, amb), RationalLattice::generated_by(got, amb),
                    "k0", source);
        }
        check(e.subgroup_h, r.subgroup_h, "subgroup_h", source);
        check(e.fiber_dim, r.fiber_dim, "fiber_dim", source);
        check(e.fiber_abelian, r.fiber_class.abelian_variety, "fiber_abelian", source);
        check(e.holonomy_order, r.fiber_class.holonomy_order, "holonomy_order", source);
        check(e.holonomy_cyclic, r.fiber_class.cyclic, "holonomy_cyclic", source);
        check(e.fiber_support, r.fiber_support, "fiber_support", source);
        if (e.hodge_rows) {
            std::vector<std::vector<long>> rows;
            for (const auto& row : c_.inv.diamond.rows()) {
                rows.emplace_back();
                for (const auto& x : row)
                    rows.back().push_back(x.get_si());
            }
            check(e.hodge_rows, rows, "hodge_rows", source);
        }
        check(e.canonical_order, c_.inv.canonical_order, "canonical_order", source);
        check(e.euler_char, c_.inv.euler_char_O.get_si(), "euler_char_O", source);
    }

private:
    template <typename T>
    void check(const std::optional<T>& want, const T& got, const std::string& field,
               const std::string& source) {
        if (want && !(*want == got))
            run_.diff.push_back({field, source, show(*want), show(got)});
    }

    void lattice(const RationalLattice& want, const RationalLattice& got, const std::string& field,
                 const std::string& source) {
        if (!(want == got))
            run_.diff.push_back({field, source, show(want), show(got)});
    }

    CatalogRun& run_;
    const Computed& c_;
};

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> list_entries() {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries())
        names.push_back(e.name);
    return names;
}

const CatalogEntry& find_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name)
            return e;
    throw Error("UnknownEntry", "no catalog entry named '" + name + "'", ErrorKind::Parse);
}

CatalogRun run_entry(const std::string& name) {
    return run_entry(find_entry(name));
}

CatalogRun run_entry(const CatalogEntry& entry) {
    CatalogRun run;
    run.name = entry.name;
    run.negative = entry.negative();
    HyperellipticDatum d = build_datum(entry.spec);
    ValidationReport vr = validate(d);

    if (entry.failure) {
        const auto& f = *entry.failure;
        if (vr.passed()) {
            run.diff.push_back({"validation", "failure", "fixed point of " + f.element, "passed"});
            return run;
        }
        bool found = std::any_of(vr.fixed_points.begin(), vr.fixed_points.end(),
                                 [&](const FixedPointWitness& w) { return w.element == f.element; });
        if (!found) {
            std::vector<std::string> els;
            for (const auto& w : vr.fixed_points)
                els.push_back(w.element);
            run.diff.push_back({"validation", "failure", "fixed point of " + f.element,
                                "fixed points of " + show(els)});
        }
        return run;
    }

    if (!vr.passed()) {
        run.diff.push_back({"validation", "stated", "passed", show(vr.failures())});
        return run;
    }
    Computed c{d, run_pipeline(d, false), compute_invariants(d)};
    Differ differ(run, c);
    differ.compare(entry.stated, "stated");
    differ.compare(entry.snapshot, "snapshot");
    return run;
}

}  // namespace hyperell
