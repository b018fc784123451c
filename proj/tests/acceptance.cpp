// One PASS/FAIL line per acceptance criterion. All comparisons are exact; the
// only tolerances are the wall-clock limits below.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hyperell/albanese.hpp"
#include "hyperell/catalog.hpp"
#include "hyperell/invariants.hpp"
#include "hyperell/oracle.hpp"

using namespace hyperell;

namespace {

constexpr double table_time_limit_s = 1.0;
constexpr double oracle_time_limit_s = 60.0;

struct Check {
    std::vector<std::string> problems;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok)
            problems.push_back(what);
    }
};

HyperellipticDatum validated(const std::string& name) {
    HyperellipticDatum d = build_datum(find_entry(name).spec);
    if (!validate(d).passed())
        throw Error("InvalidDatum", name + " does not validate");
    return d;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RationalLattice ambient_lattice(const std::vector<RatVector>& gens, std::size_t dim) {
    return RationalLattice::generated_by(gens, dim);
}

std::vector<RatVector> columns(const RatMatrix& m) {
    std::vector<RatVector> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        out.push_back(m.column(j));
    return out;
}

RatVector point(std::initializer_list<Rational> xs) {
    return RatVector(xs);
}

void table_one(Check& c) {
    struct Row {
        IntVector factors;
        std::vector<RatVector> extra;
        std::string curve;
    };
    const Rational h(1, 2), t(1, 3), q(1, 4), s(1, 6);
    const std::vector<Row> rows = {
        {{2}, {point({h, 0, 0, 0})}, "E_tau'"},
        {{2, 2}, {point({h, 0, 0, 0}), point({0, h, 0, 0})}, "E_tau'"},
        {{3}, {point({t, 0, 0, 0})}, "E_rho"},
        {{3, 3}, {point({t, 0, 0, 0}), point({0, t, 0, 0})}, "E_rho"},
        {{4}, {point({q, 0, 0, 0})}, "E_i"},
        {{2, 4}, {point({q, 0, 0, 0}), point({0, h, 0, 0})}, "E_i"},
        {{6}, {point({s, 0, 0, 0})}, "E_rho"},
    };
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string name = "bielliptic-" + std::to_string(i + 1);
        HyperellipticDatum d = validated(name);
        AlbaneseReport r = run_pipeline(d);
        c.expect(r.q == 1, name + ": q");
        c.expect(r.albanese_isogeny_factors == rows[i].factors, name + ": isogeny factors");
        std::vector<RatVector> want = {point({1, 0, 0, 0}), point({0, 1, 0, 0})};
        want.insert(want.end(), rows[i].extra.begin(), rows[i].extra.end());
        c.expect(ambient_lattice(want, 4) == ambient_lattice(columns(albanese_in_ambient(d, r)), 4),
                 name + ": Albanese lattice");
        c.expect(r.fiber_class.abelian_variety, name + ": fiber abelian");
        c.expect(r.fiber_dim == 1, name + ": fiber dimension");
        c.expect(r.fiber_support == std::vector<std::string>{rows[i].curve}, name + ": fiber curve");
    }
    double elapsed = seconds_since(t0);
    c.expect(elapsed < table_time_limit_s, "runtime " + std::to_string(elapsed) + " s");
}

void bielliptic_fibers(Check& c) {
    HyperellipticDatum d = validated("z4-threefold");
    AlbaneseReport r = run_pipeline(d);
    c.expect(r.subgroup_h == std::vector<std::string>{"e", "g^2"}, "H = {e, g^2}");
    c.expect(!r.fiber_class.abelian_variety, "fiber hyperelliptic");
    c.expect(r.fiber_class.cyclic && r.fiber_class.holonomy_order == 2, "holonomy Z/2");
    c.expect(r.fiber_dim == 2, "fiber dimension 2");
    RatMatrix a0 = d.torus.basis * to_rational(r.lambda0);
    std::vector<RatVector> got = columns(a0), want = columns(a0);
    for (const auto& g : r.k0.generators)
        got.push_back(a0 * g);
    want.push_back(point({Rational(1, 2), 0, 0, 0, 0, 0}));
    c.expect(r.k0.order() == 2 && ambient_lattice(got, 6) == ambient_lattice(want, 6), "K0 = <1/2>");
}

void hyperelliptic_fibers(Check& c) {
    for (long m : {2L, 3L}) {
        const std::string name = "zmzm-threefold-m" + std::to_string(m);
        HyperellipticDatum d = validated(name);
        AlbaneseReport r = run_pipeline(d);
        c.expect(d.group.abelian() && abelian_invariants(d.group) == IntVector{m, m},
                 name + ": G = (Z/m)^2");
        std::vector<std::string> h{"e", "g1"};
        if (m == 3)
            h.push_back("g1^2");
        c.expect(r.subgroup_h == h, name + ": H = <g1>");
        c.expect(!r.fiber_class.abelian_variety && r.fiber_class.cyclic &&
                     r.fiber_class.holonomy_order == static_cast<std::size_t>(m),
                 name + ": fiber hyperelliptic with holonomy Z/m");
        c.expect(r.q == 1, name + ": q = 1");
    }
}

void z2z2_threefold(Check& c) {
    HyperellipticDatum d = validated("z2z2-threefold");
    InvariantsReport inv = compute_invariants(d);
    c.expect(inv.q == 0, "q = 0");
    const std::vector<std::vector<long>> rows = {{1}, {0, 0}, {0, 3, 0}, {1, 3, 3, 1},
                                                 {0, 3, 0}, {0, 0}, {1}};
    auto got = inv.diamond.rows();
    bool same = got.size() == rows.size();
    for (std::size_t i = 0; same && i < rows.size(); ++i) {
        same = got[i].size() == rows[i].size();
        for (std::size_t j = 0; same && j < rows[i].size(); ++j)
            same = got[i][j] == rows[i][j];
    }
    c.expect(same, "Hodge diamond");
    c.expect(inv.canonical_order == 1, "canonical order 1");
    c.expect(inv.euler_char_O == 0, "chi(O) = 0");
}

void abelian_fibers(Check& c) {
    HyperellipticDatum d = validated("abelian-fiber-construction");
    AlbaneseReport r = run_pipeline(d);
    c.expect(r.q == 1, "Albanese dimension 1");
    c.expect(r.fiber_class.abelian_variety, "fiber abelian");
    c.expect(r.subgroup_h == std::vector<std::string>{"e"}, "H trivial, so the fiber is A1 itself");
    c.expect(r.fiber_support == std::vector<std::string>{"E1", "E2"}, "fiber spans A1");
    c.expect(r.fiber.torus.index() == 1, "fiber lattice is the product lattice of A1");
}

bool is_prime(std::size_t n) {
    if (n < 2)
        return false;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

void property_suite(Check& c) {
    for (const auto& e : catalog_entries()) {
        if (e.negative())
            continue;
        const std::string& n = e.name;
        HyperellipticDatum d = validated(n);
        AlbaneseReport r = run_pipeline(d);
        InvariantsReport inv = compute_invariants(d);
        InvariantsReport inv_f = compute_invariants(r.fiber);
        c.expect(r.q < r.dim, n + ": q < dim");
        c.expect(r.q == compute_A0(d).rank() / 2 && r.q == irregularity(d) && r.q == inv.q,
                 n + ": q from lattice and characters");
        c.expect(r.k.order() == r.k0.order() && r.k.order() == r.k1.order(), n + ": |K| = |K0| = |K1|");
        c.expect(r.q + r.fiber_dim == r.dim, n + ": dim Alb + dim fiber = dim X");
        c.expect(inv.canonical_order % inv_f.canonical_order == 0, n + ": fiber canonical order divides");
        if (r.q + 1 == r.dim)
            c.expect(d.group.cyclic(), n + ": q = dim - 1 implies cyclic");
        if (d.group.cyclic())
            c.expect(r.fiber_class.abelian_variety || r.fiber_class.cyclic,
                     n + ": cyclic G gives an abelian or cyclic fiber");
        if (d.group.cyclic() && is_prime(d.group.order()))
            c.expect(r.fiber_class.abelian_variety && r.subgroup_h.size() == 1,
                     n + ": prime cyclic G gives an abelian fiber with trivial H");
    }
}

void oracle_equivalence(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : catalog_entries()) {
        HyperellipticDatum d = build_datum(e.spec);
        validate(d);
        OracleReport r = run_oracle(d);
        for (const auto& f : r.fixed_points)
            c.expect(f.agree, e.name + ": fixed points of " + f.element);
        c.expect(r.level.exhaustive, e.name + ": level covers every fixed component");
        if (!e.negative())
            c.expect(r.fiber && r.fiber->pass, e.name + ": fiber count");
        if (!r.level.nominal)
            c.notes.push_back(e.name + " uses level " + std::to_string(r.level.level) + " (nominal " +
                              std::to_string(r.level.nominal_level) + ")");
    }
    double elapsed = seconds_since(t0);
    c.expect(elapsed < oracle_time_limit_s, "runtime " + std::to_string(elapsed) + " s");
}

void negative_controls(Check& c) {
    {
        HyperellipticDatum d = build_datum(find_entry("z4-threefold-corrupted").spec);
        ValidationReport v = validate(d);
        bool at_g2 = false;
        for (const auto& w : v.fixed_points)
            at_g2 = at_g2 || w.element == "g^2";
        c.expect(!v.passed() && at_g2, "corrupted z4 threefold fails freeness at g^2");
    }
    {
        HyperellipticDatum d = build_datum(find_entry("not-all-bielliptic-2x6").spec);
        Decomposition dec = decompose(d);
        auto h = compute_H(d, dec, decompose_cocycle(d, dec));
        c.expect(h.size() == 3, "(2,6) configuration forces |H| = 3");
        ValidationReport v = validate(d);
        bool witnessed = false;
        for (const auto& w : v.fixed_points) {
            std::size_t i = *d.group.find_label(w.element);
            const AffineAut& a = d.group.element(i);
            witnessed = witnessed || is_integral(a.linear * w.point + a.translation - w.point);
        }
        c.expect(!v.passed() && witnessed, "(2,6) configuration rejected with a fixed-point witness");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"bielliptic table: q, Albanese isogeny factors and elliptic fibers", table_one},
        {"bielliptic fibers of the Z/4 threefold", bielliptic_fibers},
        {"hyperelliptic fibers for m = 2 and m = 3", hyperelliptic_fibers},
        {"Z/2 x Z/2 threefold: q, Hodge diamond, canonical order, chi(O)", z2z2_threefold},
        {"abelian fibers isomorphic to A1", abelian_fibers},
        {"property suite on every catalog entry", property_suite},
        {"oracle equivalence on every catalog entry", oracle_equivalence},
        {"negative controls", negative_controls},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        try {
            run(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (c.problems.empty() ? "PASS" : "FAIL") << "  " << name << "\n";
        for (const auto& p : c.problems)
            std::cout << "      " << p << "\n";
        for (const auto& n : c.notes)
            std::cout << "      note: " << n << "\n";
        failed += !c.problems.empty();
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
