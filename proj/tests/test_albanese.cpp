#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperell/albanese.hpp"
#include "hyperell/catalog.hpp"

using namespace hyperell;

namespace {

HyperellipticDatum validated(const std::string& name) {
    HyperellipticDatum d = build_datum(find_entry(name).spec);
    REQUIRE(validate(d).passed());
    return d;
}

std::vector<std::string> positive_entries() {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries())
        if (!e.negative())
            out.push_back(e.name);
    return out;
}

}  // namespace

TEST_CASE("decomposition invariants on every catalog entry") {
    for (const auto& name : positive_entries()) {
        CAPTURE(name);
        HyperellipticDatum d = validated(name);
        Decomposition dec = decompose(d);
        CHECK(dec.r0() + dec.r1() == d.torus.rank);
        CHECK(dec.r0() % 2 == 0);
        CHECK(dec.k.order() == dec.k0.order());
        CHECK(dec.k.order() == dec.k1.order());
        // index of Lambda_0 + Lambda_1 in Lambda is |K|
        Integer idx = abs(determinant(hstack(dec.lambda0.basis(), dec.lambda1.basis())));
        CHECK(idx == dec.k.order());
        // Lambda_0 is fixed by the group
        for (const auto& g : d.group.elements())
            for (std::size_t j = 0; j < dec.r0(); ++j)
                CHECK(g.linear * dec.lambda0.basis().column(j) == dec.lambda0.basis().column(j));
    }
}

TEST_CASE("cocycle splits every translation") {
    for (const auto& name : positive_entries()) {
        CAPTURE(name);
        HyperellipticDatum d = validated(name);
        Decomposition dec = decompose(d);
        CocycleTable table = decompose_cocycle(d, dec);
        REQUIRE(table.t0.size() == d.group.order());
        for (std::size_t i = 0; i < d.group.order(); ++i) {
            RatVector sum = to_rational(dec.lambda0.basis()) * table.t0[i];
            sum = sum + to_rational(dec.lambda1.basis()) * table.t1[i];
            CHECK(is_integral(sum - d.group.element(i).translation));
        }
    }
}

TEST_CASE("H is a subgroup and the Albanese lattice contains the translations") {
    for (const auto& name : positive_entries()) {
        CAPTURE(name);
        HyperellipticDatum d = validated(name);
        Decomposition dec = decompose(d);
        CocycleTable table = decompose_cocycle(d, dec);
        auto h = compute_H(d, dec, table);
        CHECK(std::find(h.begin(), h.end(), 0) != h.end());
        for (auto a : h)
            for (auto b : h)
                CHECK(std::find(h.begin(), h.end(), d.group.multiply(a, b)) != h.end());
        CHECK(d.group.order() % h.size() == 0);
        auto [lattice, factors] = compute_albanese(d, dec, table);
        for (const auto& t0 : table.t0)
            CHECK(lattice.contains(t0));
        Integer prod = 1;
        for (const auto& f : factors)
            prod *= f;
        CHECK(prod * h.size() == d.group.order() * dec.k0.order());
    }
}

TEST_CASE("dimensions add up") {
    for (const auto& name : positive_entries()) {
        CAPTURE(name);
        AlbaneseReport r = run_pipeline(validated(name));
        CHECK(r.q + r.fiber_dim == r.dim);
        CHECK(r.q < r.dim);
        CHECK(r.fiber.dim() == r.fiber_dim);
        if (r.fiber_class.abelian_variety)
            CHECK(r.fiber_class.holonomy_order == 1);
        else
            CHECK(validate(r.fiber).passed());
    }
}

TEST_CASE("z4 threefold fiber and recursion") {
    AlbaneseReport r = run_pipeline(validated("z4-threefold"), true);
    CHECK(r.subgroup_h == std::vector<std::string>{"e", "g^2"});
    CHECK(r.fiber_generators.size() == 1);
    CHECK(r.fiber_generators[0].parent == "g^2");
    REQUIRE(r.fiber_report.size() == 1);
    CHECK(r.fiber_report[0].q == 1);
    CHECK(r.fiber_report[0].fiber_class.abelian_variety);
    CHECK(r.j_stability == "verified");
}

TEST_CASE("no recursion below an abelian fiber or at q = 0") {
    CHECK(run_pipeline(validated("bielliptic-3"), true).fiber_report.empty());
    CHECK(run_pipeline(validated("z2z2-threefold"), true).fiber_report.empty());
}

TEST_CASE("group invariants") {
    CHECK(abelian_invariants(validated("zmzm-threefold-m2").group) == IntVector{2, 2});
    CHECK(abelian_invariants(validated("bielliptic-7").group) == IntVector{6});
}

TEST_CASE("unvalidated data are rejected") {
    HyperellipticDatum d = build_datum(find_entry("bielliptic-1").spec);
    CHECK_THROWS_AS(run_pipeline(d), Error);
}
