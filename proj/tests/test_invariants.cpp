#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperell/albanese.hpp"
#include "hyperell/catalog.hpp"
#include "hyperell/invariants.hpp"
#include "oracles.hpp"

using namespace hyperell;

namespace {

HyperellipticDatum validated(const std::string& name) {
    HyperellipticDatum d = build_datum(find_entry(name).spec);
    REQUIRE(validate(d).passed());
    return d;
}

}  // namespace

TEST_CASE("exact Hodge numbers agree with floating-point averaging") {
    for (const auto& e : catalog_entries()) {
        if (e.negative())
            continue;
        CAPTURE(e.name);
        HyperellipticDatum d = validated(e.name);
        std::vector<std::vector<RootOfUnity>> eig;
        for (const auto& g : d.group.elements())
            eig.push_back(g.eigenvalues);
        double err = 1;
        auto h = oracle::hodge_numbers_complex(eig, d.dim(), &err);
        CHECK(err < 1e-9);
        HodgeDiamond hd = hodge_diamond(d);
        for (std::size_t p = 0; p <= d.dim(); ++p)
            for (std::size_t q = 0; q <= d.dim(); ++q)
                CHECK(hd.h[p][q] == h[p][q]);
    }
}

TEST_CASE("Hodge symmetries and derived quantities") {
    for (const auto& e : catalog_entries()) {
        if (e.negative())
            continue;
        CAPTURE(e.name);
        HyperellipticDatum d = validated(e.name);
        InvariantsReport r = compute_invariants(d);
        const std::size_t n = r.dim;
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = 0; q <= n; ++q) {
                CHECK(r.diamond.h[p][q] == r.diamond.h[q][p]);
                CHECK(r.diamond.h[p][q] == r.diamond.h[n - p][n - q]);
            }
        CHECK(r.diamond.h[0][0] == 1);
        CHECK(r.diamond.h[1][0] == static_cast<unsigned long>(r.q));
        CHECK((r.diamond.h[n][0] == 1) == (r.canonical_order == 1));
        Integer chi = 0;
        for (std::size_t q = 0; q <= n; ++q)
            chi += (q % 2 ? -1 : 1) * r.diamond.h[0][q];
        CHECK(chi == r.euler_char_O);
        CHECK(irregularity(d) == compute_A0(d).rank() / 2);
    }
}

TEST_CASE("fiber canonical order divides the canonical order") {
    for (const auto& e : catalog_entries()) {
        if (e.negative())
            continue;
        CAPTURE(e.name);
        HyperellipticDatum d = validated(e.name);
        AlbaneseReport r = run_pipeline(d);
        PullbackDiagnostic p = canonical_report(r, compute_invariants(d), compute_invariants(r.fiber));
        CHECK(p.divides);
        CHECK(p.x_order % p.fiber_order == 0);
    }
}

TEST_CASE("triangular diamond layout") {
    InvariantsReport r = compute_invariants(validated("z2z2-threefold"));
    CHECK(format_diamond(r.diamond) ==
          "      1\n"
          "    0   0\n"
          "  0   3   0\n"
          "1   3   3   1\n"
          "  0   3   0\n"
          "    0   0\n"
          "      1\n");
    CHECK(r.diamond.rows()[3] == std::vector<Integer>{1, 3, 3, 1});
}

TEST_CASE("bielliptic invariants") {
    InvariantsReport r = compute_invariants(validated("bielliptic-7"));
    CHECK(r.q == 1);
    CHECK(r.diamond.h[1][1] == 2);
    CHECK(r.diamond.h[2][0] == 0);
    CHECK(r.canonical_order == 6);
    CHECK(character_conductor(validated("bielliptic-5")) == 4);
}
