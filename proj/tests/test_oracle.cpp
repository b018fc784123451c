#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperell/catalog.hpp"
#include "hyperell/oracle.hpp"

using namespace hyperell;

namespace {

HyperellipticDatum validated(const std::string& name) {
    HyperellipticDatum d = build_datum(find_entry(name).spec);
    validate(d);
    return d;
}

}  // namespace

TEST_CASE("torsion model is a permutation representation") {
    HyperellipticDatum d = validated("bielliptic-4");
    TorsionModel m(d, 3);
    CHECK(m.size() == 81);
    std::vector<std::int64_t> c;
    for (std::uint64_t p = 0; p < m.size(); ++p) {
        m.decode(p, c);
        CHECK(m.encode(c) == p);
    }
    for (std::size_t g = 0; g < m.group_order(); ++g) {
        std::vector<bool> hit(m.size(), false);
        for (std::uint64_t p = 0; p < m.size(); ++p)
            hit[m.apply(g, p)] = true;
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
    for (std::uint64_t p = 0; p < m.size(); ++p)
        CHECK(m.apply(0, p) == p);
}

TEST_CASE("level errors") {
    HyperellipticDatum d = validated("bielliptic-3");
    CHECK_THROWS_AS(TorsionModel(d, 2), Error);
    CHECK_THROWS_AS(TorsionModel(d, 3000), Error);
}

TEST_CASE("fixed points of the corrupted threefold") {
    HyperellipticDatum d = validated("z4-threefold-corrupted");
    TorsionModel m(d, 4);
    std::size_t g2 = *d.group.find_label("g^2");
    CHECK(oracle_fixed_points(m, g2) > 0);
    OracleReport r = run_oracle(d);
    CHECK(r.pass());
    CHECK_FALSE(r.fiber.has_value());
}

TEST_CASE("z4 threefold at level 4") {
    OracleReport r = run_oracle(validated("z4-threefold"), 4);
    CHECK(r.pass());
    REQUIRE(r.fiber);
    CHECK(r.fiber->pass);
    CHECK(r.fiber->h_order == 2);
}

TEST_CASE("level choice") {
    LevelChoice a = choose_level(validated("bielliptic-7"));
    CHECK(a.nominal);
    CHECK(a.level == 36);
    LevelChoice b = choose_level(validated("z4-threefold"));
    CHECK_FALSE(b.nominal);
    CHECK(b.nominal_level == 16);
    CHECK(b.exhaustive);
}
