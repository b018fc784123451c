#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

using namespace hyperell;

namespace {

bool is_row_echelon(const IntMatrix& h) {
    long last = -1;
    bool zero_rows = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        long pivot = -1;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                pivot = static_cast<long>(j);
                break;
            }
        if (pivot < 0) {
            zero_rows = true;
            continue;
        }
        if (zero_rows || pivot <= last || h(i, pivot) <= 0)
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, pivot) < 0 || h(k, pivot) >= h(i, pivot))
                return false;
        last = pivot;
    }
    return true;
}

}  // namespace

TEST_CASE("determinant matches Bareiss elimination") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 5;
        IntMatrix m = oracle::random_matrix(rng, n, n, -6, 6);
        CHECK(determinant(m) == oracle::bareiss_det(m));
    }
}

TEST_CASE("inverse and solve") {
    RatMatrix m = {{2, 1}, {1, 1}};
    RatMatrix inv = inverse(m);
    CHECK(m * inv == RatMatrix::identity(2));
    auto x = solve(m, RatVector{3, 2});
    REQUIRE(x);
    CHECK(*x == RatVector{1, 1});
    CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, RatVector{1, 2}));
    CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("characteristic polynomial of rotations") {
    CHECK(characteristic_polynomial(IntMatrix{{0, -1}, {1, 0}}) == IntVector{1, 0, 1});
    CHECK(characteristic_polynomial(IntMatrix{{0, -1}, {1, -1}}) == IntVector{1, 1, 1});
    CHECK(characteristic_polynomial(IntMatrix{{1, -1}, {1, 0}}) == IntVector{1, -1, 1});
}

TEST_CASE("Hermite normal form is echelon with a unimodular transform") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        IntMatrix m = oracle::random_matrix(rng, r, c, -9, 9);
        HermiteResult hr = hermite_normal_form(m);
        CHECK(hr.u * m == hr.h);
        Integer d = oracle::bareiss_det(hr.u);
        CHECK((d == 1 || d == -1));
        CHECK(is_row_echelon(hr.h));
    }
}

TEST_CASE("Smith normal form matches determinantal divisors") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        IntMatrix m = oracle::random_matrix(rng, r, c, -8, 8);
        SmithResult sr = smith_normal_form(m);
        CHECK(sr.u * m * sr.v == sr.s);
        IntVector diag;
        for (std::size_t i = 0; i < std::min(r, c); ++i)
            if (sr.s(i, i) != 0)
                diag.push_back(sr.s(i, i));
        CHECK(diag == oracle::determinantal_invariants(m));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j)
                    CHECK(sr.s(i, j) == 0);
    }
}

TEST_CASE("sublattice canonical basis is independent of generators") {
    IntMatrix a = {{2, 0}, {0, 3}};
    IntMatrix b = {{2, 4, 2}, {3, 3, 0}};
    CHECK(Sublattice(a) == Sublattice(IntMatrix{{2, 2}, {0, 3}}));
    Sublattice s(b);
    CHECK(s.rank() == 2);
    CHECK(s.contains(RatVector{2, 0}));
    CHECK_FALSE(s.contains(RatVector{1, 0}));
    CHECK(s.contains(RatVector{0, 3}));
    CHECK(Sublattice::full(3).contains(RatVector{1, -4, 2}));
    CHECK_FALSE(Sublattice::full(2).contains(RatVector{Rational(1, 2), 0}));
}

TEST_CASE("saturation agrees with brute-force membership") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix g = oracle::random_matrix(rng, 3, 2, -4, 4);
        Sublattice s(g);
        Sublattice sat = saturate(s);
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y)
                for (int z = -4; z <= 4; ++z) {
                    RatVector v{x, y, z};
                    bool in_span = false;
                    for (int k = 1; k <= 100 && !in_span; ++k)
                        in_span = s.contains(Rational(k) * v);
                    // a multiple bounded by the index suffices
                    CHECK(sat.contains(v) == in_span);
                }
    }
}

TEST_CASE("kernel lattice") {
    Sublattice k = kernel_lattice(IntMatrix{{1, 1, 0}, {0, 0, 1}});
    CHECK(k.rank() == 1);
    CHECK(k.contains(RatVector{1, -1, 0}));
    CHECK(k.saturated());
    CHECK(kernel_lattice(IntMatrix{{2, 0}, {0, 2}}).rank() == 0);
}

TEST_CASE("quotient and torsion groups") {
    FiniteAbelianGroup q = quotient_group(Sublattice::full(2), Sublattice(IntMatrix{{2, 0}, {0, 4}}));
    CHECK(q.invariant_factors == IntVector{2, 4});
    CHECK(q.order() == 8);
    FiniteAbelianGroup t = torsion_subgroup({RatVector{Rational(1, 2), Rational(1, 2)},
                                            RatVector{Rational(1, 3), 0}},
                                           2);
    CHECK(t.order() == 6);
    CHECK(t.invariant_factors == IntVector{6});
    CHECK(torsion_subgroup({}, 3).trivial());
}

TEST_CASE("coset meets lattice agrees with enumeration") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix g = oracle::random_matrix(rng, 3, 1, -3, 3);
        if (g(0, 0) == 0 && g(1, 0) == 0 && g(2, 0) == 0)
            continue;
        Sublattice w(g);
        RatVector t{Rational(num(rng), 6), Rational(num(rng), 6), Rational(num(rng), 6)};
        for (auto& x : t)
            x.canonicalize();
        // t + s w integral for some rational s: s has denominator dividing 6 * |entries|
        bool found = false;
        for (int den = 1; den <= 36 && !found; ++den)
            for (int n = -6 * den; n <= 6 * den && !found; ++n) {
                Rational s(n, den);
                s.canonicalize();
                RatVector p = t;
                for (std::size_t i = 0; i < 3; ++i)
                    p[i] += s * g(i, 0);
                found = is_integral(p);
            }
        CHECK(coset_meets_lattice(w, t) == found);
    }
}

TEST_CASE("rational lattices") {
    auto l = RationalLattice::generated_by({RatVector{1, 0}, RatVector{0, 1}, RatVector{Rational(1, 4), 0},
                                           RatVector{0, Rational(1, 2)}},
                                          2);
    CHECK(l.denominator() == 4);
    CHECK(l.contains(RatVector{Rational(3, 4), Rational(1, 2)}));
    CHECK_FALSE(l.contains(RatVector{Rational(1, 2), Rational(1, 4)}));
    CHECK(RationalLattice::from_basis(l.basis()) == l);
    CHECK(l.reduce(RatVector{Rational(5, 4), Rational(3, 2)}) == l.reduce(RatVector{0, 0}));
}

TEST_CASE("group coefficients") {
    Sublattice ref = Sublattice::full(2);
    FiniteAbelianGroup g = torsion_subgroup({RatVector{Rational(1, 4), 0}}, 2);
    auto c = group_coefficients(g, ref, RatVector{Rational(3, 4), 2});
    REQUIRE(c);
    CHECK(member_of_finite_group(g, ref, RatVector{Rational(1, 2), 0}));
    CHECK_FALSE(member_of_finite_group(g, ref, RatVector{0, Rational(1, 2)}));
}

TEST_CASE("helpers") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_of(Rational(-1, 3)) == -1);
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(reduce_mod_one(RatVector{Rational(5, 4), -1}) == RatVector{Rational(1, 4), 0});
    CHECK(to_string(RatVector{Rational(1, 2), -3}) == "(1/2, -3)");
    CHECK_THROWS_AS(to_integer(RatVector{Rational(1, 2)}), Error);
}
