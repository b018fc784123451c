#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "hyperell/cyclotomic.hpp"

using namespace hyperell;

TEST_CASE("roots of unity reduce and parse") {
    CHECK(RootOfUnity(2, 4) == RootOfUnity(1, 2));
    CHECK(RootOfUnity(-1, 4) == RootOfUnity(3, 4));
    CHECK(RootOfUnity(3, 3).is_one());
    CHECK(RootOfUnity::parse("1/6").order() == 6);
    CHECK(RootOfUnity::parse("0").is_one());
    CHECK(RootOfUnity::parse("1").is_one());
    CHECK(RootOfUnity(1, 4).pow(2) == RootOfUnity(1, 2));
    CHECK(RootOfUnity(1, 4) * RootOfUnity(1, 4).conj() == RootOfUnity::one());
    CHECK(RootOfUnity(1, 6).to_string() == "1/6");
    try {
        RootOfUnity::parse("x/3");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(e.code() == "BadRoot");
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPolynomial{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
    for (long n = 1; n <= 30; ++n)
        CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    // x^n - 1 is the product over divisors
    for (long n = 1; n <= 24; ++n) {
        IntPolynomial p{1};
        for (long d = 1; d <= n; ++d)
            if (n % d == 0)
                p = poly_multiply(p, cyclotomic_polynomial(d));
        IntPolynomial expected(n + 1);
        expected[0] = -1;
        expected[n] = 1;
        CHECK(p == expected);
    }
}

TEST_CASE("cyclotomic multiplicities") {
    IntPolynomial p = poly_multiply(cyclotomic_polynomial(4), cyclotomic_polynomial(2));
    p = poly_multiply(p, cyclotomic_polynomial(2));
    auto m = cyclotomic_multiplicities(p);
    CHECK(m.at(4) == 1);
    CHECK(m.at(2) == 2);
    CHECK_THROWS_AS(cyclotomic_multiplicities(IntPolynomial{-2, 1}), Error);
    CHECK_FALSE(poly_divide_exact(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}));
}

TEST_CASE("arithmetic in Q(zeta_N) agrees with complex numbers") {
    const double two_pi = 2.0 * std::acos(-1.0);
    auto value = [&](const CycloNumber& z) {
        std::complex<double> s;
        for (std::size_t k = 0; k < z.coefficients().size(); ++k)
            s += z.coefficients()[k].get_d() * std::polar(1.0, two_pi * double(k) / z.conductor());
        return s;
    };
    for (long n : {3L, 4L, 5L, 6L, 8L, 12L}) {
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                CycloNumber x = embed(RootOfUnity(a, n), n) + CycloNumber(n, Rational(1, 2));
                CycloNumber y = embed(RootOfUnity(b, n), n);
                std::complex<double> vx = std::polar(1.0, two_pi * a / n) + 0.5;
                std::complex<double> vy = std::polar(1.0, two_pi * b / n);
                CHECK(std::abs(value(x * y) - vx * vy) < 1e-12);
                CHECK(std::abs(value(x - y) - (vx - vy)) < 1e-12);
                CHECK(std::abs(value(x.conj()) - std::conj(vx)) < 1e-12);
            }
    }
}

TEST_CASE("rational parts") {
    const long n = 12;
    CycloNumber s = CycloNumber::zero(n);
    for (long k = 0; k < n; ++k)
        s += embed(RootOfUnity(k, n), n);
    CHECK(rational_part(s) == 0);
    CycloNumber z = embed(RootOfUnity(1, 3), n) + embed(RootOfUnity(2, 3), n);
    CHECK(rational_part(z) == -1);
    CHECK_THROWS_AS(rational_part(embed(RootOfUnity(1, 4), n)), Error);
    CHECK_THROWS_AS(embed(RootOfUnity(1, 5), n), Error);
}

TEST_CASE("elementary symmetric functions") {
    const long n = 4;
    std::vector<CycloNumber> v = {embed(RootOfUnity(1, 4), n), embed(RootOfUnity(3, 4), n)};
    CHECK(rational_part(elementary_symmetric(v, 0, n)) == 1);
    CHECK(rational_part(elementary_symmetric(v, 1, n)) == 0);
    CHECK(rational_part(elementary_symmetric(v, 2, n)) == 1);
}
