#pragma once

// Roots of unity and exact arithmetic in Q(zeta_N), dense power basis
// modulo the cyclotomic polynomial.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hyperell/exactlin.hpp"

namespace hyperell {

// exp(2 pi i k / n), stored reduced with 0 <= k < n.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(long k, long n);

    static RootOfUnity one() { return {}; }
    // Accepts "k/N" (or "0", "1" for the trivial root).
    static RootOfUnity parse(const std::string& text);

    long numerator() const noexcept { return k_; }
    long denominator() const noexcept { return n_; }
    long order() const noexcept { return n_; }
    bool is_one() const noexcept { return n_ == 1; }

    RootOfUnity conj() const { return {n_ - k_, n_}; }
    RootOfUnity pow(long e) const;
    RootOfUnity operator*(const RootOfUnity& o) const;

    std::string to_string() const;

    auto operator<=>(const RootOfUnity&) const = default;

private:
    long k_ = 0;
    long n_ = 1;
};

using IntPolynomial = IntVector;  // coefficients from x^0 upward

long euler_phi(long n);
IntPolynomial cyclotomic_polynomial(long n);
IntPolynomial poly_multiply(const IntPolynomial& a, const IntPolynomial& b);
// Exact quotient by a monic divisor, or nullopt when the remainder is nonzero.
std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& a, const IntPolynomial& monic);

// Multiplicity of each Phi_d in p; throws NotFiniteOrder if p is not a product of
// cyclotomic polynomials.
std::map<long, int> cyclotomic_multiplicities(const IntPolynomial& p);

class CycloNumber {
public:
    CycloNumber() : CycloNumber(1) {}
    explicit CycloNumber(long conductor);
    CycloNumber(long conductor, const Rational& constant);

    static CycloNumber zero(long conductor) { return CycloNumber(conductor); }
    static CycloNumber one(long conductor) { return {conductor, Rational(1)}; }

    long conductor() const noexcept { return n_; }
    const RatVector& coefficients() const noexcept { return c_; }

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber scaled(const Rational& s) const;
    CycloNumber conj() const;

    bool is_rational() const;

    bool operator==(const CycloNumber& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    friend CycloNumber embed(const RootOfUnity& z, long conductor);
    void reduce_from(RatVector full);

    long n_;
    RatVector c_;
};

// Throws OrderMismatch when the order of z does not divide the conductor.
CycloNumber embed(const RootOfUnity& z, long conductor);
CycloNumber elementary_symmetric(const std::vector<CycloNumber>& values, std::size_t p,
                                 long conductor);
// Throws NonRational.
Rational rational_part(const CycloNumber& z);

}  // namespace hyperell
