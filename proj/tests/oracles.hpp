#pragma once

// Slow, independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "hyperell/action.hpp"
#include "hyperell/exactlin.hpp"

namespace oracle {

using hyperell::Integer;
using hyperell::IntMatrix;
using hyperell::IntVector;
using hyperell::Rational;
using hyperell::RatVector;
using hyperell::RootOfUnity;

// Fraction-free Gaussian elimination.
inline Integer bareiss_det(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// Invariant factors from gcds of k x k minors (nonzero ones only, including 1s).
inline IntVector determinantal_invariants(const IntMatrix& m) {
    IntVector out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub(i, j) = m(rows[i], cols[j]);
                Integer d = bareiss_det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            });
        });
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

// Hodge numbers by floating-point averaging of e_p(eig) * conj(e_q(eig)).
inline std::vector<std::vector<long>> hodge_numbers_complex(
    const std::vector<std::vector<RootOfUnity>>& group_eigenvalues, std::size_t n,
    double* max_error = nullptr) {
    using C = std::complex<double>;
    const double two_pi = 2.0 * std::acos(-1.0);
    std::vector<std::vector<C>> sum(n + 1, std::vector<C>(n + 1));
    for (const auto& eig : group_eigenvalues) {
        std::vector<C> e(n + 1);
        e[0] = 1;
        for (const auto& z : eig) {
            C w = std::polar(1.0, two_pi * double(z.numerator()) / double(z.denominator()));
            for (std::size_t p = n; p >= 1; --p)
                e[p] += w * e[p - 1];
        }
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = 0; q <= n; ++q)
                sum[p][q] += e[p] * std::conj(e[q]);
    }
    std::vector<std::vector<long>> h(n + 1, std::vector<long>(n + 1));
    double err = 0;
    const double g = double(group_eigenvalues.size());
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q) {
            C v = sum[p][q] / g;
            h[p][q] = std::lround(v.real());
            err = std::max(err, std::abs(v - C(double(h[p][q]), 0)));
        }
    if (max_error)
        *max_error = err;
    return h;
}

// Does x -> M x + t have a fixed point on R^r / Z^r with denominator dividing N?
inline bool fixed_point_at_level(const hyperell::AffineAut& a, long level) {
    const std::size_t r = a.linear.rows();
    std::vector<long> x(r, 0);
    std::vector<long> m(r * r), t(r);
    for (std::size_t i = 0; i < r; ++i) {
        Rational s = a.translation[i] * level;
        if (s.get_den() != 1)
            return false;
        t[i] = s.get_num().get_si();
        for (std::size_t j = 0; j < r; ++j)
            m[i * r + j] = a.linear(i, j).get_si();
    }
    while (true) {
        bool fixed = true;
        for (std::size_t i = 0; i < r && fixed; ++i) {
            long v = t[i] - x[i];
            for (std::size_t j = 0; j < r; ++j)
                v += m[i * r + j] * x[j];
            fixed = ((v % level) + level) % level == 0;
        }
        if (fixed)
            return true;
        std::size_t i = 0;
        while (i < r && ++x[i] == level)
            x[i++] = 0;
        if (i == r)
            return false;
    }
}

}  // namespace oracle
