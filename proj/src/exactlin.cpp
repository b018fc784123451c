#include "hyperell/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace hyperell {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_of(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

Integer lcm_of_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v)
        l = lcm(l, Integer(x.get_den()));
    return l;
}

Integer lcm_of_denominators(const RatMatrix& m) {
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = lcm(l, Integer(m(i, j).get_den()));
    return l;
}

RatVector reduce_mod_one(const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = frac(v[i]);
    return r;
}

bool is_integral(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool is_integral(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1)
                return false;
    return true;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

RatVector to_rational(const IntVector& v) {
    RatVector r;
    r.reserve(v.size());
    for (const auto& x : v)
        r.emplace_back(x);
    return r;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw Error("NotIntegral", "matrix entry " + to_string(m(i, j)));
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntVector to_integer(const RatVector& v) {
    IntVector r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1)
            throw Error("NotIntegral", "vector entry " + to_string(x));
        r.push_back(x.get_num());
    }
    return r;
}

RatVector operator*(const IntMatrix& a, const RatVector& v) {
    if (a.cols() != v.size())
        throw Error("DimensionMismatch", "matrix-vector product", ErrorKind::Internal);
    RatVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                r[i] += Rational(a(i, k)) * v[k];
    return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size())
        throw Error("DimensionMismatch", "vector sum", ErrorKind::Internal);
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size())
        throw Error("DimensionMismatch", "vector difference", ErrorKind::Internal);
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

template <typename T>
static Matrix<T> hstack_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows())
        throw Error("DimensionMismatch", "hstack", ErrorKind::Internal);
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) { return hstack_impl(a, b); }
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) { return hstack_impl(a, b); }

IntMatrix matrix_power(const IntMatrix& m, unsigned long e) {
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1UL)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

// ---- rational Gaussian elimination ------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a).size();
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("DimensionMismatch", "determinant of non-square matrix", ErrorKind::Internal);
    RatMatrix a = m;
    Rational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) { return determinant(to_rational(m)).get_num(); }

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw Error("DimensionMismatch", "inverse of non-square matrix", ErrorKind::Internal);
    RatMatrix aug = hstack(m, RatMatrix::identity(n));
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error("Singular", "matrix is not invertible");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (m.rows() != b.size())
        throw Error("DimensionMismatch", "solve", ErrorKind::Internal);
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, m.cols());
    return x;
}

IntVector characteristic_polynomial(const IntMatrix& m) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw Error("DimensionMismatch", "characteristic polynomial", ErrorKind::Internal);
    RatMatrix a = to_rational(m);
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next = a * mk;
        for (std::size_t i = 0; i < n; ++i)
            next(i, i) += c[n - k + 1];
        mk = std::move(next);
        RatMatrix am = a * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    IntVector out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (c[i].get_den() != 1)
            internal_error("NotIntegral", "characteristic polynomial coefficient");
        out[i] = c[i].get_num();
    }
    return out;
}

// ---- normal forms -----------------------------------------------------------

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < a.rows(); ++r)
        std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void row_axpy(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0)
        return;
    for (std::size_t c = 0; c < a.cols(); ++c)
        a(i, c) -= q * a(j, c);
}

void col_axpy(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0)
        return;
    for (std::size_t r = 0; r < a.rows(); ++r)
        a(r, i) -= q * a(r, j);
}

void negate_row(IntMatrix& a, std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c)
        a(i, c) = -a(i, c);
}

// [row_r; row_i] <- [[x, y], [-b/g, a/g]] [row_r; row_i]
void combine_rows(IntMatrix& a, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                  const Integer& bg, const Integer& ag) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
        Integer vr = a(r, c);
        Integer vi = a(i, c);
        a(r, c) = x * vr + y * vi;
        a(i, c) = ag * vi - bg * vr;
    }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0)
                continue;
            Integer a = h(r, c), b = h(i, c), g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer bg = b / g, ag = a / g;
            combine_rows(h, r, i, x, y, bg, ag);
            combine_rows(u, r, i, x, y, bg, ag);
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(h(i, c), h(r, c));
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // bring the smallest nonzero entry of the trailing block to (t, t)
            std::size_t pi = s.rows(), pj = s.cols();
            for (std::size_t i = t; i < s.rows(); ++i)
                for (std::size_t j = t; j < s.cols(); ++j)
                    if (s(i, j) != 0 && (pi == s.rows() || abs(s(i, j)) < abs(s(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == s.rows())
                goto done;
            swap_rows(s, t, pi);
            swap_rows(u, t, pi);
            swap_cols(s, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                Integer q = s(i, t) / s(t, t);  // truncating
                row_axpy(s, i, t, q);
                row_axpy(u, i, t, q);
                if (s(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                Integer q = s(t, j) / s(t, t);
                col_axpy(s, j, t, q);
                col_axpy(v, j, t, q);
                if (s(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            std::size_t bad = s.rows();
            for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == s.rows())
                break;
            row_axpy(s, t, bad, Integer(-1));
            row_axpy(u, t, bad, Integer(-1));
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
done:
    return {std::move(u), std::move(s), std::move(v)};
}

// ---- sublattices ----------------------------------------------------------

Sublattice::Sublattice(const IntMatrix& generators) {
    const std::size_t n = generators.rows();
    HermiteResult hr = hermite_normal_form(generators.transpose());
    std::size_t r = 0;
    while (r < hr.h.rows()) {
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j)
            if (hr.h(r, j) != 0) {
                nonzero = true;
                break;
            }
        if (!nonzero)
            break;
        ++r;
    }
    basis_ = IntMatrix(n, r);
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t p = 0;
        while (hr.h(k, p) == 0)
            ++p;
        pivots_.push_back(p);
        for (std::size_t j = 0; j < n; ++j)
            basis_(j, k) = hr.h(k, j);
    }
    SmithResult sr = smith_normal_form(basis_);
    saturated_ = true;
    for (std::size_t k = 0; k < r; ++k)
        if (sr.s(k, k) != 1)
            saturated_ = false;
}

Sublattice Sublattice::full(std::size_t n) { return Sublattice(IntMatrix::identity(n)); }

Sublattice Sublattice::zero(std::size_t n) { return Sublattice(IntMatrix(n, 0)); }

std::optional<IntVector> Sublattice::coordinates(const RatVector& p) const {
    if (p.size() != ambient_rank())
        throw Error("DimensionMismatch", "point has wrong length for sublattice");
    // Basis column k vanishes above its pivot row, so solve forward.
    RatVector rest = p;
    IntVector coeffs(rank());
    for (std::size_t k = 0; k < rank(); ++k) {
        Rational c = rest[pivots_[k]] / Rational(basis_(pivots_[k], k));
        if (c.get_den() != 1)
            return std::nullopt;
        coeffs[k] = c.get_num();
        for (std::size_t j = 0; j < ambient_rank(); ++j)
            rest[j] -= c * Rational(basis_(j, k));
    }
    if (!is_zero(rest))
        return std::nullopt;
    return coeffs;
}

RatVector Sublattice::reduce(const RatVector& p) const {
    if (rank() != ambient_rank())
        throw Error("NotFullRank", "reduction needs a full-rank lattice", ErrorKind::Internal);
    RatVector r = p;
    for (std::size_t k = 0; k < rank(); ++k) {
        Integer q = floor_of(r[k] / Rational(basis_(k, k)));
        if (q == 0)
            continue;
        for (std::size_t j = k; j < ambient_rank(); ++j)
            r[j] -= Rational(q) * Rational(basis_(j, k));
    }
    return r;
}

RationalLattice RationalLattice::generated_by(const std::vector<RatVector>& generators,
                                              std::size_t dim) {
    RationalLattice l;
    l.denominator_ = 1;
    for (const auto& g : generators) {
        if (g.size() != dim)
            throw Error("DimensionMismatch", "lattice generator length");
        l.denominator_ = lcm(l.denominator_, lcm_of_denominators(g));
    }
    IntMatrix gens(dim, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            Rational x = generators[j][i] * Rational(l.denominator_);
            gens(i, j) = x.get_num();
        }
    l.scaled_ = Sublattice(gens);
    // shrink the denominator to the smallest one that still works
    Integer g = 0;
    for (std::size_t i = 0; i < l.scaled_.basis().rows(); ++i)
        for (std::size_t j = 0; j < l.scaled_.basis().cols(); ++j)
            g = gcd(g, l.scaled_.basis()(i, j));
    g = gcd(g, l.denominator_);
    if (g > 1) {
        IntMatrix b = l.scaled_.basis();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                b(i, j) /= g;
        l.scaled_ = Sublattice(b);
        l.denominator_ /= g;
    }
    return l;
}

RationalLattice RationalLattice::from_basis(const RatMatrix& basis) {
    std::vector<RatVector> cols;
    for (std::size_t j = 0; j < basis.cols(); ++j)
        cols.push_back(basis.column(j));
    RationalLattice l = generated_by(cols, basis.rows());
    if (l.rank() != basis.cols())
        throw Error("DependentBasis", "lattice basis columns are dependent");
    return l;
}

RatMatrix RationalLattice::basis() const {
    RatMatrix b = to_rational(scaled_.basis());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            b(i, j) /= Rational(denominator_);
    return b;
}

bool RationalLattice::contains(const RatVector& p) const {
    return scaled_.contains(Rational(denominator_) * p);
}

RatVector RationalLattice::reduce(const RatVector& p) const {
    RatVector r = scaled_.reduce(Rational(denominator_) * p);
    return Rational(1, 1) / Rational(denominator_) * r;
}

Sublattice saturate(const Sublattice& s) {
    if (s.saturated())
        return s;
    SmithResult sr = smith_normal_form(s.basis());
    // s = u^-1 diag v^-1, so the first r columns of u^-1 span the saturation
    RatMatrix uinv = inverse(to_rational(sr.u));
    IntMatrix cols(s.ambient_rank(), s.rank());
    for (std::size_t i = 0; i < s.ambient_rank(); ++i)
        for (std::size_t j = 0; j < s.rank(); ++j)
            cols(i, j) = uinv(i, j).get_num();
    return Sublattice(cols);
}

Sublattice kernel_lattice(const IntMatrix& m) {
    const std::size_t n = m.cols();
    HermiteResult hr = hermite_normal_form(m.transpose());
    std::vector<IntVector> kernel;
    for (std::size_t r = 0; r < hr.h.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < hr.h.cols(); ++c)
            if (hr.h(r, c) != 0) {
                zero = false;
                break;
            }
        if (zero)
            kernel.push_back(hr.u.row(r));
    }
    return Sublattice(IntMatrix::from_columns(n, kernel));
}

// ---- finite abelian groups --------------------------------------------------

Integer FiniteAbelianGroup::order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors)
        o *= d;
    return o;
}

FiniteAbelianGroup quotient_group(const Sublattice& big, const Sublattice& small) {
    if (big.ambient_rank() != small.ambient_rank())
        throw Error("DimensionMismatch", "lattices live in different spaces");
    if (big.rank() != small.rank())
        throw Error("RankMismatch", "quotient of lattices of different rank is not finite");
    const std::size_t r = big.rank();
    IntMatrix c(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        auto coords = big.coordinates(to_rational(small.basis().column(j)));
        if (!coords)
            throw Error("NotSublattice", "small lattice is not contained in big lattice");
        for (std::size_t i = 0; i < r; ++i)
            c(i, j) = (*coords)[i];
    }
    SmithResult sr = smith_normal_form(c);
    RatMatrix newbasis = to_rational(big.basis()) * inverse(to_rational(sr.u));
    FiniteAbelianGroup g;
    const bool full = small.rank() == small.ambient_rank();
    for (std::size_t i = 0; i < r; ++i) {
        if (sr.s(i, i) <= 1)
            continue;
        g.invariant_factors.push_back(sr.s(i, i));
        RatVector gen = newbasis.column(i);
        g.generators.push_back(full ? small.reduce(gen) : gen);
    }
    return g;
}

FiniteAbelianGroup torsion_subgroup(const std::vector<RatVector>& generators, std::size_t dim) {
    std::vector<RatVector> all = generators;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVector e(dim);
        e[i] = 1;
        all.push_back(e);
    }
    RationalLattice big = RationalLattice::generated_by(all, dim);
    const Integer& d = big.denominator();
    RatMatrix b = big.basis();
    IntMatrix scaled(dim, b.cols());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            scaled(i, j) = Rational(b(i, j) * d).get_num();
    IntMatrix dI(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        dI(i, i) = d;
    FiniteAbelianGroup g = quotient_group(Sublattice(scaled), Sublattice(dI));
    for (auto& gen : g.generators)
        gen = reduce_mod_one(Rational(1, d) * gen);
    return g;
}

bool coset_meets_lattice(const Sublattice& w, const RatVector& t) {
    if (t.size() != w.ambient_rank())
        throw Error("DimensionMismatch", "coset point has wrong length");
    Sublattice s = saturate(w);
    if (s.rank() == 0)
        return is_integral(t);
    // u s v = [I_r; 0] since s is saturated: t + s y integral iff (u t)_i integral for i >= r
    SmithResult sr = smith_normal_form(s.basis());
    RatVector ut = sr.u * t;
    for (std::size_t i = s.rank(); i < ut.size(); ++i)
        if (ut[i].get_den() != 1)
            return false;
    return true;
}

bool member_of_finite_group(const FiniteAbelianGroup& g, const Sublattice& ref, const RatVector& p) {
    if (p.size() != ref.ambient_rank())
        throw Error("DimensionMismatch", "point has wrong length for the reference lattice");
    std::vector<RatVector> gens;
    for (std::size_t j = 0; j < ref.rank(); ++j)
        gens.push_back(to_rational(ref.basis().column(j)));
    for (const auto& x : g.generators)
        gens.push_back(x);
    return RationalLattice::generated_by(gens, ref.ambient_rank()).contains(p);
}

std::optional<IntVector> group_coefficients(const FiniteAbelianGroup& g, const Sublattice& ref,
                                            const RatVector& p) {
    if (p.size() != ref.ambient_rank())
        throw Error("DimensionMismatch", "point has wrong length for the reference lattice");
    const std::size_t k = g.invariant_factors.size();
    IntVector a(k);
    for (;;) {
        RatVector q = p;
        for (std::size_t i = 0; i < k; ++i)
            q = q - Rational(a[i]) * g.generators[i];
        if (ref.contains(q))
            return a;
        std::size_t i = 0;
        while (i < k) {
            a[i] += 1;
            if (a[i] < g.invariant_factors[i])
                break;
            a[i] = 0;
            ++i;
        }
        if (i == k)
            return std::nullopt;
    }
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace hyperell
