#pragma once

// Exact integer and rational linear algebra over GMP: Hermite and Smith
// normal forms, sublattices of Z^n, finite abelian quotient groups and
// lattice-coset membership. Nothing in here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hyperell/errors.hpp"

namespace hyperell {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw Error("DimensionMismatch", "ragged matrix initializer", ErrorKind::Internal);
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw Error("DimensionMismatch", "column length", ErrorKind::Internal);
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }
    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---- elementary helpers ---------------------------------------------------

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& r);
Rational frac(const Rational& r);
Integer lcm_of_denominators(const RatVector& v);
Integer lcm_of_denominators(const RatMatrix& m);
RatVector reduce_mod_one(const RatVector& v);
bool is_integral(const RatVector& v);
bool is_integral(const RatMatrix& m);
bool is_zero(const RatVector& v);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
// Throws NotIntegral if some entry has a denominator.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw Error("DimensionMismatch", "matrix product", ErrorKind::Internal);
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size())
        throw Error("DimensionMismatch", "matrix-vector product", ErrorKind::Internal);
    std::vector<T> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            r[i] += a(i, k) * v[k];
    return r;
}

RatVector operator*(const IntMatrix& a, const RatVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
IntMatrix matrix_power(const IntMatrix& m, unsigned long e);

// ---- rational linear algebra ---------------------------------------------

std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws Singular
// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);
// Characteristic polynomial det(xI - m), coefficients from x^0 upward.
IntVector characteristic_polynomial(const IntMatrix& m);

// ---- normal forms ---------------------------------------------------------

struct HermiteResult {
    IntMatrix h;  // row echelon, positive pivots, entries above each pivot in [0, pivot)
    IntMatrix u;  // unimodular, u * m == h
};
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
    IntMatrix u;  // unimodular, u * m * v == s
    IntMatrix s;  // diagonal, nonnegative, s(i,i) | s(i+1,i+1)
    IntMatrix v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// ---- sublattices ----------------------------------------------------------

// A sublattice of Z^ambient given by a canonical (column Hermite) basis.
class Sublattice {
public:
    Sublattice() = default;
    // Columns of `generators` may be dependent; the stored basis is canonical.
    explicit Sublattice(const IntMatrix& generators);

    static Sublattice full(std::size_t n);
    static Sublattice zero(std::size_t n);

    std::size_t ambient_rank() const noexcept { return basis_.rows(); }
    std::size_t rank() const noexcept { return basis_.cols(); }
    const IntMatrix& basis() const noexcept { return basis_; }
    bool saturated() const noexcept { return saturated_; }

    // Integer coordinates in the basis, when p lies in the lattice.
    std::optional<IntVector> coordinates(const RatVector& p) const;
    bool contains(const RatVector& p) const { return coordinates(p).has_value(); }
    // Canonical representative of p modulo the lattice (full rank only).
    RatVector reduce(const RatVector& p) const;

    bool operator==(const Sublattice& o) const { return basis_ == o.basis_; }

private:
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
    bool saturated_ = true;
};

// A finitely generated Z-submodule of Q^n, stored as (1/denominator) * integer lattice.
class RationalLattice {
public:
    RationalLattice() = default;
    static RationalLattice generated_by(const std::vector<RatVector>& generators, std::size_t dim);
    static RationalLattice from_basis(const RatMatrix& basis);

    std::size_t dim() const noexcept { return scaled_.ambient_rank(); }
    std::size_t rank() const noexcept { return scaled_.rank(); }
    RatMatrix basis() const;
    const Integer& denominator() const noexcept { return denominator_; }
    bool contains(const RatVector& p) const;
    RatVector reduce(const RatVector& p) const;

    bool operator==(const RationalLattice& o) const {
        return denominator_ == o.denominator_ && scaled_ == o.scaled_;
    }

private:
    Integer denominator_ = 1;
    Sublattice scaled_;
};

Sublattice saturate(const Sublattice& s);
// {v in Z^cols : m v = 0}, saturated.
Sublattice kernel_lattice(const IntMatrix& m);

// ---- finite abelian groups ------------------------------------------------

struct FiniteAbelianGroup {
    IntVector invariant_factors;      // d1 | d2 | ..., each > 1
    std::vector<RatVector> generators;  // coset representatives, one per factor

    Integer order() const;
    bool trivial() const { return invariant_factors.empty(); }
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// big / small for sublattices of equal rank with small contained in big.
FiniteAbelianGroup quotient_group(const Sublattice& big, const Sublattice& small);
// (Z^dim + sum Z*g) / Z^dim for rational generators g.
FiniteAbelianGroup torsion_subgroup(const std::vector<RatVector>& generators, std::size_t dim);

// True iff (t + span_Q(w)) meets Z^n.
bool coset_meets_lattice(const Sublattice& w, const RatVector& t);

// True iff p modulo ref equals an element of g (g's generators taken modulo ref).
bool member_of_finite_group(const FiniteAbelianGroup& g, const Sublattice& ref, const RatVector& p);
// Coefficients a with p - sum a_i gen_i in ref, 0 <= a_i < d_i, by enumeration.
std::optional<IntVector> group_coefficients(const FiniteAbelianGroup& g, const Sublattice& ref,
                                            const RatVector& p);

std::string to_string(const Rational& r);
std::string to_string(const RatVector& v);

}  // namespace hyperell
