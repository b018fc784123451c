#include "hyperell/torus.hpp"

#include <algorithm>
#include <deque>

namespace hyperell {

std::string to_string(EllipticFactor::Kind kind) {
    switch (kind) {
    case EllipticFactor::Kind::Generic:
        return "generic";
    case EllipticFactor::Kind::Gauss:
        return "gauss";
    case EllipticFactor::Kind::Eisenstein:
        return "eisenstein";
    }
    return "generic";
}

EllipticFactor::Kind parse_factor_kind(const std::string& text) {
    if (text == "generic")
        return EllipticFactor::Kind::Generic;
    if (text == "gauss")
        return EllipticFactor::Kind::Gauss;
    if (text == "eisenstein")
        return EllipticFactor::Kind::Eisenstein;
    throw Error("BadFactorKind", "unknown elliptic factor kind '" + text + "'", ErrorKind::Parse);
}

Integer TorusDatum::index() const {
    if (basis.rows() != basis.cols())
        return 1;
    Rational det = determinant(basis);
    Rational inv = Rational(1) / det;
    return Integer(abs(inv.get_num()));
}

RatVector TorusDatum::to_lattice(const RatVector& ambient) const {
    auto x = solve(basis, ambient);
    if (!x)
        throw Error("NotInSpan", "point is outside the torus's ambient space");
    return *x;
}

RatVector TorusDatum::to_ambient(const RatVector& lattice) const { return basis * lattice; }

IntMatrix TorusDatum::linear_to_lattice(const IntMatrix& ambient) const {
    RatMatrix m = inverse(basis) * to_rational(ambient) * basis;
    if (!is_integral(m))
        throw Error("LatticeNotPreserved", "linear part does not map the lattice to itself");
    IntMatrix mi = to_integer(m);
    Integer det = determinant(mi);
    if (det != 1 && det != -1)
        throw Error("LatticeNotPreserved", "linear part is not unimodular");
    return mi;
}

IntMatrix TorusDatum::linear_to_ambient(const IntMatrix& lattice) const {
    return to_integer(basis * to_rational(lattice) * inverse(basis));
}

bool AlternatingForm::antisymmetric() const {
    if (matrix.rows() != matrix.cols())
        return false;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j)
            if (matrix(i, j) != -matrix(j, i))
                return false;
    return true;
}

bool AlternatingForm::nondegenerate() const {
    return matrix.rows() == matrix.cols() && determinant(matrix) != 0;
}

bool AlternatingForm::invariant_under(const IntMatrix& m) const {
    RatMatrix r = to_rational(m);
    return r.transpose() * matrix * r == matrix;
}

// ---- factor automorphisms -------------------------------------------------

namespace {

// Multiplication by a primitive generator of the factor's automorphism group.
IntMatrix primitive_block(EllipticFactor::Kind kind, long order) {
    using K = EllipticFactor::Kind;
    if (order == 1)
        return IntMatrix::identity(2);
    if (order == 2)
        return {{-1, 0}, {0, -1}};
    if (kind == K::Gauss && order == 4)
        return {{0, -1}, {1, 0}};
    if (kind == K::Eisenstein && order == 3)
        return {{0, -1}, {1, -1}};
    if (kind == K::Eisenstein && order == 6)
        return {{1, -1}, {1, 0}};
    return {};
}

}  // namespace

bool factor_admits(const EllipticFactor& f, const RootOfUnity& zeta) {
    return primitive_block(f.kind, zeta.order()).rows() == 2;
}

IntMatrix factor_automorphism_matrix(const EllipticFactor& f, const RootOfUnity& zeta) {
    IntMatrix base = primitive_block(f.kind, zeta.order());
    if (base.rows() != 2)
        throw Error("InvalidAutomorphism", "root " + zeta.to_string() + " does not act on " +
                                               to_string(f.kind) + " factor '" + f.label + "'");
    return matrix_power(base, static_cast<unsigned long>(zeta.numerator()));
}

RootOfUnity factor_root_of_block(const EllipticFactor& f, const IntMatrix& block) {
    if (block.rows() != 2 || block.cols() != 2)
        throw Error("InvalidAutomorphism", "factor block must be 2x2");
    for (long n : {1L, 2L, 3L, 4L, 6L})
        for (long k = 0; k < n; ++k) {
            RootOfUnity z(k, n);
            if (z.order() != n || !factor_admits(f, z))
                continue;
            if (factor_automorphism_matrix(f, z) == block)
                return z;
        }
    throw Error("InvalidAutomorphism",
                "block is not multiplication by a root of unity on factor '" + f.label + "'");
}

// ---- builders ---------------------------------------------------------------

TorusDatum build_product_torus(const std::vector<EllipticFactor>& factors,
                               const std::vector<RatVector>& k_gens) {
    const std::size_t ambient = 2 * factors.size();
    if (ambient == 0)
        throw Error("EmptyTorus", "a torus needs at least one factor");
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < ambient; ++i) {
        RatVector e(ambient);
        e[i] = 1;
        gens.push_back(e);
    }
    for (const auto& k : k_gens) {
        if (k.size() != ambient)
            throw Error("DimensionMismatch", "quotient generator has " + std::to_string(k.size()) +
                                                 " coordinates, expected " +
                                                 std::to_string(ambient));
        gens.push_back(k);
    }
    RationalLattice lattice = RationalLattice::generated_by(gens, ambient);
    TorusDatum t;
    t.rank = ambient;
    t.basis = lattice.basis();
    t.factors = factors;
    t.quotient_gens = k_gens;
    return t;
}

TorusDatum raw_torus(std::size_t rank, std::optional<RatMatrix> basis,
                     std::vector<EllipticFactor> factors) {
    if (rank == 0 || rank % 2 != 0)
        throw Error("OddRank", "lattice rank must be positive and even");
    TorusDatum t;
    t.rank = rank;
    t.basis = basis ? *basis : RatMatrix::identity(rank);
    if (t.basis.cols() != rank || t.basis.rows() != rank)
        throw Error("DimensionMismatch", "lattice basis must be square of size rank");
    if (determinant(t.basis) == 0)
        throw Error("DependentBasis", "lattice basis is singular");
    if (!factors.empty() && 2 * factors.size() != rank)
        throw Error("DimensionMismatch", "factor count does not match the rank");
    t.factors = std::move(factors);
    return t;
}

AlternatingForm standard_form(const TorusDatum& t) {
    if (!t.has_provenance())
        throw Error("NoProvenance", "raw lattices must supply an alternating form");
    RatMatrix e(t.ambient_rank(), t.ambient_rank());
    for (std::size_t f = 0; f < t.factors.size(); ++f) {
        e(2 * f, 2 * f + 1) = 1;
        e(2 * f + 1, 2 * f) = -1;
    }
    return {t.basis.transpose() * e * t.basis};
}

std::vector<IntMatrix> close_linear_group(const std::vector<IntMatrix>& mats, std::size_t dim,
                                          std::size_t cap) {
    std::vector<IntMatrix> elements{IntMatrix::identity(dim)};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& m : mats) {
            IntMatrix p = elements[i] * m;
            if (std::find(elements.begin(), elements.end(), p) != elements.end())
                continue;
            if (elements.size() >= cap)
                throw Error("NotClosedWithinCap",
                            "linear group exceeds " + std::to_string(cap) + " elements");
            elements.push_back(std::move(p));
            queue.push_back(elements.size() - 1);
        }
    }
    return elements;
}

AlternatingForm average_form(const AlternatingForm& form, const std::vector<IntMatrix>& mats) {
    const std::size_t n = form.matrix.rows();
    RatMatrix sum(n, n);
    for (const auto& g : close_linear_group(mats, n)) {
        RatMatrix r = to_rational(g);
        RatMatrix term = r.transpose() * form.matrix * r;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sum(i, j) += term(i, j);
    }
    AlternatingForm out{sum};
    if (!out.nondegenerate())
        throw Error("Degenerate", "averaged alternating form is singular");
    return out;
}

}  // namespace hyperell
