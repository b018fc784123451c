#pragma once

// Abelian varieties V / Lambda presented by rational lattice data. Internally
// every datum works in a basis of Lambda itself (so Lambda = Z^{2n}); `basis`
// records how those coordinates sit inside the product coordinates of
// E_1 x ... x E_n, where each factor contributes the pair (1, tau).

#include <optional>
#include <string>
#include <vector>

#include "hyperell/cyclotomic.hpp"
#include "hyperell/exactlin.hpp"

namespace hyperell {

struct EllipticFactor {
    enum class Kind { Generic, Gauss, Eisenstein };
    Kind kind = Kind::Generic;
    std::string label;

    bool operator==(const EllipticFactor&) const = default;
};

std::string to_string(EllipticFactor::Kind kind);
EllipticFactor::Kind parse_factor_kind(const std::string& text);

struct TorusDatum {
    std::size_t rank = 0;                 // 2n
    RatMatrix basis;                      // ambient x rank; columns span Lambda
    std::vector<EllipticFactor> factors;  // empty in raw mode
    std::vector<RatVector> quotient_gens; // ambient lifts of the K generators

    std::size_t dim() const noexcept { return rank / 2; }
    std::size_t ambient_rank() const noexcept { return basis.rows(); }
    bool has_provenance() const noexcept { return !factors.empty(); }
    // [Lambda : Z^{2n}] for product presentations.
    Integer index() const;

    RatVector to_lattice(const RatVector& ambient) const;
    RatVector to_ambient(const RatVector& lattice) const;
    // B^-1 M B; throws LatticeNotPreserved unless it is integral and unimodular.
    IntMatrix linear_to_lattice(const IntMatrix& ambient) const;
    IntMatrix linear_to_ambient(const IntMatrix& lattice) const;

    bool operator==(const TorusDatum&) const = default;
};

struct AlternatingForm {
    RatMatrix matrix;

    bool antisymmetric() const;
    bool nondegenerate() const;
    bool invariant_under(const IntMatrix& m) const;

    bool operator==(const AlternatingForm&) const = default;
};

// Roots of unity that act on the factor: +-1 always, i for gauss, sixth roots for eisenstein.
bool factor_admits(const EllipticFactor& f, const RootOfUnity& zeta);
// Multiplication by zeta on the basis (1, tau); throws InvalidAutomorphism.
IntMatrix factor_automorphism_matrix(const EllipticFactor& f, const RootOfUnity& zeta);
// Inverse lookup for a raw 2x2 block; throws InvalidAutomorphism.
RootOfUnity factor_root_of_block(const EllipticFactor& f, const IntMatrix& block);

TorusDatum build_product_torus(const std::vector<EllipticFactor>& factors,
                               const std::vector<RatVector>& k_gens);
// Raw lattice of the given rank; basis defaults to the identity.
TorusDatum raw_torus(std::size_t rank, std::optional<RatMatrix> basis = std::nullopt,
                     std::vector<EllipticFactor> factors = {});

// Block-diagonal ad - bc per factor, pulled back to lattice coordinates; throws NoProvenance.
AlternatingForm standard_form(const TorusDatum& t);
// Sum of M^T E M over the group generated by mats; throws Degenerate.
AlternatingForm average_form(const AlternatingForm& form, const std::vector<IntMatrix>& mats);
// All products of the generators; throws NotClosedWithinCap.
std::vector<IntMatrix> close_linear_group(const std::vector<IntMatrix>& mats, std::size_t dim,
                                          std::size_t cap = 1024);

}  // namespace hyperell
