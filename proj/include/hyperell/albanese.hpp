#pragma once

// Albanese variety and Albanese fiber of X = A / G.
//
// Lambda_0 is the fixed lattice of the linear parts, Lambda_1 its complement
// cut out by the invariant form, K = Lambda / (Lambda_0 + Lambda_1) with its
// projections K_0, K_1. Alb(X) = (A_0 / K_0) / G and the fiber over the image
// of 0 is A_1 / H with H = { g : t_g^(0) in K_0 }.

#include <string>
#include <utility>
#include <vector>

#include "hyperell/action.hpp"
#include "hyperell/exactlin.hpp"

namespace hyperell {

struct Decomposition {
    Sublattice lambda0;
    Sublattice lambda1;
    RatMatrix projection;  // inverse of [B0 | B1]
    FiniteAbelianGroup k;  // lattice coordinates modulo Lambda_0 + Lambda_1
    FiniteAbelianGroup k0; // Lambda_0 coordinates modulo Z^{r0}, paired with k
    FiniteAbelianGroup k1; // Lambda_1 coordinates modulo Z^{r1}, paired with k

    std::size_t r0() const { return lambda0.rank(); }
    std::size_t r1() const { return lambda1.rank(); }
    RatVector c0(const RatVector& v) const;
    RatVector c1(const RatVector& v) const;
};

struct CocycleTable {
    std::vector<RatVector> t0;  // per group element, Lambda_0 coordinates
    std::vector<RatVector> t1;  // per group element, Lambda_1 coordinates
};

struct FiberClass {
    bool abelian_variety = true;
    std::size_t holonomy_order = 1;
    bool cyclic = true;
    bool abelian_group = true;
    IntVector invariant_factors;              // when the holonomy group is abelian
    std::vector<std::size_t> generator_orders;

    bool operator==(const FiberClass&) const = default;
};

struct CocycleEntry {
    std::string element;
    RatVector t0;
    RatVector t1;
    bool operator==(const CocycleEntry&) const = default;
};

struct FiberGenerator {
    std::string name;    // name in the fiber datum
    std::string parent;  // label of the element of G it comes from
    bool operator==(const FiberGenerator&) const = default;
};

struct AlbaneseReport {
    std::size_t dim = 0;
    std::size_t q = 0;
    std::size_t group_order = 0;
    IntMatrix lambda0;
    IntMatrix lambda1;
    FiniteAbelianGroup k;
    FiniteAbelianGroup k0;
    FiniteAbelianGroup k1;
    std::vector<CocycleEntry> cocycle;
    RatMatrix albanese_lattice;  // Lambda_0 coordinates
    IntVector albanese_isogeny_factors;
    std::vector<std::string> subgroup_h;
    std::size_t fiber_dim = 0;
    HyperellipticDatum fiber;
    std::vector<FiberGenerator> fiber_generators;
    FiberClass fiber_class;
    std::vector<std::string> fiber_support;  // factor labels spanning V_1
    std::string j_stability;                 // "verified" or "assumed"
    std::string basepoint = "a0 = 0";
    std::vector<AlbaneseReport> fiber_report;  // empty or one nested report

    bool operator==(const AlbaneseReport&) const = default;
};

// Throws OddRank.
Sublattice compute_A0(const HyperellipticDatum& d);
// Throws DegenerateRestriction.
Sublattice compute_A1(const HyperellipticDatum& d, const Sublattice& lambda0);
Decomposition compute_K(const HyperellipticDatum& d, const Sublattice& lambda0,
                        const Sublattice& lambda1);
Decomposition decompose(const HyperellipticDatum& d);
CocycleTable decompose_cocycle(const HyperellipticDatum& d, const Decomposition& dec);
// Element indices of H; throws NotASubgroup.
std::vector<std::size_t> compute_H(const HyperellipticDatum& d, const Decomposition& dec,
                                   const CocycleTable& table);
std::pair<RationalLattice, IntVector> compute_albanese(const HyperellipticDatum& d,
                                                       const Decomposition& dec,
                                                       const CocycleTable& table);

struct FiberResult {
    HyperellipticDatum datum;  // normalized, validated unless the group is trivial
    std::vector<FiberGenerator> generators;
    std::vector<std::string> support;
    bool aligned = false;  // V_1 is a span of factor blocks
};
FiberResult compute_fiber(const HyperellipticDatum& d, const Decomposition& dec,
                          const CocycleTable& table, const std::vector<std::size_t>& h);
FiberClass classify_fiber(const HyperellipticDatum& fiber);
// Invariant factors of a finite abelian group given by its multiplication table.
IntVector abelian_invariants(const ActionGroup& g);

// Throws NotValidated unless d.validated.
AlbaneseReport run_pipeline(const HyperellipticDatum& d, bool recurse = false);

// Albanese lattice written in product coordinates (ambient x q*2).
RatMatrix albanese_in_ambient(const HyperellipticDatum& d, const AlbaneseReport& r);

}  // namespace hyperell
