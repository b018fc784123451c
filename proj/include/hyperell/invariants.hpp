#pragma once

// Numerical invariants of A / G from the eigenvalues of the complex
// representation: h^{p,q} is the multiplicity of the trivial character in
// Lambda^p V* (x) Lambda^q conj(V*), averaged exactly in Q(zeta_N).

#include <string>
#include <vector>

#include "hyperell/action.hpp"
#include "hyperell/albanese.hpp"

namespace hyperell {

struct HodgeDiamond {
    std::size_t n = 0;
    std::vector<std::vector<Integer>> h;  // h[p][q]

    // Row k lists h^{p,k-p} for p from min(k,n) down to max(0,k-n).
    std::vector<std::vector<Integer>> rows() const;
    bool operator==(const HodgeDiamond&) const = default;
};

struct InvariantsReport {
    std::size_t dim = 0;
    std::size_t q = 0;
    HodgeDiamond diamond;
    std::size_t canonical_order = 1;
    Integer euler_char_O = 0;
    std::size_t group_order = 1;
    bool cyclic = true;

    bool operator==(const InvariantsReport&) const = default;
};

struct PullbackDiagnostic {
    std::size_t x_order = 1;
    std::size_t fiber_order = 1;
    bool divides = true;
    bool pulled_back = true;  // omega_X is pulled back from Alb(X)

    bool operator==(const PullbackDiagnostic&) const = default;
};

// lcm of the orders of all eigenvalues.
long character_conductor(const HyperellipticDatum& d);
// Throws Inconsistent when the character average disagrees with the fixed lattice.
std::size_t irregularity(const HyperellipticDatum& d);
HodgeDiamond hodge_diamond(const HyperellipticDatum& d);
std::size_t canonical_order(const HyperellipticDatum& d);
InvariantsReport compute_invariants(const HyperellipticDatum& d);
// Throws DivisibilityViolation.
PullbackDiagnostic canonical_report(const AlbaneseReport& report, const InvariantsReport& inv_x,
                                    const InvariantsReport& inv_f);

std::string format_diamond(const HodgeDiamond& d);

}  // namespace hyperell
