#pragma once

// Finite groups of affine automorphisms x -> M x + t of V / Lambda, written in
// a basis of Lambda, plus the checks that make A / G hyperelliptic.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperell/cyclotomic.hpp"
#include "hyperell/exactlin.hpp"
#include "hyperell/torus.hpp"

namespace hyperell {

struct AffineAut {
    std::string name;
    IntMatrix linear;
    RatVector translation;                 // reduced into [0,1)^{2n}
    std::vector<RootOfUnity> eigenvalues;  // n complex eigenvalues, aligned across the group

    // Same map (names are ignored).
    bool same_map(const AffineAut& o) const {
        return linear == o.linear && translation == o.translation;
    }
    bool operator==(const AffineAut&) const = default;
};

// a after b
AffineAut compose(const AffineAut& a, const AffineAut& b);
AffineAut identity_aut(std::size_t rank, std::size_t dim);
bool is_translation(const AffineAut& a);
bool is_identity(const AffineAut& a);

class ActionGroup {
public:
    ActionGroup() = default;

    const std::vector<AffineAut>& generators() const noexcept { return generators_; }
    const std::vector<AffineAut>& elements() const noexcept { return elements_; }
    const AffineAut& element(std::size_t i) const { return elements_.at(i); }
    const std::string& label(std::size_t i) const { return elements_.at(i).name; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const;
    std::size_t element_order(std::size_t a) const;
    bool abelian() const;
    bool cyclic() const;
    std::optional<std::size_t> find(const AffineAut& a) const;
    std::optional<std::size_t> find_label(const std::string& label) const;
    std::size_t rank() const { return elements_.front().linear.rows(); }

    bool operator==(const ActionGroup& o) const {
        return generators_ == o.generators_ && elements_ == o.elements_;
    }

private:
    friend ActionGroup close_group(const std::vector<AffineAut>&, std::size_t, std::size_t);
    std::vector<AffineAut> generators_;
    std::vector<AffineAut> elements_;  // elements_[0] is the identity
    std::vector<std::vector<std::size_t>> table_;
};

// Closure under composition with translations reduced mod Lambda; elements are
// labelled "e", "g", "g^2", "g1*g2^2", ... Throws NotClosedWithinCap.
ActionGroup close_group(const std::vector<AffineAut>& gens, std::size_t rank,
                        std::size_t cap = 1024);

struct HyperellipticDatum {
    TorusDatum torus;
    ActionGroup group;
    AlternatingForm form;
    bool validated = false;
    bool builder_mode = false;

    std::size_t dim() const noexcept { return torus.dim(); }
    bool operator==(const HyperellipticDatum&) const = default;
};

// Generator of a builder document: per factor either a root of unity or a raw
// 2x2 block, and a translation in product coordinates.
struct BuilderGenerator {
    std::string name;
    std::vector<std::variant<RootOfUnity, IntMatrix>> linear;
    RatVector translation;

    bool operator==(const BuilderGenerator&) const = default;
};

struct BuilderSpec {
    std::vector<EllipticFactor> factors;
    std::vector<RatVector> k_gens;
    std::vector<BuilderGenerator> generators;

    bool operator==(const BuilderSpec&) const = default;
};

// Builds torus, generators, closure and an invariant standard form.
// Throws InvalidAutomorphism, LatticeNotPreserved, NotClosedWithinCap.
HyperellipticDatum build_datum(const BuilderSpec& spec);

struct RawGenerator {
    std::string name;
    IntMatrix matrix;
    RatVector translation;
    std::vector<RootOfUnity> eigenvalues;
};

HyperellipticDatum make_raw_datum(TorusDatum torus, const std::vector<RawGenerator>& gens,
                                  std::optional<AlternatingForm> form);

bool has_fixed_point(const AffineAut& a);
// Some x with M x + t = x mod Lambda.
std::optional<RatVector> fixed_point_witness(const AffineAut& a);
// Every fixed component has a point whose denominator divides this bound.
Integer fixed_point_level_bound(const AffineAut& a);

struct FixedPointWitness {
    std::string element;
    RatVector point;
    bool operator==(const FixedPointWitness&) const = default;
};

struct ValidationReport {
    std::size_t group_order = 0;
    std::vector<FixedPointWitness> fixed_points;  // non-identity elements with a fixed point
    std::vector<std::string> translations;        // non-identity translations
    bool has_non_translation = false;
    bool form_antisymmetric = false;
    bool form_nondegenerate = false;
    bool form_invariant = false;
    bool eigen_consistent = false;
    std::vector<std::string> eigen_failures;
    bool faithful = false;

    bool free() const { return fixed_points.empty(); }
    bool passed() const;
    std::vector<std::string> failures() const;
};

ValidationReport validation_report(const HyperellipticDatum& d);
// Runs the checks and sets d.validated accordingly.
ValidationReport validate(HyperellipticDatum& d);

// True iff the eigenvalues together with their conjugates are exactly the roots
// of the characteristic polynomial of the linear part.
bool eigenvalues_match(const IntMatrix& linear, const std::vector<RootOfUnity>& eigenvalues);

// Indices of the translation subgroup.
std::vector<std::size_t> translation_subgroup(const ActionGroup& g);
// Enlarges Lambda by the translation subgroup and passes to G modulo translations.
HyperellipticDatum quotient_by_translations(const HyperellipticDatum& d);

}  // namespace hyperell
