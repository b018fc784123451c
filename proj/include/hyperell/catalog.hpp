#pragma once

// Named constructions used as regression fixtures. Each entry carries the
// values stated with the construction ("stated") and, separately, values
// recorded from a first run of this implementation ("snapshot").

#include <optional>
#include <string>
#include <vector>

#include "hyperell/action.hpp"

namespace hyperell {

struct Expectation {
    std::optional<std::size_t> dim;
    std::optional<std::size_t> q;
    std::optional<std::size_t> group_order;
    std::optional<IntVector> group_invariants;
    std::optional<bool> cyclic;
    std::optional<IntVector> isogeny_factors;
    // Generators in product coordinates; compared as lattices.
    std::optional<std::vector<RatVector>> albanese_lattice;
    std::optional<std::vector<RatVector>> k0;  // together with Lambda_0
    std::optional<std::vector<std::string>> subgroup_h;
    std::optional<std::size_t> fiber_dim;
    std::optional<bool> fiber_abelian;
    std::optional<std::size_t> holonomy_order;
    std::optional<bool> holonomy_cyclic;
    std::optional<std::vector<std::string>> fiber_support;
    std::optional<std::vector<std::vector<long>>> hodge_rows;
    std::optional<std::size_t> canonical_order;
    std::optional<long> euler_char;
};

// Negative fixtures fail validation with a fixed point of `element`.
struct ExpectedFailure {
    std::string step;
    std::string element;
};

struct CatalogEntry {
    std::string name;
    std::string provenance;
    std::string conventions;
    BuilderSpec spec;
    Expectation stated;
    Expectation snapshot;
    std::optional<ExpectedFailure> failure;

    bool negative() const { return failure.has_value(); }
};

struct Mismatch {
    std::string field;
    std::string source;  // "stated", "snapshot" or "failure"
    std::string expected;
    std::string computed;
};

struct CatalogRun {
    std::string name;
    bool negative = false;
    std::vector<Mismatch> diff;
    bool ok() const { return diff.empty(); }
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> list_entries();
// Throws UnknownEntry.
const CatalogEntry& find_entry(const std::string& name);
CatalogRun run_entry(const std::string& name);
CatalogRun run_entry(const CatalogEntry& entry);

}  // namespace hyperell
