#pragma once

// Brute-force cross-checks on the finite G-set (1/N) Lambda / Lambda.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperell/action.hpp"
#include "hyperell/albanese.hpp"

namespace hyperell {

class TorsionModel {
public:
    // Throws BadLevel (N t not integral) and CapExceeded (N^rank > cap).
    TorsionModel(const HyperellipticDatum& d, long level, std::uint64_t cap = 10'000'000);

    long level() const noexcept { return level_; }
    std::size_t rank() const noexcept { return rank_; }
    std::uint64_t size() const noexcept { return size_; }
    std::size_t group_order() const noexcept { return mats_.size(); }

    std::uint64_t apply(std::size_t element, std::uint64_t point) const;
    void decode(std::uint64_t point, std::vector<std::int64_t>& coords) const;
    std::uint64_t encode(const std::vector<std::int64_t>& coords) const;
    RatVector point(std::uint64_t index) const;

private:
    long level_;
    std::size_t rank_;
    std::uint64_t size_;
    std::vector<std::vector<std::int64_t>> mats_;    // row-major, reduced mod N
    std::vector<std::vector<std::int64_t>> shifts_;  // N t mod N
};

TorsionModel build_model(const HyperellipticDatum& d, long level, std::uint64_t cap = 10'000'000);

std::uint64_t oracle_fixed_points(const TorsionModel& model, std::size_t element);

struct LevelChoice {
    long level = 1;
    long nominal_level = 1;  // lcm(denominators) * lcm(element orders)
    bool nominal = false;    // the nominal level (or a multiple) was used
    bool exhaustive = false; // every fixed component has a point at this level
    std::string note;
};

LevelChoice choose_level(const HyperellipticDatum& d, std::uint64_t cap = 10'000'000);

struct FixedPointCheck {
    std::string element;
    std::uint64_t oracle_count = 0;
    bool exact_has_fixed_point = false;
    bool agree = false;
};

struct FiberCountVerdict {
    bool pass = false;
    std::uint64_t points = 0;
    std::uint64_t orbits = 0;
    std::uint64_t base_points = 0;  // points over the base point, F0
    std::size_t h_order = 0;
    std::uint64_t expected_orbits_per_fiber = 0;
    std::uint64_t fibers = 0;
    std::optional<RatVector> witness;  // point in a fiber with the wrong orbit count
    std::uint64_t witness_orbits = 0;
    std::string message;
};

FiberCountVerdict oracle_fiber_count(const TorsionModel& model, const AlbaneseReport& report);

struct OracleReport {
    LevelChoice level;
    std::vector<FixedPointCheck> fixed_points;
    std::optional<FiberCountVerdict> fiber;  // only for validated data
    bool pass() const;
};

// Uses choose_level unless a level is given.
OracleReport run_oracle(const HyperellipticDatum& d, std::optional<long> level = std::nullopt);

}  // namespace hyperell
