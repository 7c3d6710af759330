#pragma once

#include <cstdint>

#include "arks/config.hpp"
#include "arks/solver.hpp"

namespace arks {

// splitmix64: fixed 64-bit sequence so seeded initial data is reproducible
// across implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

// Builds the deterministic initial state described by the config. The cell
// density follows init.kind; the chemical fields start at their steady
// values for the realized mean density, plus the configured constant
// offsets. All fields are nonnegative.
State make_init(const RunConfig& cfg);

}  // namespace arks
