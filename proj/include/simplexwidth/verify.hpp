#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simplexwidth {

inline constexpr int kMaxVerifyDimension = 64;
inline constexpr int kMaxVerifyOptimizerDimension = 12;
inline constexpr int kMaxVerifyEnumerationDimension = 11;
inline constexpr int kMaxVerifyRadiiDimension = 32;

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct EnergyFuzzSummary {
    int instances;
    int violations;
};

/// Draws `instances` random (v, i, new_value) triples that satisfy the
/// push-away-from-the-mean hypothesis and counts how often the energy fails
/// to strictly increase. Dimension is uniform on [2, 50], coordinates
/// uniform on [-10, 10].
EnergyFuzzSummary fuzz_energy_claim(int instances, std::uint64_t seed);

/// Runs every self-check for dimensions up to max_n (exact checks up to
/// max_n, optimizer checks up to min(max_n, 12)). Requires 1 <= max_n <= 64.
std::vector<CheckResult> run_verification(int max_n, std::uint64_t seed);

}  // namespace simplexwidth
