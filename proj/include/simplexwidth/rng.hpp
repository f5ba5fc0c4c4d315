#pragma once

#include <cstdint>
#include <limits>

namespace simplexwidth {

/// SplitMix64 generator. `split(k)` derives the k-th independent child
/// stream, so every consumer of randomness gets its own named generator
/// seeded from one root seed.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    SplitMix64 split(std::uint64_t stream) const noexcept {
        return SplitMix64(mix(state_ ^ mix(stream + 0xD1B54A32D192ED03ULL)));
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace simplexwidth
