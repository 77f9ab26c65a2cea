#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "flexigen/tables.hpp"

namespace flexigen {

// Deterministic named-stream pseudo-random generator.
//
// A stream is a pure function of (master seed, label): the same pair yields
// the same draw sequence on every platform and in every release, so whole
// datasets are reproducible from a single seed. Distinct labels give
// statistically independent streams, which is what lets profiles be
// generated in any order (or in parallel) with byte-identical results.
//
// Algorithm: xoshiro256++ whose state is expanded with splitmix64 from
// `master_seed` mixed with the FNV-1a hash of `label`. Floating-point draws
// use the top 53 bits of one 64-bit output. The exact sequences are pinned
// by golden tests; changing any of this is a breaking format change.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::string_view label);

    const std::string& label() const { return label_; }

    // Raw 64-bit draw.
    std::uint64_t next_u64();

    // Uniform double in [0, 1); consumes exactly one draw.
    double next_unit();

    // Uniform double in [lo, hi); lo == hi returns lo. Always consumes one
    // draw. Throws std::invalid_argument when lo > hi.
    double sample_uniform(double lo, double hi);

    // True with probability p; consumes one draw. Throws
    // std::invalid_argument when p is outside [0, 1].
    bool bernoulli(double p);

    // Index i with probability weights[i]; consumes exactly one draw.
    // Weights must be non-empty and sum to 1 within 1e-9; throws
    // std::invalid_argument otherwise.
    std::size_t sample_bucket(std::span<const double> weights);

    // Uniform minute of day in [bucket.hour_min, bucket.hour_max).
    double sample_time_in(const RoutineBucket& bucket);

private:
    std::array<std::uint64_t, 4> state_{};
    std::string label_;
};

inline RngStream derive_stream(std::uint64_t master_seed, std::string_view label) {
    return RngStream(master_seed, label);
}

// FNV-1a 64-bit hash; also used for config fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace flexigen
