#pragma once

#include <cstdint>
#include <random>

namespace gyrofuzz {

// All randomness in the library flows through a single mt19937_64 seeded by
// the caller; reports embed the seed so any run can be reproduced exactly.
using Rng = std::mt19937_64;

/// Uniform-ish value in [0, n). Plain modulo; the tiny bias is irrelevant for
/// law sampling and keeps the stream identical across standard libraries.
inline std::uint64_t bounded(Rng& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

/// Integer in [lo, hi], inclusive.
inline std::int64_t bounded_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Double in [0, 1) with 53 random bits.
inline double unit_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace gyrofuzz
