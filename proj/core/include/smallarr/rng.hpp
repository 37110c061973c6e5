#pragma once

#include <cstdint>
#include <random>

#include "smallarr/rational.hpp"

namespace smallarr {

/// Seeded pseudo-random source with platform-independent output.
/// std::mt19937_64 is fully specified by the standard; the derived draws
/// below avoid std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
    /// at the ranges used here.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) hi = lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    /// Rational with numerator in [-bound, bound] and denominator in [1, bound].
    Rational rational(int bound = 100) {
        const std::int64_t num = int_in(-bound, bound);
        const std::int64_t den = int_in(1, bound);
        return Rational(num, den);
    }

    /// Small nonzero integer in [-bound, bound].
    std::int64_t nonzero_int(int bound) {
        for (;;) {
            const std::int64_t v = int_in(-bound, bound);
            if (v != 0) return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace smallarr
