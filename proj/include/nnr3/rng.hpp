#pragma once

#include "nnr3/rational.hpp"

#include <cstdint>
#include <random>

namespace nnr3 {

// Deterministic random source. All sampling goes through the helpers below
// so that a recorded seed reproduces every report bit-for-bit.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Uniform rational with numerator in [-100, 100], denominator in [1, 100].
    Rational rational() { return Rational(range(-100, 100), range(1, 100)); }

    // Same distribution restricted to strictly positive values.
    Rational positive_rational() { return Rational(range(1, 100), range(1, 100)); }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    std::mt19937_64 eng;
};

}  // namespace nnr3
