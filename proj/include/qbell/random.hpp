#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qbell/states.hpp"

namespace qbell {

/// Canonical uniform draw in [0, 1); bit-exact across platforms, unlike
/// std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random point of the positive orthant of the Schmidt sphere: d uniform
/// non-negative coefficients, normalized.
inline SchmidtState random_schmidt_state(std::mt19937_64& rng, int d) {
    std::vector<double> c(static_cast<std::size_t>(d));
    for (double& x : c) {
        x = uniform01(rng);
    }
    bool all_zero = true;
    for (double x : c) {
        if (x > 0.0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        c[0] = 1.0;
    }
    return make_state(std::move(c));
}

}  // namespace qbell
