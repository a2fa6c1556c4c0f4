#include "qbell/special.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "qbell/errors.hpp"

namespace qbell::special {

namespace {

// B_{2n}/(2n) for the asymptotic tail of psi:
//   psi(z) ~ ln z - 1/(2z) - sum_n B_{2n}/(2n z^{2n})
constexpr std::array<double, 7> kDigammaTail = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
};

// Lanczos g=7, n=9 coefficients (double precision).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_series(double z) {
    double s = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        s += kLanczos[i] / (z + static_cast<double>(i) - 1.0);
    }
    return s;
}

}  // namespace

double digamma(double z, const SpecialFunctionConfig& cfg) {
    if (!(z > 0.0)) {
        throw NonPositiveArgumentError("digamma: argument must be positive, got " + std::to_string(z));
    }
    double result = 0.0;
    // upward recurrence psi(z+1) = psi(z) + 1/z
    while (z < cfg.recurrence_threshold) {
        result -= 1.0 / z;
        z += 1.0;
    }
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    result += std::log(z) - 0.5 * inv;
    double power = inv2;
    const int terms = cfg.series_terms < static_cast<int>(kDigammaTail.size())
                          ? cfg.series_terms
                          : static_cast<int>(kDigammaTail.size());
    for (int n = 0; n < terms; ++n) {
        result -= kDigammaTail[static_cast<std::size_t>(n)] * power;
        power *= inv2;
    }
    return result;
}

double digamma(double z) {
    return digamma(z, SpecialFunctionConfig{});
}

double gamma_fn(double z) {
    if (!(z > 0.0)) {
        throw NonPositiveArgumentError("gamma_fn: argument must be positive, got " + std::to_string(z));
    }
    if (z < 0.5) {
        // reflection keeps the Lanczos argument away from 0
        return M_PI / (std::sin(M_PI * z) * gamma_fn(1.0 - z));
    }
    const double x = z - 1.0;
    const double t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * lanczos_series(z);
}

double log_gamma_fn(double z) {
    if (!(z > 0.0)) {
        throw NonPositiveArgumentError("log_gamma_fn: argument must be positive, got " + std::to_string(z));
    }
    if (z < 0.5) {
        return std::log(M_PI / std::sin(M_PI * z)) - log_gamma_fn(1.0 - z);
    }
    const double x = z - 1.0;
    const double t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

}  // namespace qbell::special
