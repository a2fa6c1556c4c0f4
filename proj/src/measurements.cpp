#include "qbell/measurements.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

double basis_phase(Party party, int setting) {
    if (setting != 1 && setting != 2) {
        throw ParameterOutOfRangeError("best_basis: setting must be 1 or 2, got " + std::to_string(setting));
    }
    if (party == Party::alice) {
        return setting == 1 ? 0.0 : 0.5;   // alpha_1, alpha_2
    }
    return setting == 1 ? 0.25 : -0.25;    // beta_1, beta_2
}

// exp(i 2pi tau / d) / sqrt(d) with the integer part of tau reduced mod d
// before the multiplication by 2pi/d, so the trig argument stays in [0, 2pi)
// even at large d.
std::complex<double> fourier_component(int d, std::int64_t int_part, double frac_part, double inv_sqrt_d) {
    std::int64_t r = int_part % d;
    if (r < 0) {
        r += d;
    }
    double tau = static_cast<double>(r) + frac_part;
    const double dd = static_cast<double>(d);
    if (tau >= dd) {
        tau -= dd;
    } else if (tau < 0.0) {
        tau += dd;
    }
    const double angle = 2.0 * M_PI * tau / dd;
    return {inv_sqrt_d * std::cos(angle), inv_sqrt_d * std::sin(angle)};
}

}  // namespace

MeasurementBasis::MeasurementBasis(int d, Party party, int setting, double phase)
    : d_(d), party_(party), setting_(setting), phase_(phase) {
    if (d <= static_cast<int>(kMaterializeLimit)) {
        vectors_.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
        for (int k = 0; k < d; ++k) {
            for (int m = 0; m < d; ++m) {
                std::int64_t ip;
                double fp;
                if (party_ == Party::alice) {
                    ip = static_cast<std::int64_t>(m) * k;
                    fp = static_cast<double>(m) * phase_;
                } else {
                    ip = -static_cast<std::int64_t>(m) * k;
                    fp = static_cast<double>(m) * phase_;
                }
                vectors_[static_cast<std::size_t>(k) * d + m] = fourier_component(d, ip, fp, inv_sqrt_d);
            }
        }
    }
}

std::complex<double> MeasurementBasis::component(int k, int m) const {
    if (!vectors_.empty()) {
        return vectors_[static_cast<std::size_t>(k) * d_ + m];
    }
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d_));
    const std::int64_t ip = party_ == Party::alice ? static_cast<std::int64_t>(m) * k
                                                   : -static_cast<std::int64_t>(m) * k;
    return fourier_component(d_, ip, static_cast<double>(m) * phase_, inv_sqrt_d);
}

MeasurementBasis best_basis(int d, Party party, int setting) {
    if (d < 1) {
        throw InvalidDimensionError("best_basis: d must be >= 1, got " + std::to_string(d));
    }
    return MeasurementBasis(d, party, setting, basis_phase(party, setting));
}

}  // namespace qbell
