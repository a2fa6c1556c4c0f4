#include "qbell/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

std::size_t Fft::next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

Fft::Fft(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("Fft: length must be a power of two");
    }
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b) {
            r |= ((i >> b) & 1) << (bits - 1 - b);
        }
        bitrev_[i] = r;
    }
    twiddles_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        twiddles_[k] = {std::cos(angle), std::sin(angle)};
    }
}

void Fft::transform(std::span<std::complex<double>> data, bool conjugate) const {
    if (data.size() != n_) {
        throw std::invalid_argument("Fft: data length does not match plan");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = bitrev_[i];
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t stride = n_ / len;
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = twiddles_[k * stride];
                if (conjugate) {
                    w = std::conj(w);
                }
                const std::complex<double> u = data[start + k];
                const std::complex<double> t = w * data[start + k + half];
                data[start + k] = u + t;
                data[start + k + half] = u - t;
            }
        }
    }
}

void Fft::forward(std::span<std::complex<double>> data) const {
    transform(data, /*conjugate=*/false);
}

void Fft::inverse(std::span<std::complex<double>> data) const {
    transform(data, /*conjugate=*/true);
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& x : data) {
        x *= scale;
    }
}

}  // namespace qbell
