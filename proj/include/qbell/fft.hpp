#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qbell {

/// Iterative radix-2 FFT for a fixed power-of-two length. The twiddle and
/// bit-reversal tables are precomputed once so repeated transforms (power
/// iteration) stay cheap.
class Fft {
  public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }

    void forward(std::span<std::complex<double>> data) const;
    /// Inverse transform including the 1/n scaling.
    void inverse(std::span<std::complex<double>> data) const;

    static std::size_t next_power_of_two(std::size_t n);

  private:
    void transform(std::span<std::complex<double>> data, bool conjugate) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddles_;  // exp(-2 pi i k / n), k < n/2
};

}  // namespace qbell
