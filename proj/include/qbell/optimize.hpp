#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qbell/fft.hpp"
#include "qbell/states.hpp"

namespace qbell {

/// Symmetric positive Toeplitz kernel K_{kl} = 1/(d cos(pi (k-l) / (2d))),
/// stored as its first row.
struct ToeplitzKernel {
    explicit ToeplitzKernel(int d);

    int dim;
    std::vector<double> first_row;  // entry j = 1/(d cos(pi j / (2d)))
};

/// Dense O(d^2) product (K v)_k = sum_l first_row[|k-l|] v_l.
std::vector<double> matvec_naive(const ToeplitzKernel& kernel, std::span<const double> v);

/// Repeated-use Toeplitz multiplier: the kernel is embedded in a circulant of
/// length 2^ceil(log2(2d-1)) whose spectrum is precomputed; each product is
/// two FFTs.
class CirculantMultiplier {
  public:
    explicit CirculantMultiplier(const ToeplitzKernel& kernel);

    int dim() const { return d_; }
    std::vector<double> apply(std::span<const double> v) const;

  private:
    int d_;
    Fft fft_;
    std::vector<std::complex<double>> kernel_spectrum_;
};

/// One-shot FFT product, identical result to matvec_naive up to rounding.
std::vector<double> matvec_fft(const ToeplitzKernel& kernel, std::span<const double> v);

struct EigenResult {
    double eigenvalue = 0.0;     // principal eigenvalue mu; bell value A_d = 2 - mu
    SchmidtState eigenvector;    // positive, unit norm (Perron-Frobenius)
    int iterations = 0;
    double residual = 0.0;       // ||K v - mu v||_2 at the returned iterate
    bool converged = false;
};

/// Power iteration from the uniform positive vector; stops when the residual
/// drops below tol. converged=false flags a max_iter exit (best iterate is
/// still returned).
EigenResult optimal_state(int d, double tol = 1e-12, int max_iter = 100000);

struct ViolationPoint {
    int d;
    double a_optimal;      // 2 - mu at the principal eigenvector
    double a_approximate;  // closed-form value at the approximate state
    double eigenvalue;
    int iterations;
    double residual;
};

std::vector<ViolationPoint> violation_sweep(const std::vector<int>& d_values,
                                            double tol = 1e-12, int max_iter = 100000);

}  // namespace qbell
