#include "qbell/optimize.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

constexpr int kMaxSweepDimension = 1 << 20;

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double norm2(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

}  // namespace

ToeplitzKernel::ToeplitzKernel(int d) : dim(d) {
    if (d < 1) {
        throw InvalidDimensionError("ToeplitzKernel: d must be >= 1, got " + std::to_string(d));
    }
    first_row.resize(static_cast<std::size_t>(d));
    const double dd = static_cast<double>(d);
    for (int j = 0; j < d; ++j) {
        first_row[static_cast<std::size_t>(j)] = 1.0 / (dd * std::cos(M_PI * j / (2.0 * dd)));
    }
}

std::vector<double> matvec_naive(const ToeplitzKernel& kernel, std::span<const double> v) {
    const int d = kernel.dim;
    if (static_cast<int>(v.size()) != d) {
        throw DimensionMismatchError("matvec_naive: vector length does not match kernel dimension");
    }
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
        double s = 0.0;
        for (int l = 0; l < d; ++l) {
            s += kernel.first_row[static_cast<std::size_t>(k > l ? k - l : l - k)] * v[static_cast<std::size_t>(l)];
        }
        out[static_cast<std::size_t>(k)] = s;
    }
    return out;
}

CirculantMultiplier::CirculantMultiplier(const ToeplitzKernel& kernel)
    : d_(kernel.dim),
      fft_(Fft::next_power_of_two(kernel.dim <= 1 ? 1 : 2 * static_cast<std::size_t>(kernel.dim) - 1)) {
    const std::size_t n = fft_.size();
    kernel_spectrum_.assign(n, {0.0, 0.0});
    kernel_spectrum_[0] = kernel.first_row[0];
    for (int j = 1; j < d_; ++j) {
        kernel_spectrum_[static_cast<std::size_t>(j)] = kernel.first_row[static_cast<std::size_t>(j)];
        kernel_spectrum_[n - static_cast<std::size_t>(j)] = kernel.first_row[static_cast<std::size_t>(j)];
    }
    fft_.forward(kernel_spectrum_);
}

std::vector<double> CirculantMultiplier::apply(std::span<const double> v) const {
    if (static_cast<int>(v.size()) != d_) {
        throw DimensionMismatchError("CirculantMultiplier: vector length does not match kernel dimension");
    }
    const std::size_t n = fft_.size();
    std::vector<std::complex<double>> buf(n, {0.0, 0.0});
    for (int i = 0; i < d_; ++i) {
        buf[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
    }
    fft_.forward(buf);
    for (std::size_t i = 0; i < n; ++i) {
        buf[i] *= kernel_spectrum_[i];
    }
    fft_.inverse(buf);
    std::vector<double> out(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) {
        out[static_cast<std::size_t>(i)] = buf[static_cast<std::size_t>(i)].real();
    }
    return out;
}

std::vector<double> matvec_fft(const ToeplitzKernel& kernel, std::span<const double> v) {
    return CirculantMultiplier(kernel).apply(v);
}

namespace {

EigenResult power_iteration(const CirculantMultiplier& mult, int d, double tol, int max_iter) {
    if (!(tol > 0.0)) {
        throw ParameterOutOfRangeError("power iteration: tol must be positive");
    }
    std::vector<double> v(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
    double mu = 0.0;
    double residual = 0.0;
    int iter = 0;
    bool converged = false;
    for (;;) {
        std::vector<double> w = mult.apply(v);
        mu = dot(v, w);  // Rayleigh quotient of the unit iterate
        double r2 = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double e = w[i] - mu * v[i];
            r2 += e * e;
        }
        residual = std::sqrt(r2);
        if (residual < tol) {
            converged = true;
            break;
        }
        if (iter >= max_iter) {
            break;
        }
        const double nw = norm2(w);
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] /= nw;
        }
        v = std::move(w);
        ++iter;
    }
    return EigenResult{mu, make_state(std::move(v)), iter, residual, converged};
}

}  // namespace

EigenResult optimal_state(int d, double tol, int max_iter) {
    if (d < 1) {
        throw InvalidDimensionError("optimal_state: d must be >= 1, got " + std::to_string(d));
    }
    const ToeplitzKernel kernel(d);
    const CirculantMultiplier mult(kernel);
    return power_iteration(mult, d, tol, max_iter);
}

std::vector<ViolationPoint> violation_sweep(const std::vector<int>& d_values, double tol, int max_iter) {
    std::vector<ViolationPoint> out;
    out.reserve(d_values.size());
    for (int d : d_values) {
        if (d > kMaxSweepDimension) {
            throw BudgetExceededError("violation_sweep: d = " + std::to_string(d) + " exceeds the sweep budget");
        }
        const ToeplitzKernel kernel(d);
        const CirculantMultiplier mult(kernel);
        const EigenResult res = power_iteration(mult, d, tol, max_iter);

        const SchmidtState approx = approximate_state(d);
        const std::vector<double> k_approx = mult.apply(approx.coefficients());
        const double q = dot(approx.coefficients(), k_approx);

        out.push_back(ViolationPoint{d, 2.0 - res.eigenvalue, 2.0 - q, res.eigenvalue, res.iterations, res.residual});
    }
    return out;
}

}  // namespace qbell
