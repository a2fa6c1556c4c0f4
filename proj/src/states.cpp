#include "qbell/states.hpp"

#include <cmath>
#include <string>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

// Kahan-compensated running sum.
class CompensatedSum {
  public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace

SchmidtState make_state(std::vector<double> coefficients) {
    if (coefficients.empty()) {
        throw EmptyVectorError("make_state: coefficient vector is empty");
    }
    CompensatedSum norm2;
    for (double c : coefficients) {
        if (c < 0.0) {
            throw NegativeCoefficientError("make_state: coefficient " + std::to_string(c) + " is negative");
        }
        norm2.add(c * c);
    }
    if (norm2.value() <= 0.0) {
        throw NegativeCoefficientError("make_state: all coefficients are zero");
    }
    const double inv = 1.0 / std::sqrt(norm2.value());
    for (double& c : coefficients) {
        c *= inv;
    }
    return SchmidtState(std::move(coefficients));
}

SchmidtState approximate_state(int d) {
    if (d < 1) {
        throw InvalidDimensionError("approximate_state: d must be >= 1, got " + std::to_string(d));
    }
    std::vector<double> lambda(static_cast<std::size_t>(d));
    // fill symmetrically so the palindrome lambda_k = lambda_{d-1-k} is exact
    for (int k = 0; k <= d - 1 - k; ++k) {
        const double v = 1.0 / std::sqrt(static_cast<double>(k + 1) * static_cast<double>(d - k));
        lambda[static_cast<std::size_t>(k)] = v;
        lambda[static_cast<std::size_t>(d - 1 - k)] = v;
    }
    return make_state(std::move(lambda));
}

SchmidtState uniform_state(int d) {
    if (d < 1) {
        throw InvalidDimensionError("uniform_state: d must be >= 1, got " + std::to_string(d));
    }
    return make_state(std::vector<double>(static_cast<std::size_t>(d), 1.0));
}

double entropy(const SchmidtState& state) {
    CompensatedSum acc;
    for (double lam : state.coefficients()) {
        const double p = lam * lam;
        if (p > 0.0) {
            acc.add(-p * std::log(p));
        }
    }
    return acc.value();
}

double approximate_entropy_ratio(std::int64_t d) {
    if (d < 2) {
        throw InvalidDimensionError("approximate_entropy_ratio: d must be >= 2, got " + std::to_string(d));
    }
    // weights w_k = 1/((k+1)(d-k)); entropy of p_k = w_k / sum(w)
    CompensatedSum norm;
    for (std::int64_t k = 0; k < d; ++k) {
        norm.add(1.0 / (static_cast<double>(k + 1) * static_cast<double>(d - k)));
    }
    const double z = norm.value();
    CompensatedSum ent;
    for (std::int64_t k = 0; k < d; ++k) {
        const double p = 1.0 / (static_cast<double>(k + 1) * static_cast<double>(d - k) * z);
        ent.add(-p * std::log(p));
    }
    return ent.value() / std::log(static_cast<double>(d));
}

std::vector<std::pair<std::int64_t, double>> entropy_ratio_sweep(const std::vector<std::int64_t>& d_values) {
    std::vector<std::pair<std::int64_t, double>> out;
    out.reserve(d_values.size());
    for (std::int64_t d : d_values) {
        out.emplace_back(d, approximate_entropy_ratio(d));
    }
    return out;
}

}  // namespace qbell
