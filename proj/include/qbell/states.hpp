#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qbell {

/// Schmidt-decomposed bipartite pure state: non-negative coefficients with
/// unit 2-norm. Immutable after construction.
class SchmidtState {
  public:
    int dim() const { return static_cast<int>(lambda_.size()); }
    const std::vector<double>& coefficients() const { return lambda_; }
    double operator[](int k) const { return lambda_[static_cast<std::size_t>(k)]; }

    friend SchmidtState make_state(std::vector<double> coefficients);
    friend SchmidtState approximate_state(int d);
    friend SchmidtState uniform_state(int d);

  private:
    explicit SchmidtState(std::vector<double> lambda) : lambda_(std::move(lambda)) {}
    std::vector<double> lambda_;
};

/// Rescale a non-negative coefficient vector to unit 2-norm.
SchmidtState make_state(std::vector<double> coefficients);

/// The state with coefficients proportional to 1/sqrt((k+1)(d-k)), k = 0..d-1.
SchmidtState approximate_state(int d);

/// Maximally entangled state, all coefficients 1/sqrt(d).
SchmidtState uniform_state(int d);

/// Entanglement entropy -sum lambda_k^2 log lambda_k^2 in nats (0 log 0 = 0).
double entropy(const SchmidtState& state);

/// Entropy of the approximate state divided by log d, computed in O(d) with
/// compensated accumulation and without materializing the state.
double approximate_entropy_ratio(std::int64_t d);

/// (d, E(psi_d)/log d) for the approximate state at each requested d >= 2.
std::vector<std::pair<std::int64_t, double>> entropy_ratio_sweep(const std::vector<std::int64_t>& d_values);

}  // namespace qbell
