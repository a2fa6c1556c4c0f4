#pragma once

#include <vector>

#include "qbell/measurements.hpp"
#include "qbell/states.hpp"

namespace qbell {

/// d x d outcome-probability table P(k,l|a,b) for one setting pair.
class JointDistribution {
  public:
    JointDistribution(int d, int setting_a, int setting_b, std::vector<double> probs);

    int dim() const { return d_; }
    int setting_a() const { return a_; }
    int setting_b() const { return b_; }

    double operator()(int k, int l) const { return p_[static_cast<std::size_t>(k) * d_ + l]; }
    /// Rounding can leave tiny negative entries; reported tables clamp them.
    double clamped(int k, int l) const;

    double total_mass() const;
    double alice_marginal(int k) const;
    double bob_marginal(int l) const;

  private:
    int d_;
    int a_;
    int b_;
    std::vector<double> p_;  // row-major, row = Alice outcome
};

/// Outcome values x_0..x_{d-1}, pairwise distinct.
struct OutcomeValues {
    explicit OutcomeValues(std::vector<double> vals);
    std::vector<double> values;
};

/// P(k,l|a,b) = |sum_m lambda_m <v_k|m><w_l|m>|^2 for the Schmidt state and
/// the two bases. Direct complex arithmetic, O(d^3); this is the explicit
/// projector path used to cross-check the closed form.
JointDistribution joint_distribution(const SchmidtState& state,
                                     const MeasurementBasis& alice,
                                     const MeasurementBasis& bob);

/// P(A2<B2) + P(B2<A1) + P(A1<B1) + P(B1<=A2) with the conjectured-optimal
/// bases (note the fourth term is non-strict). Result lies in [0, 4].
double bell_value(const SchmidtState& state);

/// Same quantity through the closed form 2 - (1/d) sum_{k,l} lambda_k
/// lambda_l / cos(pi (k-l) / (2d)).
double closed_form(const SchmidtState& state);

/// sum_{k,l} x_k x_l P(k,l|a,b).
double expectation(const JointDistribution& dist, const OutcomeValues& outcomes);

struct ChshCheck {
    double s;         // <A2B2> + <A1B2> + <A1B1> - <A2B1> with outcomes (-1,+1)
    double lhs;       // the four-probability sum
    double residual;  // s - (6 - 4*lhs)
};

/// Verify the affine correspondence S = 6 - 4*LHS on four d=2 distributions,
/// one per setting pair. The identity holds whenever the four tables share
/// consistent single-party marginals (any quantum or local model does).
ChshCheck chsh_identity_check(const JointDistribution& p11,
                              const JointDistribution& p12,
                              const JointDistribution& p21,
                              const JointDistribution& p22);

}  // namespace qbell
