#include "qbell/bell.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "qbell/errors.hpp"
#include "qbell/optimize.hpp"

namespace qbell {

JointDistribution::JointDistribution(int d, int setting_a, int setting_b, std::vector<double> probs)
    : d_(d), a_(setting_a), b_(setting_b), p_(std::move(probs)) {
    if (d < 1) {
        throw InvalidDimensionError("JointDistribution: d must be >= 1");
    }
    if (p_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
        throw DimensionMismatchError("JointDistribution: table size does not match d");
    }
}

double JointDistribution::clamped(int k, int l) const {
    const double v = (*this)(k, l);
    return v > 0.0 ? v : 0.0;
}

double JointDistribution::total_mass() const {
    double s = 0.0;
    for (double v : p_) {
        s += v;
    }
    return s;
}

double JointDistribution::alice_marginal(int k) const {
    double s = 0.0;
    for (int l = 0; l < d_; ++l) {
        s += (*this)(k, l);
    }
    return s;
}

double JointDistribution::bob_marginal(int l) const {
    double s = 0.0;
    for (int k = 0; k < d_; ++k) {
        s += (*this)(k, l);
    }
    return s;
}

OutcomeValues::OutcomeValues(std::vector<double> vals) : values(std::move(vals)) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) {
                throw ParameterOutOfRangeError("OutcomeValues: outcome values must be pairwise distinct");
            }
        }
    }
}

JointDistribution joint_distribution(const SchmidtState& state,
                                     const MeasurementBasis& alice,
                                     const MeasurementBasis& bob) {
    const int d = state.dim();
    if (alice.dim() != d || bob.dim() != d) {
        throw DimensionMismatchError("joint_distribution: state and basis dimensions disagree");
    }
    std::vector<double> p(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            std::complex<double> amp = 0.0;
            for (int m = 0; m < d; ++m) {
                amp += state[m] * std::conj(alice.component(k, m)) * std::conj(bob.component(l, m));
            }
            p[static_cast<std::size_t>(k) * d + l] = std::norm(amp);
        }
    }
    return JointDistribution(d, alice.setting(), bob.setting(), std::move(p));
}

namespace {

// sum over k < l (strict) or k <= l of P(alice=k, bob=l) style events
double prob_alice_below_bob(const JointDistribution& p, bool strict) {
    const int d = p.dim();
    double s = 0.0;
    for (int k = 0; k < d; ++k) {
        for (int l = strict ? k + 1 : k; l < d; ++l) {
            s += p(k, l);
        }
    }
    return s;
}

double prob_bob_below_alice(const JointDistribution& p, bool strict) {
    const int d = p.dim();
    double s = 0.0;
    for (int l = 0; l < d; ++l) {
        for (int k = strict ? l + 1 : l; k < d; ++k) {
            s += p(k, l);
        }
    }
    return s;
}

}  // namespace

double bell_value(const SchmidtState& state) {
    const int d = state.dim();
    const MeasurementBasis a1 = best_basis(d, Party::alice, 1);
    const MeasurementBasis a2 = best_basis(d, Party::alice, 2);
    const MeasurementBasis b1 = best_basis(d, Party::bob, 1);
    const MeasurementBasis b2 = best_basis(d, Party::bob, 2);

    double v = 0.0;
    v += prob_alice_below_bob(joint_distribution(state, a2, b2), /*strict=*/true);  // P(A2<B2)
    v += prob_bob_below_alice(joint_distribution(state, a1, b2), /*strict=*/true);  // P(B2<A1)
    v += prob_alice_below_bob(joint_distribution(state, a1, b1), /*strict=*/true);  // P(A1<B1)
    v += prob_bob_below_alice(joint_distribution(state, a2, b1), /*strict=*/false); // P(B1<=A2)
    return v;
}

double closed_form(const SchmidtState& state) {
    const int d = state.dim();
    const ToeplitzKernel kernel(d);
    const std::vector<double>& lam = state.coefficients();
    // quadratic form lambda^T K lambda; direct O(d^2) for small d, FFT matvec above
    double q = 0.0;
    if (d <= 1024) {
        for (int k = 0; k < d; ++k) {
            double row = 0.0;
            for (int l = 0; l < d; ++l) {
                row += kernel.first_row[static_cast<std::size_t>(std::abs(k - l))] * lam[static_cast<std::size_t>(l)];
            }
            q += lam[static_cast<std::size_t>(k)] * row;
        }
    } else {
        const std::vector<double> kl = matvec_fft(kernel, lam);
        for (int k = 0; k < d; ++k) {
            q += lam[static_cast<std::size_t>(k)] * kl[static_cast<std::size_t>(k)];
        }
    }
    return 2.0 - q;
}

double expectation(const JointDistribution& dist, const OutcomeValues& outcomes) {
    const int d = dist.dim();
    if (static_cast<int>(outcomes.values.size()) != d) {
        throw DimensionMismatchError("expectation: outcome count does not match distribution dimension");
    }
    double s = 0.0;
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            s += outcomes.values[static_cast<std::size_t>(k)] * outcomes.values[static_cast<std::size_t>(l)] * dist(k, l);
        }
    }
    return s;
}

ChshCheck chsh_identity_check(const JointDistribution& p11,
                              const JointDistribution& p12,
                              const JointDistribution& p21,
                              const JointDistribution& p22) {
    for (const JointDistribution* p : {&p11, &p12, &p21, &p22}) {
        if (p->dim() != 2) {
            throw InvalidDimensionError("chsh_identity_check: all distributions must have d = 2");
        }
    }
    const OutcomeValues pm1{{-1.0, +1.0}};
    const double s = expectation(p22, pm1) + expectation(p12, pm1) + expectation(p11, pm1) - expectation(p21, pm1);
    const double lhs = prob_alice_below_bob(p22, true)   // P(A2<B2)
                     + prob_bob_below_alice(p12, true)   // P(B2<A1)
                     + prob_alice_below_bob(p11, true)   // P(A1<B1)
                     + prob_bob_below_alice(p21, false); // P(B1<=A2)
    return ChshCheck{s, lhs, s - (6.0 - 4.0 * lhs)};
}

}  // namespace qbell
