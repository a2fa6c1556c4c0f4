#include "qbell/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qbell/bell.hpp"
#include "qbell/classical.hpp"
#include "qbell/continuum.hpp"
#include "qbell/local_models.hpp"
#include "qbell/measurements.hpp"
#include "qbell/optimize.hpp"
#include "qbell/random.hpp"
#include "qbell/special.hpp"
#include "qbell/states.hpp"

namespace qbell {

namespace {

class Harness {
  public:
    Harness(std::ostream& out, std::uint64_t seed) : out_(out), seed_(seed) {}

    void check(const std::string& name, const std::function<bool(std::mt19937_64&)>& fn) {
        std::mt19937_64 rng(seed_);  // every check sees the same seed
        bool ok = false;
        std::string detail;
        try {
            ok = fn(rng);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            out_ << "[PASS] " << name << "\n";
        } else {
            ++failures_;
            out_ << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }

    int failures() const { return failures_; }

  private:
    std::ostream& out_;
    std::uint64_t seed_;
    int failures_ = 0;
};

constexpr double kA2 = 0.79289321881345247560;  // (3 - sqrt 2)/2

}  // namespace

int run_verification(std::ostream& out, std::uint64_t seed) {
    Harness h(out, seed);

    h.check("states.normalization", [](std::mt19937_64& rng) {
        for (int d : {1, 2, 3, 7, 16, 64}) {
            for (int rep = 0; rep < 20; ++rep) {
                const SchmidtState s = random_schmidt_state(rng, d);
                double n2 = 0.0;
                for (double c : s.coefficients()) {
                    n2 += c * c;
                }
                if (std::abs(n2 - 1.0) > 1e-12) {
                    return false;
                }
            }
        }
        return true;
    });

    h.check("states.approximate_palindrome", [](std::mt19937_64&) {
        for (int d : {1, 2, 3, 4, 5, 8, 9, 100, 1001}) {
            const SchmidtState s = approximate_state(d);
            for (int k = 0; k < d; ++k) {
                if (s[k] != s[d - 1 - k]) {
                    return false;
                }
            }
        }
        return true;
    });

    h.check("states.entropy_bounds", [](std::mt19937_64& rng) {
        for (int d : {1, 2, 5, 32}) {
            for (int rep = 0; rep < 20; ++rep) {
                const double e = entropy(random_schmidt_state(rng, d));
                if (e < 0.0 || e > std::log(static_cast<double>(d)) + 1e-12) {
                    return false;
                }
            }
        }
        const double log3 = std::log(3.0);
        return std::abs(entropy(uniform_state(3)) - log3) < 1e-12
            && std::abs(entropy(make_state({1.0, 0.0, 0.0}))) < 1e-15;
    });

    h.check("states.entropy_ratio_monotone", [](std::mt19937_64&) {
        const auto pts = entropy_ratio_sweep({100, 1000, 10000, 100000, 1000000});
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i].second <= 0.5) {
                return false;
            }
            if (i > 0 && pts[i].second >= pts[i - 1].second) {
                return false;
            }
        }
        return std::abs(approximate_entropy_ratio(2) - 1.0) < 1e-12;
    });

    h.check("measurements.orthonormality", [](std::mt19937_64&) {
        for (int d : {1, 2, 3, 5, 8, 16}) {
            for (Party p : {Party::alice, Party::bob}) {
                for (int setting : {1, 2}) {
                    const MeasurementBasis basis = best_basis(d, p, setting);
                    for (int k = 0; k < d; ++k) {
                        for (int l = 0; l < d; ++l) {
                            std::complex<double> g = 0.0;
                            for (int m = 0; m < d; ++m) {
                                g += std::conj(basis.component(k, m)) * basis.component(l, m);
                            }
                            if (std::abs(g - (k == l ? 1.0 : 0.0)) > 1e-12) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        return true;
    });

    h.check("measurements.completeness_and_flatness", [](std::mt19937_64&) {
        for (int d : {1, 2, 3, 8}) {
            const MeasurementBasis basis = best_basis(d, Party::bob, 2);
            for (int m = 0; m < d; ++m) {
                for (int n = 0; n < d; ++n) {
                    std::complex<double> sum = 0.0;
                    for (int k = 0; k < d; ++k) {
                        sum += basis.component(k, m) * std::conj(basis.component(k, n));
                    }
                    if (std::abs(sum - (m == n ? 1.0 : 0.0)) > 1e-12) {
                        return false;
                    }
                }
            }
            for (int k = 0; k < d; ++k) {
                for (int m = 0; m < d; ++m) {
                    if (std::abs(std::norm(basis.component(k, m)) - 1.0 / d) > 1e-14) {
                        return false;
                    }
                }
            }
        }
        return true;
    });

    h.check("bell.mass_and_marginals", [](std::mt19937_64& rng) {
        for (int d : {1, 2, 3, 6}) {
            const SchmidtState s = random_schmidt_state(rng, d);
            for (int a : {1, 2}) {
                for (int b : {1, 2}) {
                    const JointDistribution jd = joint_distribution(
                        s, best_basis(d, Party::alice, a), best_basis(d, Party::bob, b));
                    if (std::abs(jd.total_mass() - 1.0) > 1e-12) {
                        return false;
                    }
                    for (int k = 0; k < d; ++k) {
                        if (std::abs(jd.alice_marginal(k) - 1.0 / d) > 1e-10
                            || std::abs(jd.bob_marginal(k) - 1.0 / d) > 1e-10) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    h.check("bell.oracle_equivalence", [](std::mt19937_64& rng) {
        for (int d = 2; d <= 8; ++d) {
            for (int rep = 0; rep < 100; ++rep) {
                const SchmidtState s = random_schmidt_state(rng, d);
                const double bv = bell_value(s);
                if (std::abs(bv - closed_form(s)) > 1e-10 || bv < 0.0) {
                    return false;
                }
            }
        }
        return true;
    });

    h.check("bell.chsh_identity_local", [](std::mt19937_64& rng) {
        for (int rep = 0; rep < 100; ++rep) {
            const ChshCheck c = chsh_identity_check(random_local_quadruple(rng));
            if (std::abs(c.residual) > 1e-12) {
                return false;
            }
        }
        return true;
    });

    h.check("bell.chsh_quantum_optimum", [](std::mt19937_64&) {
        const ChshCheck c = chsh_identity_check(quantum_quadruple(uniform_state(2)));
        return std::abs(c.s - 2.0 * std::sqrt(2.0)) < 1e-10 && std::abs(c.lhs - kA2) < 1e-10
            && std::abs(c.residual) < 1e-12;
    });

    h.check("classical.lhv_minimum", [](std::mt19937_64&) {
        for (int d : {1, 2, 3, 4, 8}) {
            const LhvMinimum m = lhv_minimum(d);
            if (m.min_value != 1 || lhv_value(m.witness) != 1) {
                return false;
            }
        }
        return true;
    });

    h.check("optimize.matvec_equivalence", [](std::mt19937_64& rng) {
        for (int d : {1, 2, 3, 5, 17, 64, 333, 1024}) {
            const ToeplitzKernel kernel(d);
            std::vector<double> v(static_cast<std::size_t>(d));
            double nv = 0.0;
            for (double& x : v) {
                x = 2.0 * uniform01(rng) - 1.0;
                nv += x * x;
            }
            nv = std::sqrt(nv);
            const std::vector<double> a = matvec_naive(kernel, v);
            const std::vector<double> b = matvec_fft(kernel, v);
            for (int i = 0; i < d; ++i) {
                if (std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) > 1e-10 * nv) {
                    return false;
                }
            }
        }
        return true;
    });

    h.check("optimize.headline_d2", [](std::mt19937_64&) {
        const EigenResult r = optimal_state(2);
        return r.converged && std::abs(2.0 - r.eigenvalue - kA2) < 1e-10
            && std::abs(r.eigenvector[0] - 1.0 / std::sqrt(2.0)) < 1e-8;
    });

    h.check("optimize.eigenvector_properties", [](std::mt19937_64&) {
        for (int d : {1, 3, 16, 100}) {
            const EigenResult r = optimal_state(d, 1e-12, 200000);
            if (!r.converged || r.residual > 10e-12 * r.eigenvalue) {
                return false;
            }
            if (r.eigenvalue < 1.0 - 1e-12 || r.eigenvalue > 2.0) {
                return false;
            }
            for (int k = 0; k < d; ++k) {
                if (!(r.eigenvector[k] > 0.0)) {
                    return false;
                }
                if (std::abs(r.eigenvector[k] - r.eigenvector[d - 1 - k]) > 1e-8) {
                    return false;
                }
            }
            // the two evaluation routes agree at the optimizer
            if (std::abs(closed_form(r.eigenvector) - (2.0 - r.eigenvalue)) > 1e-9) {
                return false;
            }
        }
        return true;
    });

    h.check("continuum.f_delta_normalization", [](std::mt19937_64&) {
        QuadratureSpec spec;
        spec.target_abs_err = 1e-9;
        for (double delta : {0.01, 0.05, 0.1, 0.2}) {
            if (std::abs(f_delta_norm_squared(delta, spec) - 1.0) > 1e-8) {
                return false;
            }
        }
        return true;
    });

    h.check("continuum.m_monotone_below_two", [](std::mt19937_64&) {
        QuadratureSpec spec;
        spec.target_abs_err = 1e-6;
        double prev = -1.0;
        for (double delta : {0.2, 0.1, 0.05, 0.02}) {  // descending delta
            const double m = m_functional(make_ansatz(delta), spec);
            if (m > 2.0 + 1e-6 || m <= prev) {
                return false;
            }
            prev = m;
        }
        return true;
    });

    h.check("continuum.i_delta_chain", [](std::mt19937_64&) {
        QuadratureSpec spec;
        spec.target_abs_err = 1e-8;
        const ChainCheckResult r = i_delta_chain_check(0.1, 0.25, spec);
        return std::abs(r.middle_bound - r.middle_closed_form) < 1e-6
            && r.i_delta >= r.corner_integral && r.corner_integral >= r.middle_bound
            && r.middle_bound > r.paper_closed_form && r.paper_closed_form > 0.0;
    });

    h.check("continuum.closed_form_limit", [](std::mt19937_64&) {
        for (double eps : {0.1, 0.25, 0.5}) {
            if (std::abs(i_delta_closed_form(1e-8, eps) - 2.0) > 1e-6) {
                return false;
            }
        }
        return i_delta_closed_form(0.0, 0.3) == 2.0;
    });

    h.check("special.digamma_oracles", [](std::mt19937_64&) {
        const double euler = 0.57721566490153286061;
        if (std::abs(special::digamma(1.0) + euler) > 1e-12) {
            return false;
        }
        if (std::abs(special::digamma(0.5) + euler + 2.0 * M_LN2) > 1e-12) {
            return false;
        }
        if (std::abs(special::digamma(2.0) - (1.0 - euler)) > 1e-12) {
            return false;
        }
        for (double z : {0.1, 0.5, 1.5, 7.3}) {
            if (std::abs(special::digamma(z + 1.0) - special::digamma(z) - 1.0 / z) > 1e-13) {
                return false;
            }
        }
        return true;
    });

    h.check("special.gamma_reflection", [](std::mt19937_64&) {
        if (std::abs(special::gamma_fn(1.0) - 1.0) > 1e-13 || std::abs(special::gamma_fn(2.0) - 1.0) > 1e-13) {
            return false;
        }
        if (std::abs(special::gamma_fn(0.5) - std::sqrt(M_PI)) > 1e-13) {
            return false;
        }
        for (double z : {0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9}) {
            const double lhs = special::gamma_fn(z) * special::gamma_fn(1.0 - z);
            const double rhs = M_PI / std::sin(M_PI * z);
            if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) {
                return false;
            }
        }
        return true;
    });

    h.check("special.pairwise_cancellation", [](std::mt19937_64&) {
        // digamma(1/4 - d/2) - digamma(1/4 + d/2) must vanish linearly in d
        double prev_ratio = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double delta = std::pow(10.0, -2 - i);
            const double diff = special::digamma(0.25 - 0.5 * delta) - special::digamma(0.25 + 0.5 * delta);
            const double ratio = diff / delta;
            if (i > 0 && std::abs(ratio - prev_ratio) > 0.05 * std::abs(prev_ratio)) {
                return false;
            }
            prev_ratio = ratio;
        }
        return true;
    });

    return h.failures();
}

}  // namespace qbell
