#include "qbell/continuum.hpp"

#include <cmath>
#include <string>

#include "qbell/errors.hpp"
#include "qbell/special.hpp"

namespace qbell {

namespace {

// log of N_delta^2 = sqrt(pi) 4^{2 delta} / (2 Gamma(1/2-2d) Gamma(2d) cos(2 pi d))
double log_norm_squared(double delta) {
    return 0.5 * std::log(M_PI) + (4.0 * delta - 1.0) * M_LN2
         - special::log_gamma_fn(0.5 - 2.0 * delta) - special::log_gamma_fn(2.0 * delta)
         - std::log(std::cos(2.0 * M_PI * delta));
}

// log cos(pi (x-y)/2), stable when |x-y| approaches 1 (the kernel zero):
// there cos(pi(x-y)/2) = sin(pi q/2) with q the distance to the corner.
double log_kernel(const QuadratureNode& a, const QuadratureNode& b) {
    const double diff = a.x - b.x;
    if (diff > -0.5 && diff < 0.5) {
        return std::log(std::cos(0.5 * M_PI * diff));
    }
    double q;
    double log_q;
    if (diff <= -0.5) {
        q = a.x + b.xc;
        log_q = log_add_exp(a.log_x, b.log_xc);
    } else {
        q = a.xc + b.x;
        log_q = log_add_exp(a.log_xc, b.log_x);
    }
    if (q > 1e-280) {
        return std::log(std::sin(0.5 * M_PI * q));
    }
    return std::log(0.5 * M_PI) + log_q;  // sin t = t to this precision
}

// int int (x(1-x)y(1-y))^{delta-1/2} / cos(pi (x-y)/2) over the unit square
QuadratureResult core_integral(double delta, const QuadratureSpec& spec) {
    const double s = delta - 0.5;
    const LogIntegrand2D integrand = [s](const QuadratureNode& a, const QuadratureNode& b) {
        return s * (a.log_x + a.log_xc + b.log_x + b.log_xc) - log_kernel(a, b);
    };
    return integrate_unit_square(integrand, spec);
}

void check_eps(double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 0.5) {
        throw ParameterOutOfRangeError("epsilon must lie in (0, 1/2], got " + std::to_string(epsilon));
    }
}

void check_delta_half(double delta) {
    if (!(delta >= 0.0) || delta >= 0.5) {
        throw ParameterOutOfRangeError("delta must lie in [0, 1/2), got " + std::to_string(delta));
    }
}

}  // namespace

ContinuumAnsatz make_ansatz(double delta) {
    if (!(delta > 0.0) || delta >= 0.25) {
        throw DeltaOutOfRangeError("make_ansatz: delta must lie in (0, 1/4), got " + std::to_string(delta));
    }
    return ContinuumAnsatz{delta, std::exp(0.5 * log_norm_squared(delta))};
}

double f_delta(double delta, double x) {
    const ContinuumAnsatz ansatz = make_ansatz(delta);
    if (!(x > 0.0) || x >= 1.0) {
        throw XOutOfRangeError("f_delta: x must lie strictly inside (0, 1), got " + std::to_string(x));
    }
    return ansatz.normalization * std::pow(x * (1.0 - x), delta - 0.5);
}

double f_delta_norm_squared(double delta, const QuadratureSpec& spec) {
    const ContinuumAnsatz ansatz = make_ansatz(delta);
    const double log_n2 = 2.0 * std::log(ansatz.normalization);
    const double e = 2.0 * delta - 1.0;
    return integrate_unit_interval(
               [log_n2, e](const QuadratureNode& n) { return log_n2 + e * (n.log_x + n.log_xc); }, spec)
        .value;
}

double m_functional(const ContinuumAnsatz& ansatz, const QuadratureSpec& spec) {
    make_ansatz(ansatz.delta);  // revalidate
    const double n2 = std::exp(log_norm_squared(ansatz.delta));
    QuadratureSpec core_spec = spec;
    core_spec.target_abs_err = spec.target_abs_err / n2;
    const double m = n2 * core_integral(ansatz.delta, core_spec).value;
    if (m > 2.0 + spec.target_abs_err) {
        throw QuadratureNotConvergedError("m_functional: value " + std::to_string(m)
                                          + " exceeds the theoretical ceiling 2");
    }
    return m;
}

double m_functional_trial(const LogIntegrand1D& log_f, const QuadratureSpec& spec) {
    const LogIntegrand2D integrand = [&log_f](const QuadratureNode& a, const QuadratureNode& b) {
        return log_f(a) + log_f(b) - log_kernel(a, b);
    };
    return integrate_unit_square(integrand, spec).value;
}

double i_delta_closed_form(double delta, double epsilon) {
    check_delta_half(delta);
    check_eps(epsilon);
    const double bracket = special::digamma(0.25 - 0.5 * delta) - special::digamma(0.25 + 0.5 * delta)
                         + special::digamma(0.75 - 0.5 * delta) - special::digamma(0.75 + 0.5 * delta)
                         + 2.0 * M_PI / std::cos(M_PI * delta);
    return std::pow(epsilon, 2.0 * delta) / M_PI * bracket;
}

double corner_bound_closed_form(double delta, double epsilon) {
    check_delta_half(delta);
    check_eps(epsilon);
    return std::pow(epsilon, 2.0 * delta) / M_PI * 2.0
         * (special::digamma(0.5 * delta + 0.75) - special::digamma(0.5 * delta + 0.25));
}

ChainCheckResult i_delta_chain_check(double delta, double epsilon, const QuadratureSpec& spec) {
    if (!(delta > 0.0)) {
        throw ParameterOutOfRangeError("i_delta_chain_check: delta must be positive");
    }
    check_delta_half(delta);
    check_eps(epsilon);
    const double s = delta - 0.5;
    const double log_eps = std::log(epsilon);

    // I_delta = delta * (core integral over the unit square)
    QuadratureSpec core_spec = spec;
    core_spec.target_abs_err = spec.target_abs_err / delta;
    const double i_delta = delta * core_integral(delta, core_spec).value;

    // corner term: 2 delta int_[0,eps] dx int_[1-eps,1] dy of the full
    // integrand; x = eps u, y = 1 - eps v turns the kernel into sin(pi(x+yc)/2)
    const LogIntegrand2D corner = [s, epsilon, log_eps](const QuadratureNode& u, const QuadratureNode& v) {
        const double x = epsilon * u.x;
        const double yc = epsilon * v.x;
        const double log_x = log_eps + u.log_x;
        const double log_xc = std::log1p(-x);
        const double log_y = std::log1p(-yc);
        const double log_yc = log_eps + v.log_x;
        const double q = x + yc;
        const double log_sin = q > 1e-280 ? std::log(std::sin(0.5 * M_PI * q))
                                          : std::log(0.5 * M_PI) + log_add_exp(log_x, log_yc);
        return s * (log_x + log_xc + log_y + log_yc) - log_sin + 2.0 * log_eps;
    };
    const double corner_integral = 2.0 * delta * integrate_unit_square(corner, core_spec).value;

    // middle bound: (4 delta / pi) int_[0,eps]^2 (xy)^{delta-1/2} / (x+y)
    const LogIntegrand2D middle = [s, epsilon, log_eps](const QuadratureNode& u, const QuadratureNode& v) {
        const double log_x = log_eps + u.log_x;
        const double log_y = log_eps + v.log_x;
        const double sum = epsilon * (u.x + v.x);
        const double log_sum = sum > 1e-280 ? std::log(sum) : log_add_exp(log_x, log_y);
        return s * (log_x + log_y) - log_sum + 2.0 * log_eps;
    };
    const double middle_bound = 4.0 * delta / M_PI * integrate_unit_square(middle, core_spec).value;

    const ChainCheckResult result{
        i_delta,
        corner_integral,
        middle_bound,
        corner_bound_closed_form(delta, epsilon),
        i_delta_closed_form(delta, epsilon),
    };

    const double slack = 100.0 * spec.target_abs_err + 1e-12;
    if (result.i_delta + slack < result.corner_integral
        || result.corner_integral + slack < result.middle_bound
        || result.middle_bound + slack < result.paper_closed_form
        || !(result.middle_bound > 0.0) || !(result.corner_integral > 0.0)) {
        throw Error("i_delta_chain_check: bound chain violated beyond quadrature slack");
    }
    return result;
}

}  // namespace qbell
