#include "qbell/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLogWeightCutoff = -1550.0;  // beyond this the weighted tail is dead
constexpr double kTMax = 7.5;

void push_tanh_sinh_pair(std::vector<QuadratureNode>& nodes, double t, double log_h) {
    const double z = 0.5 * M_PI * std::sinh(t);           // x = (1 + tanh z)/2
    const double e2z = std::exp(-2.0 * z);                // z >= 0 here
    const double lse = std::log1p(e2z);
    const double log_x = -lse;
    const double log_xc = -2.0 * z - lse;
    const double x = std::exp(log_x);
    const double xc = std::exp(log_xc);
    // dx/dt = (pi/4) cosh(t) sech^2(z)
    const double log_w = log_h + std::log(0.25 * M_PI) + std::log(std::cosh(t))
                       + 2.0 * M_LN2 - 2.0 * z - 2.0 * lse;
    if (log_w < kLogWeightCutoff) {
        return;
    }
    nodes.push_back({x, xc, log_x, log_xc, log_w});
    if (t > 0.0) {
        nodes.push_back({xc, x, log_xc, log_x, log_w});  // mirrored node
    }
}

std::vector<QuadratureNode> tanh_sinh_nodes(int level) {
    const double h = std::ldexp(1.0, -level);
    const double log_h = std::log(h);
    std::vector<QuadratureNode> nodes;
    nodes.reserve(static_cast<std::size_t>(2.0 * kTMax / h) + 2);
    for (double t = 0.0; t <= kTMax; t += h) {
        const std::size_t before = nodes.size();
        push_tanh_sinh_pair(nodes, t, log_h);
        if (t > 1.0 && nodes.size() == before) {
            break;  // weights below cutoff from here on
        }
    }
    return nodes;
}

// Gauss-Legendre nodes/weights on (-1,1) by Newton iteration on P_n.
void gauss_legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = xi;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double dx = p1 / pp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        x[static_cast<std::size_t>(i)] = -xi;
        x[static_cast<std::size_t>(n - 1 - i)] = xi;
        const double wi = 2.0 / ((1.0 - xi * xi) * pp * pp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(n - 1 - i)] = wi;
    }
}

std::vector<QuadratureNode> gauss_legendre_cosine_nodes(int level) {
    const int n = 8 << level;
    std::vector<double> gx;
    std::vector<double> gw;
    gauss_legendre_rule(n, gx, gw);
    std::vector<QuadratureNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double u = 0.5 * (1.0 + gx[static_cast<std::size_t>(i)]);  // u in (0,1)
        const double s = std::sin(0.5 * M_PI * u);
        const double c = std::cos(0.5 * M_PI * u);
        const double x = s * s;                        // x = sin^2(pi u / 2)
        const double xc = c * c;
        // dx/du = (pi/2) sin(pi u); GL weight rescaled to du
        const double log_w = std::log(0.5 * gw[static_cast<std::size_t>(i)])
                           + std::log(0.5 * M_PI * std::sin(M_PI * u));
        nodes.push_back({x, xc, 2.0 * std::log(s), 2.0 * std::log(c), log_w});
    }
    return nodes;
}

double sum_1d(const std::vector<QuadratureNode>& nodes, const LogIntegrand1D& log_f) {
    double s = 0.0;
    double comp = 0.0;
    for (const QuadratureNode& n : nodes) {
        const double lv = log_f(n) + n.log_w;
        if (lv > -745.0) {
            const double y = std::exp(lv) - comp;
            const double t = s + y;
            comp = (t - s) - y;
            s = t;
        }
    }
    return s;
}

double sum_2d(const std::vector<QuadratureNode>& nodes, const LogIntegrand2D& log_f) {
    double s = 0.0;
    double comp = 0.0;
    for (const QuadratureNode& a : nodes) {
        double row = 0.0;
        for (const QuadratureNode& b : nodes) {
            const double lv = log_f(a, b) + a.log_w + b.log_w;
            if (lv > -745.0) {
                row += std::exp(lv);
            }
        }
        const double y = row - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

template <typename SumFn>
QuadratureResult refine(const QuadratureSpec& spec, const SumFn& eval) {
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int level = spec.initial_level; level <= spec.max_level; ++level) {
        const std::vector<QuadratureNode> nodes = make_nodes(spec.scheme, level);
        const double cur = eval(nodes);
        if (!std::isnan(prev)) {
            const double diff = std::abs(cur - prev);
            if (diff <= spec.target_abs_err) {
                return QuadratureResult{cur, diff, level};
            }
        }
        prev = cur;
    }
    throw QuadratureNotConvergedError(
        "quadrature did not reach target_abs_err = " + std::to_string(spec.target_abs_err)
        + " by level " + std::to_string(spec.max_level));
}

}  // namespace

std::vector<QuadratureNode> make_nodes(QuadratureScheme scheme, int level) {
    if (level < 0) {
        throw ParameterOutOfRangeError("make_nodes: level must be >= 0");
    }
    return scheme == QuadratureScheme::tanh_sinh ? tanh_sinh_nodes(level)
                                                 : gauss_legendre_cosine_nodes(level);
}

QuadratureResult integrate_unit_interval(const LogIntegrand1D& log_f, const QuadratureSpec& spec) {
    return refine(spec, [&](const std::vector<QuadratureNode>& nodes) { return sum_1d(nodes, log_f); });
}

QuadratureResult integrate_unit_square(const LogIntegrand2D& log_f, const QuadratureSpec& spec) {
    return refine(spec, [&](const std::vector<QuadratureNode>& nodes) { return sum_2d(nodes, log_f); });
}

double log_add_exp(double a, double b) {
    if (a == kNegInf) {
        return b;
    }
    if (b == kNegInf) {
        return a;
    }
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace qbell
