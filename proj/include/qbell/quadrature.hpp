#pragma once

#include <functional>
#include <vector>

namespace qbell {

enum class QuadratureScheme {
    tanh_sinh,       // double-exponential nodes on (0,1)
    gauss_legendre,  // Gauss-Legendre after the x = sin^2(pi u / 2) substitution
};

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::tanh_sinh;
    int initial_level = 6;
    int max_level = 10;             // tanh-sinh level; GL uses 8 * 2^level points
    double target_abs_err = 1e-8;   // refinement stops when successive levels agree
};

/// Node on (0,1). Endpoint distances are carried both directly and in log
/// form so integrands with algebraic endpoint singularities can be evaluated
/// far below the double underflow threshold (x may round to 0 while log_x
/// stays finite).
struct QuadratureNode {
    double x;
    double xc;      // 1 - x
    double log_x;
    double log_xc;
    double log_w;   // log of the quadrature weight (step size included)
};

std::vector<QuadratureNode> make_nodes(QuadratureScheme scheme, int level);

/// Integrands return the natural log of their value (-inf for zero); the
/// drivers combine log-integrand and log-weights before exponentiating.
using LogIntegrand1D = std::function<double(const QuadratureNode&)>;
using LogIntegrand2D = std::function<double(const QuadratureNode&, const QuadratureNode&)>;

struct QuadratureResult {
    double value;
    double error_estimate;  // |last refinement step|
    int level;
};

QuadratureResult integrate_unit_interval(const LogIntegrand1D& log_f, const QuadratureSpec& spec);
QuadratureResult integrate_unit_square(const LogIntegrand2D& log_f, const QuadratureSpec& spec);

/// log(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b);

}  // namespace qbell
