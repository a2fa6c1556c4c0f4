#pragma once

#include "qbell/quadrature.hpp"

namespace qbell {

/// The one-parameter trial family: f_delta(x) proportional to
/// (x(1-x))^(delta-1/2), normalized so that the square integrates to 1.
struct ContinuumAnsatz {
    double delta;
    double normalization;  // the exact gamma/pi prefactor
};

/// Validates delta in (0, 1/4) and precomputes the prefactor.
ContinuumAnsatz make_ansatz(double delta);

/// Pointwise value of the ansatz; x strictly inside (0,1).
double f_delta(double delta, double x);

/// int_0^1 f_delta(x)^2 dx, numerically (equals 1 up to quadrature error).
double f_delta_norm_squared(double delta, const QuadratureSpec& spec);

/// The bilinear functional M(f) = int int f(x) f(y) / cos(pi (x-y)/2) dx dy
/// evaluated at the ansatz. Always <= 2; approaches 2 as delta -> 0.
double m_functional(const ContinuumAnsatz& ansatz, const QuadratureSpec& spec);

/// M(f) for an arbitrary trial function supplied as log f(x) over the node.
double m_functional_trial(const LogIntegrand1D& log_f, const QuadratureSpec& spec);

/// The closed-form lower bound on I_delta:
///   (eps^{2 delta}/pi) [Psi(1/4-d/2) - Psi(1/4+d/2) + Psi(3/4-d/2)
///                       - Psi(3/4+d/2) + 2 pi sec(pi d)]
/// Valid for 0 <= delta < 1/2 and 0 < eps <= 1/2; tends to 2 as delta -> 0.
double i_delta_closed_form(double delta, double epsilon);

/// Exact value of the inner-corner integral
///   (4 delta/pi) int_0^eps int_0^eps (xy)^{delta-1/2}/(x+y) dx dy
/// in digamma form: (eps^{2 delta}/pi) * 2 [Psi(d/2+3/4) - Psi(d/2+1/4)].
/// (Follows from scaling plus int_0^1 t^{a-1}/(1+t) dt =
/// [Psi((a+1)/2) - Psi(a/2)]/2.) i_delta_closed_form is a strict further
/// lower bound of this quantity.
double corner_bound_closed_form(double delta, double epsilon);

struct ChainCheckResult {
    double i_delta;             // full-square integral I_delta
    double corner_integral;     // 2 * int_[0,eps] int_[1-eps,1] of the full integrand
    double middle_bound;        // (4 d/pi) int_[0,eps]^2 (xy)^{d-1/2}/(x+y), by quadrature
    double middle_closed_form;  // corner_bound_closed_form(delta, eps)
    double paper_closed_form;   // i_delta_closed_form(delta, eps)
};

/// Evaluates every member of the bound chain
///   I_delta >= corner_integral >= middle_bound = middle_closed_form
///            >= paper_closed_form > 0
/// and throws if an inequality fails beyond quadrature slack.
ChainCheckResult i_delta_chain_check(double delta, double epsilon, const QuadratureSpec& spec);

}  // namespace qbell
