#pragma once

namespace qbell::special {

/// Tuning knobs for the digamma evaluation strategy.
struct SpecialFunctionConfig {
    double recurrence_threshold = 6.0;  // push z above this before using the series
    int series_terms = 7;               // Bernoulli terms of the asymptotic tail
};

/// Digamma Psi(z) = Gamma'(z)/Gamma(z) for real z > 0.
/// Absolute error <= 1e-12 on (0.01, 50].
double digamma(double z);
double digamma(double z, const SpecialFunctionConfig& cfg);

/// Gamma function for real z > 0, relative error <= 1e-13 on (0.01, 50].
double gamma_fn(double z);

/// log(Gamma(z)) for real z > 0.
double log_gamma_fn(double z);

}  // namespace qbell::special
