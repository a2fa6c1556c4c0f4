"""Maximal quantum violations of the two-setting d-outcome Bell inequality.

Thin Python layer over the C++ core: Schmidt states, the conjectured-optimal
Fourier measurement bases, the Bell functional and its Toeplitz closed form,
the principal-eigenvector optimizer, and the continuum-limit machinery.
"""

from qbell._core import (
    DeterministicStrategy,
    EigenResult,
    JointDistribution,
    MeasurementBasis,
    Party,
    SchmidtState,
    ToeplitzKernel,
    approximate_entropy_ratio,
    approximate_state,
    bell_value,
    best_basis,
    closed_form,
    corner_bound_closed_form,
    digamma,
    entropy,
    entropy_ratio_sweep,
    expectation,
    f_delta,
    gamma_fn,
    i_delta_closed_form,
    joint_distribution,
    lhv_minimum,
    lhv_value,
    m_functional,
    make_state,
    matvec_fft,
    matvec_naive,
    optimal_state,
    uniform_state,
)

__all__ = [
    "DeterministicStrategy",
    "EigenResult",
    "JointDistribution",
    "MeasurementBasis",
    "Party",
    "SchmidtState",
    "ToeplitzKernel",
    "approximate_entropy_ratio",
    "approximate_state",
    "bell_value",
    "best_basis",
    "closed_form",
    "corner_bound_closed_form",
    "digamma",
    "entropy",
    "entropy_ratio_sweep",
    "expectation",
    "f_delta",
    "gamma_fn",
    "i_delta_closed_form",
    "joint_distribution",
    "lhv_minimum",
    "lhv_value",
    "m_functional",
    "make_state",
    "matvec_fft",
    "matvec_naive",
    "optimal_state",
    "uniform_state",
]

__version__ = "0.1.0"
