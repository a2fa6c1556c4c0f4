"""Python smoke tests for the qbell extension module."""

import math

import numpy as np
import pytest
import scipy.special

import qbell

A2 = (3.0 - math.sqrt(2.0)) / 2.0


def test_make_state_normalizes():
    s = qbell.make_state([3.0, 4.0])
    assert s.coefficients == pytest.approx([0.6, 0.8], abs=1e-15)
    assert len(s) == 2
    assert s[1] == pytest.approx(0.8)


def test_make_state_rejects_bad_input():
    with pytest.raises(ValueError):
        qbell.make_state([])
    with pytest.raises(ValueError):
        qbell.make_state([1.0, -0.5])


def test_d2_headline_value():
    res = qbell.optimal_state(2)
    assert res.converged
    assert res.bell_value == pytest.approx(A2, abs=1e-10)
    assert qbell.bell_value(qbell.uniform_state(2)) == pytest.approx(A2, abs=1e-10)
    assert qbell.closed_form(qbell.uniform_state(2)) == pytest.approx(A2, abs=1e-12)


def test_joint_distribution_table():
    jd = qbell.joint_distribution(
        qbell.uniform_state(2),
        qbell.best_basis(2, qbell.Party.alice, 1),
        qbell.best_basis(2, qbell.Party.bob, 1),
    )
    t = np.array(jd.table())
    assert t.sum() == pytest.approx(1.0, abs=1e-12)
    assert t[0, 0] == pytest.approx(0.25 + math.sqrt(2.0) / 8.0, abs=1e-13)
    assert t[0, 1] == pytest.approx(0.25 - math.sqrt(2.0) / 8.0, abs=1e-13)


def test_lhv_minimum():
    value, witness = qbell.lhv_minimum(3)
    assert value == 1
    assert qbell.lhv_value(witness) == 1


def test_matvec_fft_matches_naive_and_numpy():
    rng = np.random.default_rng(42)
    d = 257
    k = qbell.ToeplitzKernel(d)
    v = rng.standard_normal(d)
    naive = np.array(qbell.matvec_naive(k, v))
    fft = np.array(qbell.matvec_fft(k, v))
    row = np.array(k.first_row)
    idx = np.abs(np.arange(d)[:, None] - np.arange(d)[None, :])
    dense = row[idx] @ v
    assert np.max(np.abs(naive - fft)) < 1e-10
    assert np.max(np.abs(naive - dense)) < 1e-10


def test_optimal_state_matches_numpy_eigensolver():
    d = 64
    k = qbell.ToeplitzKernel(d)
    row = np.array(k.first_row)
    idx = np.abs(np.arange(d)[:, None] - np.arange(d)[None, :])
    mu_np = np.linalg.eigvalsh(row[idx])[-1]
    res = qbell.optimal_state(d)
    assert res.eigenvalue == pytest.approx(mu_np, abs=1e-9)
    vec = np.array(res.eigenvector.coefficients)
    assert (vec > 0).all()


def test_entropy_against_numpy():
    s = qbell.approximate_state(1000)
    lam2 = np.array(s.coefficients) ** 2
    expected = -(lam2 * np.log(lam2)).sum()
    assert qbell.entropy(s) == pytest.approx(expected, abs=1e-12)
    ratios = [r for _, r in qbell.entropy_ratio_sweep([100, 10_000, 1_000_000])]
    assert ratios == sorted(ratios, reverse=True)
    assert all(r > 0.5 for r in ratios)


def test_digamma_and_gamma_against_scipy():
    for z in [0.02, 0.25, 0.5, 1.0, 3.7, 12.0, 50.0]:
        assert qbell.digamma(z) == pytest.approx(float(scipy.special.digamma(z)), abs=1e-12)
        assert qbell.gamma_fn(z) == pytest.approx(float(scipy.special.gamma(z)), rel=1e-13)


def test_continuum_values():
    assert qbell.i_delta_closed_form(1e-8, 0.5) == pytest.approx(2.0, abs=1e-6)
    assert qbell.corner_bound_closed_form(0.1, 0.25) == pytest.approx(1.2242690064916172, abs=1e-12)
    m = qbell.m_functional(0.1, 1e-7)
    assert m == pytest.approx(1.925557058661339, abs=1e-6)
    assert m <= 2.0 + 1e-7
    with pytest.raises(ValueError):
        qbell.f_delta(0.3, 0.5)
