"""Quadrature engine and special-function checks.

The Bessel comparison runs against the series/integral-representation
oracle in _oracles.py, which shares no code path with the production
routine.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from necoh.numerics import (
    DEFAULT_SPEC,
    EULER_GAMMA,
    GK15_GAUSS_WEIGHTS,
    GK15_KRONROD_WEIGHTS,
    GK15_NODES,
    ConvergenceError,
    QuadratureSpec,
    bessel_k1,
    integrate_adaptive,
    integrate_oscillatory_batch,
    integrate_semi_infinite,
    integrate_semi_infinite_oscillatory,
    u_p,
)

from _oracles import h_closed, k1_reference


# --- rule tables ---

def test_weights_sum_to_interval_length():
    # the published 16-digit literals truncate; a few 1e-15 accumulate
    assert math.fsum(GK15_KRONROD_WEIGHTS) == pytest.approx(2.0, abs=1e-13)
    assert math.fsum(GK15_GAUSS_WEIGHTS) == pytest.approx(2.0, abs=1e-13)


def test_kronrod_rule_exact_through_degree_22():
    for k in range(23):
        got = float(np.sum(GK15_KRONROD_WEIGHTS * GK15_NODES ** k))
        want = 2.0 / (k + 1) if k % 2 == 0 else 0.0
        assert got == pytest.approx(want, abs=1e-13)


def test_embedded_gauss_rule_exact_through_degree_13():
    nodes = GK15_NODES[1::2]
    for k in range(14):
        got = float(np.sum(GK15_GAUSS_WEIGHTS * nodes ** k))
        want = 2.0 / (k + 1) if k % 2 == 0 else 0.0
        assert got == pytest.approx(want, abs=1e-13)


# --- adaptive integration ---

@settings(deadline=None, max_examples=60)
@given(
    coeffs=st.lists(st.floats(-5.0, 5.0, allow_nan=False), min_size=1, max_size=6),
    lo=st.floats(-10.0, 10.0, allow_nan=False),
    width=st.floats(0.1, 5.0, allow_nan=False),
)
def test_adaptive_matches_polynomial_antiderivative(coeffs, lo, width):
    hi = lo + width
    c = np.asarray(coeffs)

    def f(x):
        return np.polynomial.polynomial.polyval(x, c)

    got, err = integrate_adaptive(f, lo, hi, DEFAULT_SPEC)
    anti = np.concatenate([[0.0], c / np.arange(1, c.size + 1)])
    want = (np.polynomial.polynomial.polyval(hi, anti)
            - np.polynomial.polynomial.polyval(lo, anti))
    m = max(abs(lo), abs(hi))
    scale = float(np.sum(np.abs(anti) * m ** np.arange(anti.size))) + 1.0
    assert abs(got - want) <= 1e-9 * scale
    assert err >= 0.0


def test_adaptive_handles_log_squared_endpoint():
    got, err = integrate_adaptive(lambda x: np.log(x) ** 2, 0.0, 1.0, DEFAULT_SPEC)
    assert abs(got - 2.0) <= 10.0 * err
    assert got == pytest.approx(2.0, rel=1e-9)


def test_semi_infinite_second_moment():
    got, err = integrate_semi_infinite(lambda s: s * s * np.exp(-2.0 * s), DEFAULT_SPEC)
    assert abs(got - 0.25) <= 10.0 * err
    assert got == pytest.approx(0.25, rel=1e-9)


def test_convergence_error_carries_partial_state():
    spec = QuadratureSpec(rel_tol=1e-9, abs_tol=0.0, max_subdivisions=10)
    with pytest.raises(ConvergenceError) as info:
        integrate_adaptive(lambda x: x ** -0.9, 0.0, 1.0, spec)
    exc = info.value
    assert exc.subdivisions == 10
    assert exc.error_estimate > 0.0
    # int_0^1 x^-0.9 = 10; the partial estimate should be in the vicinity
    assert 5.0 < exc.estimate < 11.0


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=0.5)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=-1.0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=5)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=10.5)


def test_spec_tolerance_floor():
    spec = QuadratureSpec(rel_tol=1e-6, abs_tol=1e-12)
    assert spec.tolerance(2.0) == 2e-6
    assert spec.tolerance(1e-9) == 1e-12
    assert spec.tolerance(-3.0) == 3e-6


# --- oscillatory integration ---

def test_oscillatory_scalar_matches_closed_form():
    got, err = integrate_semi_infinite_oscillatory(
        lambda x: (1.0 + x) ** -2, 1.0, DEFAULT_SPEC)
    want = h_closed(1.0)
    assert want == pytest.approx(0.3433779615564269, rel=1e-13)
    assert abs(got - want) <= 10.0 * err
    assert got == pytest.approx(want, rel=1e-9)


def test_oscillatory_exponential_envelope():
    # int_0^inf e^(-a x) sin(b x) dx = b / (a^2 + b^2)
    a, b = 0.2, 0.7
    want = b / (a * a + b * b)
    got_s, _ = integrate_semi_infinite_oscillatory(
        lambda x: np.exp(-a * x), b, DEFAULT_SPEC)
    got_b, _ = integrate_oscillatory_batch(
        lambda x: np.exp(-a * x)[None, :], b)
    assert got_s == pytest.approx(want, rel=1e-9)
    assert float(got_b[0]) == pytest.approx(want, rel=1e-9)


def test_oscillatory_batch_agrees_with_scalar_path():
    def env(x):
        return 1.0 / (1.0 + x) ** 2

    for b in (0.05, 0.4, 1.3):
        got_s, _ = integrate_semi_infinite_oscillatory(env, b, DEFAULT_SPEC)
        got_b, _ = integrate_oscillatory_batch(lambda x: env(x)[None, :], b)
        assert float(got_b[0]) == pytest.approx(got_s, rel=1e-8)


def test_oscillatory_zero_frequency_is_exact_zero():
    got, err = integrate_semi_infinite_oscillatory(
        lambda x: np.exp(-x), 0.0, DEFAULT_SPEC)
    assert got == 0.0
    assert err == 0.0


def test_oscillatory_rejects_negative_frequency():
    with pytest.raises(ValueError):
        integrate_semi_infinite_oscillatory(lambda x: np.exp(-x), -1.0, DEFAULT_SPEC)


# --- special functions ---

def test_bessel_k1_matches_independent_oracle():
    grid = np.geomspace(1e-8, 700.0, 50)
    for x in grid:
        assert bessel_k1(float(x)) == pytest.approx(k1_reference(float(x)), rel=1e-10)


def test_bessel_k1_known_point():
    assert bessel_k1(1.0) == pytest.approx(0.6019072301972346, rel=1e-14)


def test_bessel_k1_rejects_nonpositive():
    with pytest.raises(ValueError):
        bessel_k1(0.0)
    with pytest.raises(ValueError):
        bessel_k1(-2.0)


def test_u_p_identity_at_one():
    # u_p(eta) = (1 - eta K1(eta)) / eta^2 collapses at eta = 1
    assert u_p(1.0) == pytest.approx(1.0 - bessel_k1(1.0), rel=1e-13)
    assert u_p(1.0) == pytest.approx(0.3980927698027654, rel=1e-13)


def test_u_p_series_branch_is_continuous():
    below = float(u_p(1e-3 * (1.0 - 1e-9)))
    above = float(u_p(1e-3 * (1.0 + 1e-9)))
    assert below == pytest.approx(above, rel=1e-9)


def test_u_p_small_eta_leading_form():
    eta = 1e-8
    want = -0.5 * (math.log(0.5 * eta) + EULER_GAMMA - 0.5)
    assert float(u_p(eta)) == pytest.approx(want, rel=1e-9)


def test_u_p_positive_and_decreasing():
    grid = np.geomspace(1e-10, 50.0, 300)
    vals = np.asarray(u_p(grid), dtype=float)
    assert np.all(vals > 0.0)
    assert np.all(np.diff(vals) < 0.0)
