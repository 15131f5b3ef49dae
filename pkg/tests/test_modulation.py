"""Modulation-channel checks.

The double integral D gets three independent routes: the production
oscillatory scheme, a closed form through sine/cosine integrals, and a
small-argument asymptote. The full squared kernel F additionally gets a
Monte Carlo estimate with importance sampling.
"""

import math

import numpy as np
import pytest
import scipy.special

from necoh.constants import ELECTRON_MASS, HBAR, NEON, SILICON
from necoh.modulation import (
    d_integral,
    dielectric_variation,
    f_kernel_exact,
    gamma_modulation,
    substrate_suppression,
)
from necoh.numerics import QuadratureSpec
from necoh.surface import BoundState, LateralTrap

from _oracles import d_closed

FAST_SPEC = QuadratureSpec(rel_tol=1e-7, abs_tol=0.0, max_subdivisions=400)


@pytest.fixture(scope="module")
def state():
    return BoundState.for_material(NEON)


def test_dielectric_variation_linear():
    assert dielectric_variation(NEON, 0.01) == pytest.approx(0.244 * 0.01, rel=1e-14)
    assert dielectric_variation(NEON, 0.0) == 0.0


def test_d_integral_matches_closed_form():
    for b in (1e-4, 1e-3, 0.01, 0.1, 0.3):
        got, err = d_integral(b)
        assert got == pytest.approx(d_closed(b), rel=1e-6)
        assert err >= 0.0


def test_d_integral_small_b_asymptote():
    # D(b) -> (b/4)(ln(2/b) - 3/2) + (3 pi/16) b^2
    for b, tol in ((1e-4, 1e-6), (1e-3, 1e-4)):
        got, _ = d_integral(b)
        want = 0.25 * b * (math.log(2.0 / b) - 1.5) + 3.0 * math.pi / 16.0 * b * b
        assert got == pytest.approx(want, rel=tol)


def test_d_integral_zero_and_negative():
    assert d_integral(0.0) == (0.0, 0.0)
    with pytest.raises(ValueError):
        d_integral(-0.1)


def test_f_kernel_reduces_to_d_at_small_in_plane_momentum(state):
    r_b = state.bohr_radius
    qp = 1e-4 / r_b
    qz = 0.05 / r_b
    got, _ = f_kernel_exact(qp, qz, state)
    want = 16.0 * d_closed(0.05) ** 2 / (1e-4) ** 2
    assert got == pytest.approx(want, rel=1e-3)


def test_f_kernel_monte_carlo_oracle(state):
    """Importance-sampled estimate of the inner amplitude.

    s is drawn from Gamma(3, 1/2), whose density is 4 s^2 e^(-2s); s' from
    an exponential chosen to cancel half the Bessel decay.
    """
    r_b = state.bohr_radius
    bp, bz = 0.1, 0.07
    got, _ = f_kernel_exact(bp / r_b, bz / r_b, state)
    amplitude = math.sqrt(got) / 4.0

    rng = np.random.default_rng(20260822)
    n = 400_000
    s = rng.gamma(shape=3.0, scale=0.5, size=n)
    lam = 0.5 * bp
    sp = rng.exponential(scale=1.0 / lam, size=n)
    vals = (np.sin(bz * sp) * scipy.special.k1(bp * (s + sp)) / (s + sp)
            * np.exp(lam * sp) / lam)
    estimate = 0.25 * float(np.mean(vals))
    assert estimate == pytest.approx(amplitude, rel=1e-2)


def test_rate_operating_point():
    trap = LateralTrap.isotropic_ghz(6.4)
    gam, err = gamma_modulation(trap, spec=FAST_SPEC)
    assert gam == pytest.approx(887.4502, rel=1e-4)
    assert err >= 0.0
    assert err / gam < 1e-5


def test_rate_full_chain_cross_check(state):
    """Fixed Gauss-Legendre over direction, closed-form D inside."""
    trap = LateralTrap.isotropic_ghz(6.4)
    w0 = trap.omega_x
    c = NEON.sound_speed
    alpha = w0 / c * state.bohr_radius
    beta = HBAR * w0 / (2.0 * ELECTRON_MASS * c * c)
    pref = 8.0 * state.rydberg ** 2 * w0 ** 4 / (
        math.pi * ELECTRON_MASS * NEON.density * c ** 7)
    nodes, weights = np.polynomial.legendre.leggauss(80)
    g = 0.5 * (nodes + 1.0)
    u2 = 1.0 - g * g
    total = 0.5 * sum(
        w_i * u2_i * math.exp(-beta * u2_i) * d_closed(alpha * math.sqrt(u2_i)) ** 2
        for w_i, u2_i in zip(weights, u2))
    want = pref * total
    got, _ = gamma_modulation(trap, spec=FAST_SPEC)
    assert got == pytest.approx(want, rel=1e-6)


def test_rate_requires_density():
    trap = LateralTrap.isotropic_ghz(6.4)
    with pytest.raises(ValueError):
        gamma_modulation(trap, material=SILICON)


def test_rate_requires_isotropic_trap():
    with pytest.raises(ValueError):
        gamma_modulation(LateralTrap(1.0e10, 1.1e10))


def test_substrate_suppression_operating_point():
    trap = LateralTrap.isotropic_ghz(6.4)
    rows = substrate_suppression(trap)
    assert [r.material for r in rows] == ["silicon", "sapphire"]
    for row in rows:
        assert row.electron_wavenumber == pytest.approx(1.0 / trap.length_x, rel=1e-14)
        assert row.phonon_wavenumber == pytest.approx(
            trap.omega_x / (8.48e5 if row.material == "silicon" else 1.135e6),
            rel=1e-14)
        assert row.wavenumber_ratio == pytest.approx(
            row.electron_wavenumber / row.phonon_wavenumber, rel=1e-14)
        assert row.suppressed is True
    assert rows[0].wavenumber_ratio == pytest.approx(3.93, rel=1e-2)
    assert rows[1].wavenumber_ratio == pytest.approx(5.26, rel=1e-2)


def test_no_suppression_for_soft_host():
    # inside the host itself the phonon wavenumber exceeds the electron's
    trap = LateralTrap.isotropic_ghz(6.4)
    row, = substrate_suppression(trap, (NEON,))
    assert row.wavenumber_ratio < 1.0
    assert row.suppressed is False
