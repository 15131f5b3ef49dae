"""Phonon emission through dielectric-constant modulation.

A longitudinal phonon modulates the density of the dielectric, hence its
dielectric constant, hence the image potential. This couples to the lateral
qubit through an in-plane momentum kick. The reduced rate integral runs over
the emission direction cosine g with an inner double integral D over the
vertical coordinates of the electron (s) and the polarization source (s'),
oscillatory in s'. The in-plane projection sqrt(1 - g^2) sets the oscillation
scale of the sine in D; see ``d_integral``.

The full (unreduced) kernel with the Bessel K1 weight is kept available as
``f_kernel_exact`` for validation; its small in-plane-wavenumber limit is
16 D^2 / (q_par r_B)^2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import ELECTRON_MASS, HBAR, NEON, SUBSTRATES, Material
from .numerics import (DEFAULT_SPEC, QuadratureSpec, bessel_k1,
                       integrate_adaptive, integrate_oscillatory_batch)
from .surface import BoundState, LateralTrap

S_CUTOFF = 40.0  # e^(-2s) below 2e-35 past this
SUPPRESSION_THRESHOLD = 2.0


def dielectric_variation(material: Material, relative_density_change) -> np.ndarray:
    """First-order dielectric response (eps - 1) * drho/rho to a density change."""
    if material.epsilon is None:
        raise ValueError(f"{material.name} has no dielectric constant set")
    return (material.epsilon - 1.0) * np.asarray(relative_density_change, dtype=float)


def d_integral(b: float, spec: QuadratureSpec = DEFAULT_SPEC) -> tuple[float, float]:
    """Inner double integral of the reduced modulation rate.

    D(b) = int_0^inf ds int_0^inf ds' s^2/(s+s')^2 sin(b s') e^(-2s)

    evaluated with the oscillatory semi-infinite scheme in s' (batched over
    the outer Gauss-Kronrod nodes in s) and the s integral cut at 40. For
    b -> 0, D(b) -> (b/4)(ln(2/b) - 3/2).
    """
    if b < 0.0:
        raise ValueError("b must be >= 0")
    if b == 0.0:
        return 0.0, 0.0
    inner_err = [0.0]

    def outer(s: np.ndarray) -> np.ndarray:
        def env(x: np.ndarray) -> np.ndarray:
            ss = s[:, None]
            return ss * ss / (ss + x[None, :]) ** 2 * np.exp(-2.0 * ss)

        vals, errs = integrate_oscillatory_batch(env, b)
        inner_err[0] = max(inner_err[0], float(np.max(errs)))
        return vals

    val, err = integrate_adaptive(outer, 0.0, S_CUTOFF, spec)
    return val, err + S_CUTOFF * inner_err[0]


def f_kernel_exact(q_par: float, q_z: float, state: BoundState,
                   spec: QuadratureSpec = DEFAULT_SPEC) -> tuple[float, float]:
    """Unreduced vertical kernel of the modulation coupling.

    F = 16 [ int_0^inf ds s^2 e^(-2s)
             int_0^inf ds' sin(q_z r_B s') K1(q_par r_B (s+s')) / (s+s') ]^2

    The s' integral keeps the full K1 weight instead of its 1/x asymptote;
    as q_par r_B -> 0, F approaches 16 D(q_z r_B)^2 / (q_par r_B)^2.
    Returns (F, error_estimate).
    """
    if q_par <= 0.0 or q_z <= 0.0:
        raise ValueError("f_kernel_exact requires positive wavenumbers")
    a = q_par * state.bohr_radius
    b = q_z * state.bohr_radius
    inner_err = [0.0]

    def outer(s: np.ndarray) -> np.ndarray:
        def env(x: np.ndarray) -> np.ndarray:
            ss = s[:, None]
            arg = a * (ss + x[None, :])
            return ss * ss * np.exp(-2.0 * ss) * bessel_k1(arg) / (ss + x[None, :])

        vals, errs = integrate_oscillatory_batch(env, b)
        inner_err[0] = max(inner_err[0], float(np.max(errs)))
        return vals

    amp, err = integrate_adaptive(outer, 0.0, S_CUTOFF, spec)
    total_err = err + S_CUTOFF * inner_err[0]
    return 16.0 * amp * amp, 32.0 * abs(amp) * total_err


def gamma_modulation(trap: LateralTrap, material: Material = NEON,
                     state: BoundState | None = None,
                     spec: QuadratureSpec = DEFAULT_SPEC) -> tuple[float, float]:
    """Modulation-channel relaxation rate, s^-1, with its error estimate.

    gamma = [8 R^2 w0^4 / (pi m_e rho c^7)]
            * int_0^1 dg (1-g^2) exp(-beta (1-g^2)) D(alpha sqrt(1-g^2))^2

    with alpha = (w0/c) r_B, beta = hbar w0 / (2 m_e c^2) and D the inner
    double integral. The sine scale in D carries the in-plane projection
    sqrt(1 - g^2) of the emitted phonon.
    """
    if material.density is None:
        raise ValueError(f"{material.name} has no density set")
    if trap.omega_x != trap.omega_y:
        raise ValueError("modulation rate assumes an isotropic trap")
    if state is None:
        state = BoundState.for_material(material)
    w0 = trap.omega_x
    c = material.sound_speed
    alpha = w0 / c * state.bohr_radius
    beta = HBAR * w0 / (2.0 * ELECTRON_MASS * c * c)
    pref = (8.0 * state.rydberg ** 2 * w0 ** 4
            / (np.pi * ELECTRON_MASS * material.density * c ** 7))
    inner_spec = QuadratureSpec(rel_tol=max(1e-10, 0.01 * spec.rel_tol),
                                abs_tol=0.0,
                                max_subdivisions=spec.max_subdivisions)
    inner_err = [0.0]

    def integrand(g: np.ndarray) -> np.ndarray:
        u2 = 1.0 - g * g
        out = np.empty_like(g)
        for i, u2_i in enumerate(u2):
            d, derr = d_integral(alpha * np.sqrt(u2_i), inner_spec)
            out[i] = u2_i * np.exp(-beta * u2_i) * d * d
            inner_err[0] = max(inner_err[0], 2.0 * abs(d) * derr)
        return out

    val, err = integrate_adaptive(integrand, 0.0, 1.0, spec)
    return pref * val, pref * (err + inner_err[0])


@dataclass(frozen=True)
class SubstrateDiagnostics:
    """Wavenumber matching between the trapped electron and substrate phonons.

    The electron's in-plane wavenumber content is ~1/a_x; a phonon at the
    qubit frequency in the substrate carries w0/c_substrate. When the ratio
    exceeds ~2 the form-factor overlap is negligible and direct emission into
    the substrate is suppressed.
    """

    material: str
    phonon_wavenumber: float  # 1/cm
    electron_wavenumber: float  # 1/cm
    wavenumber_ratio: float
    suppressed: bool


def substrate_suppression(trap: LateralTrap,
                          substrates: tuple[Material, ...] = SUBSTRATES
                          ) -> tuple[SubstrateDiagnostics, ...]:
    """Wavenumber-mismatch diagnostics for phonon leakage into substrates."""
    k_e = 1.0 / trap.length_x
    rows = []
    for sub in substrates:
        k_ph = trap.omega_x / sub.sound_speed
        ratio = k_e / k_ph
        rows.append(SubstrateDiagnostics(
            material=sub.name,
            phonon_wavenumber=k_ph,
            electron_wavenumber=k_e,
            wavenumber_ratio=ratio,
            suppressed=bool(ratio > SUPPRESSION_THRESHOLD),
        ))
    return tuple(rows)
