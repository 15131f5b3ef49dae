"""Relaxation and coherence of an electron's lateral motional states on solid neon.

The package computes the decay channels of the 0 -> 1 transition of the
in-plane motional qubit of a single electron bound to a solid neon surface:
free-space and cavity photon emission, and one-phonon emission through
interface displacement and dielectric modulation. One-phonon pure dephasing
vanishes identically, so every channel obeys T2 = 2 T1.
"""
from __future__ import annotations

from .constants import NEON, SAPPHIRE, SILICON, Material
from .displacement import (KernelMode, gamma_displacement, matrix_element_up,
                           u_p_average)
from .modulation import (SubstrateDiagnostics, d_integral, dielectric_variation,
                         f_kernel_exact, gamma_modulation, substrate_suppression)
from .numerics import (ConvergenceError, QuadratureSpec, bessel_k1,
                       integrate_adaptive, integrate_semi_infinite,
                       integrate_semi_infinite_oscillatory, u_p)
from .photon import (CavityParams, DispersiveLimitWarning, gamma_purcell,
                     gamma_vacuum)
from .report import (ChannelRate, CoherenceReport, build_report,
                     gamma_phi_one_phonon, sweep, thermal_occupation)
from .surface import (BoundState, LateralTrap, dephasing_form_factor,
                      image_coupling, relaxation_form_factor)

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "CavityParams",
    "ChannelRate",
    "CoherenceReport",
    "ConvergenceError",
    "DispersiveLimitWarning",
    "KernelMode",
    "LateralTrap",
    "Material",
    "NEON",
    "QuadratureSpec",
    "SAPPHIRE",
    "SILICON",
    "SubstrateDiagnostics",
    "bessel_k1",
    "build_report",
    "d_integral",
    "dephasing_form_factor",
    "dielectric_variation",
    "f_kernel_exact",
    "gamma_displacement",
    "gamma_modulation",
    "gamma_phi_one_phonon",
    "gamma_purcell",
    "gamma_vacuum",
    "image_coupling",
    "integrate_adaptive",
    "integrate_semi_infinite",
    "integrate_semi_infinite_oscillatory",
    "matrix_element_up",
    "relaxation_form_factor",
    "substrate_suppression",
    "sweep",
    "thermal_occupation",
    "u_p",
    "u_p_average",
]
