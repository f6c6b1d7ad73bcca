"""Closed-form transmission and reflection through the doped segment.

The Na-atom amplitudes follow from matching plane (or evanescent) waves at
the segment boundaries. With a = e^{ik}, b = e^{ik'} and the matching
coefficients A = V e^{-ik'} - V e^{-ik} + w and B = V e^{ik'} - V e^{-ik} + w,

    t = e^{-ik (Na-1)} 4 V^2 sin k sin k'
        / (A^2 e^{ik'(Na-1)} - B^2 e^{-ik'(Na-1)})
    r = V (a^2 - 1)(B - A b^{2 Na}) / (b B^2 - A^2 b^{2 Na - 1}) - 1

Both are evaluated in a rescaled form so that exp(Im k' * Na) never
overflows; only |t|^2 is contractual, the phases match the direct solve.
"""

import cmath
import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .core import (Branch, ComplexMomentum, EnergyRegion, ModelParams,
                   classify_energy, effective_potential_strength,
                   incident_momentum, interaction_momentum)
from .lattice import clean_realization, solve_scattering


class DegeneratePacketError(ValueError):
    """Wave packet has no support inside the propagating band."""


@dataclass(frozen=True)
class ScatteringResult:
    """Amplitudes and coefficients at one incident energy.

    k_prime is None on the resonance path, where w(E) has no finite value
    and the coefficients come from the direct solve instead.
    """

    r: complex
    t: complex
    T: float
    R: float
    k: float
    k_prime: ComplexMomentum | None
    region: EnergyRegion


def _closed_form(k, km, w, p):
    kp = km.value
    m = p.n_atoms - 1
    eik = cmath.exp(1j * k)
    a_coef = p.V * cmath.exp(-1j * kp) - p.V / eik + w
    b_coef = p.V * cmath.exp(1j * kp) - p.V / eik + w
    # e^{i k' m} decays on the canonical branch (Im k' >= 0); multiply
    # numerator and denominator by it so nothing grows with Na
    grow = cmath.exp(1j * m * kp)
    num = 4.0 * p.V * p.V * math.sin(k) * cmath.sin(kp) * grow
    den = a_coef * a_coef * grow * grow - b_coef * b_coef
    t = cmath.exp(-1j * k * m) * num / den
    r_num = b_coef - a_coef * cmath.exp(2j * p.n_atoms * kp)
    r_den = cmath.exp(1j * kp) * (b_coef * b_coef - a_coef * a_coef * grow * grow)
    r = p.V * (eik * eik - 1.0) * r_num / r_den - 1.0
    return r, t


def transmission(E: float, p: ModelParams) -> ScatteringResult:
    """Scattering coefficients at incident energy E.

    At the atomic resonance and at interior band edges (k' within tolerance
    of 0 or pi, where the closed form is a removable 0/0) the result comes
    from the boundary-matched direct solve on the clean realization; both
    paths agree to solver precision everywhere else.
    """
    k = incident_momentum(E, p)
    region = classify_energy(E, p)
    if region is EnergyRegion.RESONANCE:
        sol = solve_scattering(E, clean_realization(p), p)
        return ScatteringResult(sol.r, sol.t, abs(sol.t) ** 2, abs(sol.r) ** 2,
                                k, None, region)
    km = interaction_momentum(E, p)
    if km.branch is Branch.EDGE:
        sol = solve_scattering(E, clean_realization(p), p)
        return ScatteringResult(sol.r, sol.t, abs(sol.t) ** 2, abs(sol.r) ** 2,
                                k, km, region)
    w = effective_potential_strength(E, p)
    r, t = _closed_form(k, km, w, p)
    big_t = min(abs(t) ** 2, 1.0)
    return ScatteringResult(r, t, big_t, 1.0 - big_t, k, km, region)


def single_atom_amplitudes(E: float, p: ModelParams) -> tuple[complex, complex]:
    """Reflection and transmission amplitudes off one doped cavity.

    Regular at the resonance (r1 = -1, t1 = 0 there), unlike w(E).
    """
    k = incident_momentum(E, p)
    if p.g == 0.0:
        return 0.0 + 0.0j, 1.0 + 0.0j
    q = 2j * p.V * (E - p.Omega_a) * math.sin(k)
    g2 = p.g * p.g
    return g2 / (-q - g2), q / (q + g2)


def incoherent_transmission(E: float, p: ModelParams) -> float:
    """Product approximation |t1|^(2 Na): sequential scatterers, no
    inter-atom interference, hence no resonant transmission peaks."""
    _, t1 = single_atom_amplitudes(E, p)
    return abs(t1) ** (2 * p.n_atoms)


def leading_order_coefficients(p: ModelParams) -> tuple[float, float]:
    """Coefficients of Delta^(2 Na) in the small-detuning expansions.

    exact:      (V/g^2)^(2 Na) * (4 V^2 - delta^2) / V^2
    incoherent: ((4 V^2 - delta^2)/g^4)^Na

    Meaningful only when 4 V^2 > delta^2, i.e. the resonance sits inside
    the propagating band; returned unchanged (with a warning) otherwise.
    """
    d = p.delta
    lead = 4.0 * p.V * p.V - d * d
    if lead <= 0.0:
        warnings.warn("resonance outside the propagating band; "
                      "expansion coefficients are not meaningful",
                      stacklevel=2)
    g2 = p.g * p.g
    exact = (p.V / g2) ** (2 * p.n_atoms) * lead / (p.V * p.V)
    incoherent = (lead / (g2 * g2)) ** p.n_atoms
    return exact, incoherent


def convergence_scan(delta: float, p: ModelParams,
                     na_list) -> list[tuple[int, float]]:
    """Transmission at fixed detuning as the atom count varies."""
    out = []
    for na in na_list:
        q = replace(p, n_atoms=int(na))
        out.append((int(na), transmission(p.Omega_a + delta, q).T))
    return out


def packet_reflectivity(center: float, width: float, p: ModelParams,
                        quadrature_points: int = 129) -> float:
    """Reflectivity of a Gaussian packet of detunings.

    Weight |f(Delta)|^2 ~ exp(-(Delta-center)^2 / (2 width^2)) truncated to
    the propagating band and to center +- 8 width; uniform trapezoid rule
    on the truncated support (R is smooth away from the band edges, which
    the truncation keeps out).
    """
    if quadrature_points < 16:
        raise ValueError("need at least 16 quadrature points")
    if width < 0.0:
        raise ValueError("width must be nonnegative")
    pad = 1e-9 * 4.0 * abs(p.V)
    lo_band = p.band_min - p.Omega_a + pad
    hi_band = p.band_max - p.Omega_a - pad
    lo = max(center - 8.0 * width, lo_band)
    hi = min(center + 8.0 * width, hi_band)
    if hi < lo:
        raise DegeneratePacketError("packet support misses the band")
    if hi == lo:
        return transmission(p.Omega_a + lo, p).R
    nodes = np.linspace(lo, hi, quadrature_points)
    weight = np.exp(-((nodes - center) ** 2) / (2.0 * width * width))
    refl = np.array([transmission(p.Omega_a + d, p).R for d in nodes])

    def trap(y):
        # uniform step; the step length cancels in the ratio below
        return y.sum() - 0.5 * (y[0] + y[-1])

    return trap(weight * refl) / trap(weight)
