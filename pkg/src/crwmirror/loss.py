"""Lossy transmission and reflection via complex cavity and atom frequencies.

Decay enters phenomenologically as omega -> omega - i gamma_c inside the
segment and Omega_a -> Omega_a - i gamma_a, which shifts only the comb
strength: w_L = g^2 / (E_L - Omega_a + i gamma_a) with E_L = E - i gamma_c.
The incident leads stay lossless, so k is real and the scattering formulas
keep their lossless shape with complex k' and coefficients. Note the rates
enter only through gamma_a - gamma_c: equal rates reproduce the lossless
coefficients exactly, and that case (including the w_L pole at resonance)
is served by the lossless path.
"""

import cmath
import math
from dataclasses import dataclass

from .core import ModelParams, _canonical_acos, incident_momentum
from .scattering import transmission


@dataclass(frozen=True)
class LossParams:
    """Atomic decay and cavity leakage rates, in units of g."""

    gamma_a: float = 0.0
    gamma_c: float = 0.0

    def __post_init__(self):
        for name in ("gamma_a", "gamma_c"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"{name} must be finite and nonnegative")


def _lossy_coefficients(E, loss, p):
    k = incident_momentum(E, p)
    e_lossy = complex(E, -loss.gamma_c)
    w = p.g * p.g / (e_lossy - p.Omega_a + 1j * loss.gamma_a)
    kp = _canonical_acos(math.cos(k) - w / (2.0 * p.V))
    c_coef = p.V * cmath.exp(-1j * kp) - p.V * cmath.exp(-1j * k) + w
    d_coef = p.V * cmath.exp(1j * kp) - p.V * cmath.exp(-1j * k) + w
    return k, kp, c_coef, d_coef


def lossy_transmission(E: float, loss: LossParams,
                       p: ModelParams) -> tuple[float, complex, complex | None]:
    """T_L with its amplitude and the lossy interior momentum.

    Returns (T_L, t_L, k_prime_L); k_prime_L is None only on the delegated
    equal-rates path at the atomic resonance, where w has no finite value.
    """
    if loss.gamma_a == loss.gamma_c:
        res = transmission(E, p)
        kp = None if res.k_prime is None else res.k_prime.value
        return res.T, res.t, kp
    k, kp, c_coef, d_coef = _lossy_coefficients(E, loss, p)
    m = p.n_atoms - 1
    grow = cmath.exp(1j * m * kp)  # decays, Im k' >= 0
    num = 4.0 * p.V * p.V * math.sin(k) * cmath.sin(kp) * grow
    den = c_coef * c_coef * grow * grow - d_coef * d_coef
    t = cmath.exp(-1j * k * m) * num / den
    return abs(t) ** 2, t, kp


def lossy_reflection(E: float, loss: LossParams, p: ModelParams) -> float:
    """R_L = |i 2V sin k (C - D e^{-2ik'(Na-1)})/(C^2 - D^2 e^{-2ik'(Na-1)}) - 1|^2."""
    if loss.gamma_a == loss.gamma_c:
        return transmission(E, p).R
    k, kp, c_coef, d_coef = _lossy_coefficients(E, loss, p)
    m = p.n_atoms - 1
    grow2 = cmath.exp(2j * m * kp)
    r = (2j * p.V * math.sin(k) * (c_coef * grow2 - d_coef)
         / (c_coef * c_coef * grow2 - d_coef * d_coef) - 1.0)
    return abs(r) ** 2


def current_deficit_spectrum(grid, loss: LossParams,
                             p: ModelParams) -> list[tuple[float, float]]:
    """Rows (delta, 1 - R_L - T_L) in grid order; zero without loss."""
    rows = []
    for d in grid:
        e = p.Omega_a + float(d)
        t_l, _, _ = lossy_transmission(e, loss, p)
        r_l = lossy_reflection(e, loss, p)
        rows.append((float(d), 1.0 - r_l - t_l))
    return rows
