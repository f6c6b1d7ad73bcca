"""Perfect-reflection band edges, interaction-region spectrum, group velocity.

The reflection gap is bounded by

    E_pm = (omega + Omega_a)/2 -+ |V| +- sqrt((delta/2 -+ |V|)^2 + g^2)

and the doped segment itself carries two polariton bands

    E_int_pm(p) = (delta_p +- sqrt(delta_p^2 + 4 g^2))/2 + Omega_a

with delta_p = delta + 2 V cos p and p quantized as n pi/(Na + 1).
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import ModelParams


@dataclass(frozen=True)
class BandReport:
    """Gap-bounding energies and the assembled perfect-reflection intervals.

    intervals holds up to two closed [lo, hi] energy intervals, clipped to
    the propagating band [E_min, E_max] and split at Omega_a; width_L is
    their total length (never above 4|V|).
    """

    E_plus: float
    E_minus: float
    E_max: float
    E_min: float
    intervals: tuple[tuple[float, float], ...]
    width_L: float


@dataclass(frozen=True)
class InteractionSpectrum:
    """Two-band spectrum of the isolated doped segment.

    Arrays are indexed by n = 1..Na (mode number). Eigenvector rows are the
    full 2*Na vectors (photon components then atomic components), photon
    profile proportional to sin(p n j), unit Euclidean norm.
    """

    n: np.ndarray
    p: np.ndarray
    e_minus: np.ndarray
    e_plus: np.ndarray
    vectors_minus: np.ndarray
    vectors_plus: np.ndarray


def band_edges(p: ModelParams) -> BandReport:
    """Assemble the perfect-reflection interval(s) and their total width."""
    half = 0.5 * (p.omega + p.Omega_a)
    hd = 0.5 * p.delta
    av = abs(p.V)
    e_plus = half - av + math.sqrt((hd - av) ** 2 + p.g * p.g)
    e_minus = half + av - math.sqrt((hd + av) ** 2 + p.g * p.g)
    e_max = p.band_max
    e_min = p.band_min
    raw = (
        (max(e_minus, e_min), min(p.Omega_a, e_max)),
        (max(p.Omega_a, e_min), min(e_plus, e_max)),
    )
    intervals = tuple((lo, hi) for lo, hi in raw if lo <= hi)
    width = sum(hi - lo for lo, hi in intervals)
    return BandReport(e_plus, e_minus, e_max, e_min, intervals, width)


def width_sweep(p: ModelParams, axis: str, grid) -> list[tuple]:
    """Reflection-band width against one swept parameter.

    axis is one of V, g, Omega, omega. Rows are (value, width_L, lo1, hi1,
    lo2, hi2) with None for an absent second (or first) interval. V = 0 is
    allowed on the grid: the photon cannot hop at all, the propagating band
    has zero measure and the width is reported as 0 without building params.
    """
    field = {"V": "V", "g": "g", "Omega": "Omega_a", "omega": "omega"}[axis]
    rows = []
    for value in grid:
        value = float(value)
        if field == "V" and value == 0.0:
            rows.append((value, 0.0, None, None, None, None))
            continue
        report = band_edges(replace(p, **{field: value}))
        bounds = [None, None, None, None]
        for i, (lo, hi) in enumerate(report.intervals):
            bounds[2 * i] = lo
            bounds[2 * i + 1] = hi
        rows.append((value, report.width_L, *bounds))
    return rows


def interaction_levels(p: ModelParams) -> InteractionSpectrum:
    """All 2*Na levels of the doped segment with normalized eigenvectors."""
    na = p.n_atoms
    n = np.arange(1, na + 1)
    pn = n * math.pi / (na + 1)
    dp = p.delta + 2.0 * p.V * np.cos(pn)
    root = np.sqrt(dp * dp + 4.0 * p.g * p.g)
    e_minus = 0.5 * (dp - root) + p.Omega_a
    e_plus = 0.5 * (dp + root) + p.Omega_a

    j = np.arange(1, na + 1)
    vec_minus = np.zeros((na, 2 * na))
    vec_plus = np.zeros((na, 2 * na))
    for i in range(na):
        profile = np.sin(pn[i] * j)
        if p.g == 0.0:
            # decoupled blocks: one pure photon level, one pure atom level
            photon = np.concatenate([profile, np.zeros(na)])
            atom = np.concatenate([np.zeros(na), profile])
            photon /= np.linalg.norm(photon)
            atom /= np.linalg.norm(atom)
            photon_e = p.omega + 2.0 * p.V * math.cos(pn[i])
            lower_is_photon = photon_e <= p.Omega_a
            vec_minus[i] = photon if lower_is_photon else atom
            vec_plus[i] = atom if lower_is_photon else photon
            continue
        for energy, target in ((e_minus[i], vec_minus), (e_plus[i], vec_plus)):
            atom_amp = p.g * profile / (energy - p.Omega_a)
            full = np.concatenate([profile, atom_amp])
            target[i] = full / np.linalg.norm(full)
    return InteractionSpectrum(n, pn, e_minus, e_plus, vec_minus, vec_plus)


def group_velocity(p_val: float, branch: str, p: ModelParams) -> float:
    """Analytic dE_int_pm/dp at momentum p_val, branch 'plus' or 'minus'."""
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    dp = p.delta + 2.0 * p.V * math.cos(p_val)
    root = math.sqrt(dp * dp + 4.0 * p.g * p.g)
    sign = 1.0 if branch == "plus" else -1.0
    if root == 0.0:
        # degenerate touch (g = 0 at dp = 0): both branches share the slope
        ratio = 0.0
    else:
        ratio = dp / root
    return 0.5 * (1.0 + sign * ratio) * (-2.0 * p.V * math.sin(p_val))


def free_group_velocity(k: float, p: ModelParams) -> float:
    """Group velocity -2 V sin k of the undoped chain."""
    return -2.0 * p.V * math.sin(k)


def stopped_light_region(p: ModelParams) -> tuple[float, float]:
    """Interval with no real-p solution on either interaction band.

    Extremizing delta_p over cos p in [-1, 1]: the top of the lower band
    sits at delta_p = delta + 2|V|, the bottom of the upper band at
    delta - 2|V|. Empty (lo >= hi) when g = 0. Endpoints coincide with
    band_edges' (E_minus, E_plus).
    """
    av = abs(p.V)
    dp_hi = p.delta + 2.0 * av
    dp_lo = p.delta - 2.0 * av
    lo = 0.5 * (dp_hi - math.sqrt(dp_hi * dp_hi + 4.0 * p.g * p.g)) + p.Omega_a
    hi = 0.5 * (dp_lo + math.sqrt(dp_lo * dp_lo + 4.0 * p.g * p.g)) + p.Omega_a
    return lo, hi
