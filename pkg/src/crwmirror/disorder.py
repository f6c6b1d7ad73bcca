"""Random realizations of the doped segment and ensemble-averaged spectra.

Reproducibility contract: realization i is drawn from its own RNG stream,
split off the master seed by index (SeedSequence spawn keys), so the i-th
realization is identical no matter how many realizations are drawn, in what
order, or across how many workers. Within a stream the Na site frequencies
are drawn first, then the Na-1 interior hoppings.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import ModelParams, incident_momentum
from .lattice import DisorderRealization, SingularSystemError, solve_scattering

DISTRIBUTIONS = ("uniform", "gaussian")


@dataclass(frozen=True)
class DisorderSpec:
    """How to draw one disordered segment.

    uniform: each omega_j uniform on [mean_omega -+ width_fraction*mean_omega]
    (interval sorted, so negative means work too), likewise each V_j around
    mean_v. gaussian: untruncated normals with the given absolute standard
    deviations; large sigma_v may flip hopping signs and that is accepted.
    """

    distribution: str
    mean_omega: float
    mean_v: float
    width_fraction: float = 0.0
    sigma_omega: float = 0.0
    sigma_v: float = 0.0
    samples: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"distribution must be one of {DISTRIBUTIONS}")
        if not 0.0 <= self.width_fraction < 1.0:
            raise ValueError("width_fraction must lie in [0, 1)")
        if self.sigma_omega < 0.0 or self.sigma_v < 0.0:
            raise ValueError("sigmas must be nonnegative")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        for name in ("mean_omega", "mean_v", "width_fraction",
                     "sigma_omega", "sigma_v"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class EnsembleSpectrum:
    """Per-detuning ensemble statistics of the transmission.

    samples counts the realizations that solved at each grid point; a value
    below the requested ensemble size flags numerical failures on that row
    (the row is kept, not aborted).
    """

    delta: np.ndarray
    mean_T: np.ndarray
    std_T: np.ndarray
    samples: np.ndarray


def sample_realization(spec: DisorderSpec, n_atoms: int,
                       stream_index: int) -> DisorderRealization:
    """Draw realization number stream_index of an Na-site segment."""
    seq = np.random.SeedSequence(entropy=spec.seed, spawn_key=(stream_index,))
    rng = np.random.default_rng(seq)
    if spec.distribution == "uniform":
        lo_o, hi_o = sorted((spec.mean_omega * (1.0 - spec.width_fraction),
                             spec.mean_omega * (1.0 + spec.width_fraction)))
        lo_v, hi_v = sorted((spec.mean_v * (1.0 - spec.width_fraction),
                             spec.mean_v * (1.0 + spec.width_fraction)))
        omega_sites = rng.uniform(lo_o, hi_o, n_atoms)
        v_bonds = rng.uniform(lo_v, hi_v, n_atoms - 1)
    else:
        omega_sites = rng.normal(spec.mean_omega, spec.sigma_omega, n_atoms)
        v_bonds = rng.normal(spec.mean_v, spec.sigma_v, n_atoms - 1)
    return DisorderRealization(omega_sites, v_bonds)


def ensemble_spectrum(spec: DisorderSpec, grid, p: ModelParams) -> EnsembleSpectrum:
    """Mean and sample standard deviation of T over the ensemble.

    The same M realizations are reused across the whole detuning grid
    (fixed disordered samples swept in energy), and the reduction runs in
    realization order, so the output is bit-stable. The grid must lie
    strictly inside the propagating band of the clean leads.
    """
    grid = np.asarray(grid, dtype=float)
    for d in grid:
        incident_momentum(p.Omega_a + d, p)  # raises if out of band / at edge
    realizations = [sample_realization(spec, p.n_atoms, i)
                    for i in range(spec.samples)]

    mean = np.empty(len(grid))
    std = np.empty(len(grid))
    count = np.empty(len(grid), dtype=int)
    for row, d in enumerate(grid):
        e = p.Omega_a + d
        values = []
        for realization in realizations:
            try:
                sol = solve_scattering(e, realization, p)
            except SingularSystemError:
                continue
            values.append(abs(sol.t) ** 2)
        count[row] = len(values)
        if not values:
            mean[row] = math.nan
            std[row] = math.nan
            continue
        arr = np.array(values)
        mean[row] = arr.mean()
        std[row] = arr.std(ddof=1) if len(arr) > 1 else 0.0
    return EnsembleSpectrum(grid.copy(), mean, std, count)
