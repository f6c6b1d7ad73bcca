"""Boundary-matched direct solve of the single-excitation scattering problem.

The semi-infinite clean leads are eliminated analytically, leaving a dense
2*Na complex system over the doped segment (photon amplitude and atomic
amplitude per site). This is the brute-force oracle for the closed-form
amplitudes, the regular path at the atomic resonance and at interior band
edges, and the engine for disordered realizations.
"""

import cmath
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve

from .core import ModelParams, incident_momentum

# pivot floor, relative to the largest matrix entry
PIVOT_TOL = 1e-14
# accepted backward-error bound for every solve
RESIDUAL_TOL = 1e-11


class SingularSystemError(RuntimeError):
    """The boundary-matched system is numerically singular at this energy."""


@dataclass(frozen=True)
class DisorderRealization:
    """Site frequencies and interior hoppings of one doped segment.

    omega_sites has length Na, v_bonds length Na-1. The bonds joining the
    segment to the leads are not here: they belong to the leads and always
    carry the clean V.
    """

    omega_sites: np.ndarray
    v_bonds: np.ndarray

    def __post_init__(self):
        omega_sites = np.asarray(self.omega_sites, dtype=float)
        v_bonds = np.asarray(self.v_bonds, dtype=float)
        if omega_sites.ndim != 1 or v_bonds.ndim != 1:
            raise ValueError("realization arrays must be one-dimensional")
        if len(v_bonds) != len(omega_sites) - 1:
            raise ValueError("need exactly one bond fewer than sites")
        if not (np.all(np.isfinite(omega_sites)) and np.all(np.isfinite(v_bonds))):
            raise ValueError("realization entries must be finite")
        object.__setattr__(self, "omega_sites", omega_sites)
        object.__setattr__(self, "v_bonds", v_bonds)

    @property
    def n_sites(self) -> int:
        return len(self.omega_sites)


@dataclass(frozen=True)
class InteriorSolution:
    """Interior amplitudes and the matched lead amplitudes r, t."""

    photon_amps: np.ndarray
    atom_amps: np.ndarray
    r: complex
    t: complex


def clean_realization(p: ModelParams) -> DisorderRealization:
    """All sites at omega, all interior bonds at V."""
    return DisorderRealization(
        np.full(p.n_atoms, p.omega), np.full(p.n_atoms - 1, p.V)
    )


def _assemble(E, realization, p):
    na = realization.n_sites
    n = 2 * na
    m = np.zeros((n, n), dtype=complex)
    j = np.arange(na)
    m[j, j] = realization.omega_sites - E
    m[j[:-1], j[1:]] = realization.v_bonds
    m[j[1:], j[:-1]] = realization.v_bonds
    m[j, na + j] = p.g
    m[na + j, j] = p.g
    m[na + j, na + j] = p.Omega_a - E
    return m


def solve_scattering(E: float, realization: DisorderRealization,
                     p: ModelParams) -> InteriorSolution:
    """Solve the doped segment at energy E and match to the clean leads.

    The lead momentum k comes from the clean dispersion, so E must lie
    strictly inside the leads' band; E = Omega_a is fine here. Eliminating
    the leads adds the self-energy V e^{ik} at the two boundary sites (both
    terms land on the single site when Na = 1) and the incoming wave sources
    the first photon row with V (e^{2ik} - 1). Lead amplitudes follow from
    continuity: r = e^{ik} (phi_1 - e^{ik}), t = e^{-ik Na} phi_Na.
    """
    if realization.n_sites != p.n_atoms:
        raise ValueError("realization length does not match n_atoms")
    k = incident_momentum(E, p)
    na = p.n_atoms
    m = _assemble(E, realization, p)
    self_energy = p.V * cmath.exp(1j * k)
    m[0, 0] += self_energy
    m[na - 1, na - 1] += self_energy
    s = np.zeros(2 * na, dtype=complex)
    s[0] = p.V * (cmath.exp(2j * k) - 1.0)

    with warnings.catch_warnings():
        # the pivot check below raises a typed error instead
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(m)
    scale = np.abs(m).max()
    if np.abs(np.diag(lu)).min() < PIVOT_TOL * scale:
        raise SingularSystemError(f"pivot collapse at E={E!r}")
    phi = lu_solve((lu, piv), s)
    residual = np.linalg.norm(m @ phi - s)
    bound = RESIDUAL_TOL * (np.linalg.norm(m) * np.linalg.norm(phi)
                            + np.linalg.norm(s))
    if residual > bound:
        raise SingularSystemError(
            f"residual {residual:.3e} above bound {bound:.3e} at E={E!r}")

    r = cmath.exp(1j * k) * (phi[0] - cmath.exp(1j * k))
    t = cmath.exp(-1j * k * na) * phi[na - 1]
    return InteriorSolution(phi[:na].copy(), phi[na:].copy(), r, t)


def diagonalize_interaction(realization: DisorderRealization,
                            p: ModelParams) -> np.ndarray:
    """Eigenvalues of the isolated doped segment, ascending.

    The Hermitian 2*Na single-excitation matrix with no lead self-energy
    and no source; the dense oracle for the analytic two-band spectrum.
    """
    na = realization.n_sites
    h = np.zeros((2 * na, 2 * na), dtype=float)
    j = np.arange(na)
    h[j, j] = realization.omega_sites
    h[j[:-1], j[1:]] = realization.v_bonds
    h[j[1:], j[:-1]] = realization.v_bonds
    h[j, na + j] = p.g
    h[na + j, j] = p.g
    h[na + j, na + j] = p.Omega_a
    return np.linalg.eigvalsh(h)
