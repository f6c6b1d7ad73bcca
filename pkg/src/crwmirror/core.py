"""Model parameters, lattice dispersion, and the interaction-region momentum.

Energies are quoted in units of the atom-cavity coupling g (g=1 by default).
The photon band of the undoped chain is E(k) = omega + 2 V cos k; inside the
doped segment each cavity adds the energy-dependent potential
w(E) = g^2 / (E - Omega_a), which turns the interior momentum k' complex for
detunings inside the reflection gap.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

# |E - Omega_a| below RESONANCE_TOL*g takes the direct-solve path: w(E)
# overflows at the pole while the explicit 2*Na system stays regular there.
RESONANCE_TOL = 1e-12
# |sin k| or ||cos k'| - 1| below EDGE_TOL is treated as an exact edge,
# where the closed-form amplitude is a removable 0/0.
EDGE_TOL = 1e-12


class OutOfBandError(ValueError):
    """Incident energy outside the propagating band of the leads."""


class BandEdgeError(ValueError):
    """Incident energy exactly at a band edge; no propagating incidence."""


class ResonanceError(ValueError):
    """Energy at the atomic resonance, where w(E) diverges."""


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the doped chain, all in units of g.

    omega    bare cavity frequency
    Omega_a  atomic level spacing
    V        nearest-neighbor photon hopping (nonzero)
    g        atom-cavity coupling, the energy unit
    n_atoms  number of doped cavities
    """

    omega: float
    Omega_a: float
    V: float
    g: float = 1.0
    n_atoms: int = 1

    def __post_init__(self):
        for name in ("omega", "Omega_a", "V", "g"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.V == 0.0:
            raise ValueError("V must be nonzero (photon could not hop)")
        if self.n_atoms < 1 or self.n_atoms != int(self.n_atoms):
            raise ValueError("n_atoms must be a positive integer")

    @property
    def delta(self) -> float:
        """Cavity-atom detuning omega - Omega_a."""
        return self.omega - self.Omega_a

    @property
    def band_min(self) -> float:
        return self.omega - 2.0 * abs(self.V)

    @property
    def band_max(self) -> float:
        return self.omega + 2.0 * abs(self.V)


class Branch(Enum):
    PROPAGATING = "propagating"
    EVANESCENT_EVEN = "evanescent-even"
    EVANESCENT_ODD = "evanescent-odd"
    EDGE = "edge"


@dataclass(frozen=True)
class ComplexMomentum:
    """Interior momentum k' with its branch tag.

    Canonical representative: Im(k') >= 0, real part 0 (even branch) or pi
    (odd branch) for evanescent solutions, k' in (0, pi) when propagating.
    """

    value: complex
    branch: Branch


class EnergyRegion(Enum):
    OUTSIDE_BAND = "outside-band"
    BAND_EDGE = "band-edge"
    PROPAGATING = "propagating"
    GAP = "gap"
    RESONANCE = "resonance"


def dispersion(k: float, p: ModelParams) -> float:
    """Lead dispersion E(k) = omega + 2 V cos k."""
    return p.omega + 2.0 * p.V * math.cos(k)


def incident_momentum(E: float, p: ModelParams) -> float:
    """Momentum of the incoming wave at energy E.

    Picks the root of cos k = (E - omega)/(2V) whose group velocity
    -2 V sin k is positive, so the e^{ikj} wave runs toward larger site
    index: k in (0, pi) for V < 0, k in (-pi, 0) for V > 0.
    """
    x = (E - p.omega) / (2.0 * p.V)
    if abs(x) > 1.0:
        raise OutOfBandError(f"E={E!r} outside band [{p.band_min!r}, {p.band_max!r}]")
    s = math.sqrt(max(0.0, 1.0 - x * x))
    if s < EDGE_TOL:
        raise BandEdgeError(f"E={E!r} at a band edge (sin k = 0)")
    k = math.acos(x)
    return k if p.V < 0.0 else -k


def effective_potential_strength(E: float, p: ModelParams) -> float:
    """Strength w(E) = g^2/(E - Omega_a) of the resonant comb potential."""
    if p.g == 0.0:
        return 0.0
    if abs(E - p.Omega_a) < RESONANCE_TOL * abs(p.g):
        raise ResonanceError(f"E={E!r} at the atomic resonance, w(E) divergent")
    return p.g * p.g / (E - p.Omega_a)


def interaction_momentum(E: float, p: ModelParams) -> ComplexMomentum:
    """Interior momentum k' with 2 V cos k' = 2 V cos k - w(E).

    With c = cos k - w/(2V): |c| < 1 propagating, c > 1 evanescent-even
    (k' = i*arccosh(c)), c < -1 evanescent-odd (k' = pi + i*arccosh(-c)).
    """
    k = incident_momentum(E, p)
    w = effective_potential_strength(E, p)
    c = math.cos(k) - w / (2.0 * p.V)
    if abs(abs(c) - 1.0) < EDGE_TOL:
        return ComplexMomentum(complex(0.0 if c > 0.0 else math.pi, 0.0), Branch.EDGE)
    if c > 1.0:
        return ComplexMomentum(complex(0.0, math.acosh(c)), Branch.EVANESCENT_EVEN)
    if c < -1.0:
        return ComplexMomentum(complex(math.pi, math.acosh(-c)), Branch.EVANESCENT_ODD)
    return ComplexMomentum(complex(math.acos(c), 0.0), Branch.PROPAGATING)


def classify_energy(E: float, p: ModelParams) -> EnergyRegion:
    """Region tag for E, tested in priority order.

    outside-band, band-edge, resonance, then gap (k' evanescent or at an
    edge of the interior zone) versus propagating (k' real).
    """
    x = (E - p.omega) / (2.0 * p.V)
    if abs(x) > 1.0:
        return EnergyRegion.OUTSIDE_BAND
    if math.sqrt(max(0.0, 1.0 - x * x)) < EDGE_TOL:
        return EnergyRegion.BAND_EDGE
    if p.g != 0.0 and abs(E - p.Omega_a) < RESONANCE_TOL * abs(p.g):
        return EnergyRegion.RESONANCE
    km = interaction_momentum(E, p)
    if km.branch is Branch.PROPAGATING:
        return EnergyRegion.PROPAGATING
    return EnergyRegion.GAP


def _canonical_acos(c: complex) -> complex:
    """Principal arccos folded onto the Im >= 0 branch (cos is even)."""
    kp = cmath.acos(c)
    if kp.imag < 0.0:
        kp = -kp
    return kp
