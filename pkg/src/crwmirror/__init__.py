"""Single-photon transport through an atom-doped coupled-resonator waveguide.

The chain carries a cosine band E(k) = omega + 2 V cos k; a segment of Na
cavities, each coupled to a two-level atom with strength g, reflects
perfectly over a finite energy band bounded by E_minus and E_plus. The
package computes the closed-form spectra, the exact boundary-matched solve
(also for disordered segments), the interaction-region band structure and
group velocities, and the phenomenological-loss coefficients. Energies are
in units of g throughout.
"""

from .bands import (BandReport, InteractionSpectrum, band_edges,
                    free_group_velocity, group_velocity, interaction_levels,
                    stopped_light_region, width_sweep)
from .core import (BandEdgeError, Branch, ComplexMomentum, EnergyRegion,
                   ModelParams, OutOfBandError, ResonanceError,
                   classify_energy, dispersion, effective_potential_strength,
                   incident_momentum, interaction_momentum)
from .disorder import (DisorderSpec, EnsembleSpectrum, ensemble_spectrum,
                       sample_realization)
from .lattice import (DisorderRealization, InteriorSolution,
                      SingularSystemError, clean_realization,
                      diagonalize_interaction, solve_scattering)
from .loss import (LossParams, current_deficit_spectrum, lossy_reflection,
                   lossy_transmission)
from .scattering import (DegeneratePacketError, ScatteringResult,
                         convergence_scan, incoherent_transmission,
                         leading_order_coefficients, packet_reflectivity,
                         single_atom_amplitudes, transmission)

__version__ = "0.1.0"

__all__ = [
    "BandEdgeError", "BandReport", "Branch", "ComplexMomentum",
    "DegeneratePacketError", "DisorderRealization", "DisorderSpec",
    "EnergyRegion", "EnsembleSpectrum", "InteractionSpectrum",
    "InteriorSolution", "LossParams", "ModelParams", "OutOfBandError",
    "ResonanceError", "ScatteringResult", "SingularSystemError",
    "band_edges", "classify_energy", "clean_realization", "convergence_scan",
    "current_deficit_spectrum", "diagonalize_interaction", "dispersion",
    "effective_potential_strength", "ensemble_spectrum",
    "free_group_velocity", "group_velocity", "incident_momentum",
    "incoherent_transmission", "interaction_levels", "interaction_momentum",
    "leading_order_coefficients", "lossy_reflection", "lossy_transmission",
    "packet_reflectivity", "sample_realization", "single_atom_amplitudes",
    "solve_scattering", "stopped_light_region", "transmission",
    "width_sweep",
]
