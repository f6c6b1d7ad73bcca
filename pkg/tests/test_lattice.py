import math
from dataclasses import replace

import numpy as np
import pytest

from crwmirror import (DisorderRealization, ModelParams, SingularSystemError,
                       clean_realization, diagonalize_interaction,
                       solve_scattering)

P0 = ModelParams(omega=5.0, Omega_a=6.0, V=-1.0, g=1.0, n_atoms=1)


def test_realization_validation():
    with pytest.raises(ValueError):
        DisorderRealization(np.ones(3), np.ones(3))  # one bond too many
    with pytest.raises(ValueError):
        DisorderRealization(np.ones((2, 2)), np.ones(3))
    with pytest.raises(ValueError):
        DisorderRealization(np.array([5.0, math.inf]), np.array([-1.0]))
    r = DisorderRealization([5.0, 5.0], [-1.0])
    assert r.n_sites == 2
    assert r.omega_sites.dtype == float


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        solve_scattering(5.5, clean_realization(P0), replace(P0, n_atoms=3))


@pytest.mark.parametrize("na", [1, 2, 5])
def test_perfect_reflection_on_resonance(na):
    p = replace(P0, n_atoms=na)
    sol = solve_scattering(6.0, clean_realization(p), p)
    assert abs(sol.t) ** 2 < 1e-25
    assert abs(abs(sol.r) ** 2 - 1.0) < 1e-12


def test_transparent_without_coupling():
    p = ModelParams(5.0, 6.0, -1.0, 0.0, 4)
    for e in (4.0, 5.3, 6.5):
        sol = solve_scattering(e, clean_realization(p), p)
        assert abs(abs(sol.t) - 1.0) < 1e-12
        assert abs(sol.r) < 1e-12


rng = np.random.default_rng(17)
cases = []
for _ in range(30):
    na = int(rng.integers(1, 7))
    cases.append((
        na,
        [float(x) for x in 5.0 + rng.uniform(-0.3, 0.3, na)],
        [float(x) for x in -1.0 + rng.uniform(-0.2, 0.2, max(na - 1, 0))],
        float(rng.uniform(3.2, 6.8)),
    ))


@pytest.mark.parametrize("na,sites,bonds,E", cases)
def test_flux_conservation_disordered(na, sites, bonds, E):
    p = replace(P0, n_atoms=na)
    sol = solve_scattering(E, DisorderRealization(sites, bonds), p)
    assert abs(abs(sol.r) ** 2 + abs(sol.t) ** 2 - 1.0) < 1e-10


@pytest.mark.parametrize("na,sites,bonds,E", cases)
def test_transmission_invariant_under_segment_reversal(na, sites, bonds, E):
    p = replace(P0, n_atoms=na)
    fwd = solve_scattering(E, DisorderRealization(sites, bonds), p)
    rev = solve_scattering(E, DisorderRealization(sites[::-1], bonds[::-1]), p)
    assert abs(abs(fwd.t) ** 2 - abs(rev.t) ** 2) < 1e-12


def test_interior_amplitudes_satisfy_matching():
    # r and t are linear in the boundary amplitudes; recompute them by hand
    p = replace(P0, n_atoms=3)
    import cmath
    from crwmirror import incident_momentum
    e = 5.7
    sol = solve_scattering(e, clean_realization(p), p)
    k = incident_momentum(e, p)
    assert abs(sol.r - cmath.exp(1j * k) * (sol.photon_amps[0] - cmath.exp(1j * k))) < 1e-14
    assert abs(sol.t - cmath.exp(-3j * k) * sol.photon_amps[2]) < 1e-14


def test_singular_system_detected():
    # g = 0 with E on the bare atomic line zeroes the whole atomic block
    p = ModelParams(5.0, 6.0, -1.0, 0.0, 2)
    with pytest.raises(SingularSystemError):
        solve_scattering(6.0, clean_realization(p), p)


def test_diagonalize_single_pair():
    # one site: eigenvalues of [[omega, g], [g, Omega]] are (11 -+ sqrt 5)/2
    levels = diagonalize_interaction(clean_realization(P0), P0)
    assert np.allclose(levels, [(11 - math.sqrt(5)) / 2, (11 + math.sqrt(5)) / 2],
                       rtol=0, atol=1e-12)


def test_diagonalize_decoupled_blocks():
    p = ModelParams(5.0, 6.0, -1.0, 0.0, 4)
    levels = diagonalize_interaction(clean_realization(p), p)
    pm = np.arange(1, 5) * math.pi / 5
    expected = np.sort(np.concatenate([5.0 + 2.0 * p.V * np.cos(pm),
                                       np.full(4, 6.0)]))
    assert np.allclose(levels, expected, rtol=0, atol=1e-12)
