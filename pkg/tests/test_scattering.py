import math
import warnings
from dataclasses import replace

import numpy as np
import pytest

from crwmirror import (DegeneratePacketError, EnergyRegion, ModelParams,
                       clean_realization, convergence_scan,
                       incoherent_transmission, interaction_momentum,
                       leading_order_coefficients, packet_reflectivity,
                       single_atom_amplitudes, solve_scattering, transmission)

P0 = ModelParams(omega=5.0, Omega_a=6.0, V=-1.0, g=1.0, n_atoms=1)

rng = np.random.default_rng(23)
cases = []
for _ in range(40):
    v = float(rng.uniform(0.5, 1.5)) * (1 if rng.random() < 0.5 else -1)
    omega = float(rng.uniform(3.0, 7.0))
    p = ModelParams(omega, omega + float(rng.uniform(-1.8, 1.8)), v,
                    float(rng.uniform(0.3, 2.0)), int(rng.integers(1, 9)))
    e = float(rng.uniform(p.band_min + 0.05, p.band_max - 0.05))
    if abs(e - p.Omega_a) < 1e-3:
        e += 0.01
    cases.append((p, e))


@pytest.mark.parametrize("p,E", cases)
def test_matches_direct_solve(p, E):
    res = transmission(E, p)
    sol = solve_scattering(E, clean_realization(p), p)
    assert abs(res.t - sol.t) < 1e-11
    assert abs(res.r - sol.r) < 1e-11


@pytest.mark.parametrize("p,E", cases)
def test_amplitude_unitarity(p, E):
    res = transmission(E, p)
    assert abs(abs(res.r) ** 2 + abs(res.t) ** 2 - 1.0) < 1e-10
    assert abs(res.R + res.T - 1.0) < 1e-12
    assert 0.0 <= res.T <= 1.0


def test_transmission_exact_rationals():
    # at delta = 1/2 the coefficients collapse to small fractions
    assert math.isclose(transmission(6.5, P0).T, 7 / 23, abs_tol=1e-14)
    assert math.isclose(transmission(6.5, replace(P0, n_atoms=2)).T, 7 / 11,
                        abs_tol=1e-14)
    assert math.isclose(transmission(6.5, replace(P0, n_atoms=3)).T, 7 / 16,
                        abs_tol=1e-14)


@pytest.mark.parametrize("na", [1, 3, 7])
def test_resonance_blocks_everything(na):
    res = transmission(6.0, replace(P0, n_atoms=na))
    assert res.region is EnergyRegion.RESONANCE
    assert res.k_prime is None
    assert res.T < 1e-25
    assert abs(res.R - 1.0) < 1e-12


def test_gap_decay_rate():
    # delta = -1/2 decays at exactly ln 2 per site, so T drops 4x per atom
    ts = [transmission(5.5, replace(P0, n_atoms=na)).T for na in range(1, 31)]
    for a, b in zip(ts, ts[1:]):
        assert b < a
    assert math.isclose(ts[20] / ts[19], 0.25, rel_tol=1e-10)


def test_hopping_sign_invariance():
    flipped = replace(P0, V=1.0, n_atoms=5)
    straight = replace(P0, n_atoms=5)
    for d in np.linspace(-2.9, 0.9, 77):
        if abs(d) < 1e-9:
            continue
        assert math.isclose(transmission(6.0 + d, straight).T,
                            transmission(6.0 + d, flipped).T, abs_tol=1e-13)


def test_single_atom_identities():
    for e in (3.7, 5.2, 6.4):
        r1, t1 = single_atom_amplitudes(e, P0)
        assert abs(t1 - (1.0 + r1)) < 1e-14
        assert abs(abs(r1) ** 2 + abs(t1) ** 2 - 1.0) < 1e-14
    r1, t1 = single_atom_amplitudes(6.0, P0)
    assert abs(r1 + 1.0) < 1e-14 and abs(t1) < 1e-14
    assert single_atom_amplitudes(5.0, ModelParams(5.0, 6.0, -1.0, 0.0)) == (0.0, 1.0)


def test_single_atom_agrees_with_full_solution():
    for e in (3.7, 5.2, 6.4):
        _, t1 = single_atom_amplitudes(e, P0)
        assert math.isclose(abs(t1) ** 2, transmission(e, P0).T, abs_tol=1e-12)


def test_incoherent_product_structure():
    p5 = replace(P0, n_atoms=5)
    _, t1 = single_atom_amplitudes(6.4, P0)
    assert math.isclose(incoherent_transmission(6.4, p5), abs(t1) ** 10,
                        abs_tol=1e-15)
    # no interference, so adding atoms can only dim the product
    vals = [incoherent_transmission(6.4, replace(P0, n_atoms=n))
            for n in range(1, 8)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_leading_coefficients_fig_params():
    assert leading_order_coefficients(replace(P0, n_atoms=2)) == (3.0, 9.0)
    assert leading_order_coefficients(P0) == (3.0, 3.0)


def test_leading_coefficients_power_law():
    # T / Delta^(2 Na) approaches the exact coefficient from below the gap scale
    for na in (1, 2, 3):
        p = replace(P0, n_atoms=na)
        exact, _ = leading_order_coefficients(p)
        d = 1e-4
        ratio = transmission(6.0 + d, p).T / d ** (2 * na)
        assert math.isclose(ratio, exact, rel_tol=1e-3)


def test_leading_coefficients_warn_outside_band():
    detached = ModelParams(10.0, 6.0, -1.0, 1.0)  # resonance below the band
    with pytest.warns(UserWarning):
        leading_order_coefficients(detached)


def test_convergence_scan_matches_pointwise():
    rows = convergence_scan(0.5, P0, [1, 2, 3])
    assert [na for na, _ in rows] == [1, 2, 3]
    for na, t in rows:
        assert t == transmission(6.5, replace(P0, n_atoms=na)).T


def test_packet_zero_width_is_pointwise():
    p = replace(P0, n_atoms=4)
    assert packet_reflectivity(0.5, 0.0, p) == transmission(6.5, p).R


def test_packet_bounded_and_near_one_on_resonance():
    p = replace(P0, n_atoms=10)
    r = packet_reflectivity(0.0, 0.05, p)
    assert 0.99 < r <= 1.0


def test_packet_average_between_extremes():
    p = replace(P0, n_atoms=3)
    # support of the packet: center +- 8 width, all inside the band here
    nodes = np.linspace(-0.7, 0.9, 161)
    rs = [transmission(6.0 + d, p).R for d in nodes]
    avg = packet_reflectivity(0.1, 0.1, p)
    assert min(rs) - 1e-6 <= avg <= max(rs) + 1e-6


def test_packet_rejects_bad_requests():
    with pytest.raises(DegeneratePacketError):
        packet_reflectivity(10.0, 0.01, P0)
    with pytest.raises(ValueError):
        packet_reflectivity(0.0, 0.1, P0, quadrature_points=8)
    with pytest.raises(ValueError):
        packet_reflectivity(0.0, -0.1, P0)


def test_long_segment_stays_finite():
    p = replace(P0, n_atoms=2000)
    for d in np.linspace(-2.9, 0.9, 20):
        res = transmission(6.0 + d, p)
        assert math.isfinite(res.T) and math.isfinite(res.R)
        assert 0.0 <= res.T <= 1.0
        assert 0.0 <= res.R <= 1.0


def test_edge_energies_served_by_direct_solve():
    # interior-edge energies hit the removable 0/0 of the closed form; the
    # result must still be finite, unitary, and continuous with neighbors
    from crwmirror import band_edges
    p = replace(P0, n_atoms=6)
    rep = band_edges(p)
    for e in (rep.E_minus, rep.E_plus):
        res = transmission(e, p)
        near = transmission(e + 1e-9, p)
        assert abs(res.T - near.T) < 1e-6
        assert abs(res.R + res.T - 1.0) < 1e-10
