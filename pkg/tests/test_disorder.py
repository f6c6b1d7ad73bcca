import math
from dataclasses import replace

import numpy as np
import pytest

from crwmirror import (DisorderSpec, ModelParams, OutOfBandError,
                       clean_realization, ensemble_spectrum,
                       sample_realization, solve_scattering)

P10 = ModelParams(omega=5.0, Omega_a=6.0, V=-1.0, g=1.0, n_atoms=10)


def test_spec_validation():
    with pytest.raises(ValueError):
        DisorderSpec("poisson", 5.0, -1.0)
    with pytest.raises(ValueError):
        DisorderSpec("uniform", 5.0, -1.0, width_fraction=1.0)
    with pytest.raises(ValueError):
        DisorderSpec("gaussian", 5.0, -1.0, sigma_omega=-0.1)
    with pytest.raises(ValueError):
        DisorderSpec("uniform", 5.0, -1.0, samples=0)
    with pytest.raises(ValueError):
        DisorderSpec("uniform", math.inf, -1.0)


def test_zero_width_reproduces_clean_segment():
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.0, seed=9)
    realization = sample_realization(spec, 6, 0)
    clean = clean_realization(replace(P10, n_atoms=6))
    assert np.array_equal(realization.omega_sites, clean.omega_sites)
    assert np.array_equal(realization.v_bonds, clean.v_bonds)


def test_uniform_bounds_with_negative_mean():
    # mean_v < 0: the sampling interval must still be ordered correctly
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.2, seed=1)
    realization = sample_realization(spec, 100000, 0)
    assert realization.omega_sites.min() >= 4.0
    assert realization.omega_sites.max() <= 6.0
    assert realization.v_bonds.min() >= -1.2
    assert realization.v_bonds.max() <= -0.8
    # the draws fill their range
    assert realization.v_bonds.max() > -0.801
    assert realization.v_bonds.min() < -1.199


def test_gaussian_moments():
    spec = DisorderSpec("gaussian", 5.0, -1.0, sigma_omega=0.3, sigma_v=0.05,
                        seed=2)
    realization = sample_realization(spec, 200000, 0)
    assert abs(realization.omega_sites.mean() - 5.0) < 0.005
    assert abs(realization.omega_sites.std() - 0.3) < 0.005
    assert abs(realization.v_bonds.std() - 0.05) < 0.001


def test_streams_are_independent_and_reproducible():
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.2, seed=3)
    again = sample_realization(spec, 10, 4)
    other = sample_realization(spec, 10, 5)
    assert np.array_equal(sample_realization(spec, 10, 4).omega_sites,
                          again.omega_sites)
    assert not np.array_equal(again.omega_sites, other.omega_sites)
    # realization i does not depend on how many others were drawn
    series = [sample_realization(spec, 10, i) for i in range(6)]
    assert np.array_equal(series[4].omega_sites, again.omega_sites)
    assert np.array_equal(series[4].v_bonds, again.v_bonds)


def test_seed_changes_the_ensemble():
    a = sample_realization(DisorderSpec("uniform", 5.0, -1.0, 0.2, seed=0), 10, 0)
    b = sample_realization(DisorderSpec("uniform", 5.0, -1.0, 0.2, seed=1), 10, 0)
    assert not np.array_equal(a.omega_sites, b.omega_sites)


def test_sites_drawn_before_bonds():
    # growing the segment must keep the leading site draws identical
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.2, seed=7)
    short = sample_realization(spec, 4, 0)
    longer = sample_realization(spec, 6, 0)
    assert short.omega_sites.shape == (4,)
    assert short.v_bonds.shape == (3,)
    assert np.array_equal(longer.omega_sites[:4], short.omega_sites)


def test_ensemble_statistics_definition():
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.2, samples=2,
                        seed=11)
    grid = np.array([0.4])
    es = ensemble_spectrum(spec, grid, P10)
    ts = []
    for i in range(2):
        realization = sample_realization(spec, 10, i)
        ts.append(abs(solve_scattering(6.4, realization, P10).t) ** 2)
    ts = np.array(ts)
    assert es.mean_T[0] == ts.mean()
    assert es.std_T[0] == ts.std(ddof=1)
    assert es.samples[0] == 2


def test_single_sample_has_zero_spread():
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.2, samples=1,
                        seed=11)
    es = ensemble_spectrum(spec, np.array([0.4]), P10)
    assert es.std_T[0] == 0.0


def test_rows_follow_grid_order():
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.1, samples=3,
                        seed=0)
    grid = np.array([0.5, -0.5, 0.1])
    es = ensemble_spectrum(spec, grid, P10)
    assert np.array_equal(es.delta, grid)
    assert es.mean_T.shape == (3,)


def test_grid_must_stay_in_band():
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.1, samples=2)
    with pytest.raises(OutOfBandError):
        ensemble_spectrum(spec, np.array([0.5, 1.5]), P10)


def test_resonant_reflection_survives_segment_disorder():
    # the atoms themselves are clean, so the resonance stays perfectly opaque
    spec = DisorderSpec("uniform", 5.0, -1.0, width_fraction=0.2, samples=50,
                        seed=13)
    es = ensemble_spectrum(spec, np.array([0.0]), replace(P10, n_atoms=4))
    assert es.mean_T[0] < 1e-15


def test_stronger_disorder_dims_transmission():
    grid = np.array([0.5])
    p5 = replace(P10, n_atoms=5)
    means = []
    for sigma in (0.05, 0.3, 0.8):
        spec = DisorderSpec("gaussian", 5.0, -1.0, sigma_omega=sigma,
                            samples=200, seed=99)
        means.append(ensemble_spectrum(spec, grid, p5).mean_T[0])
    assert means[0] > means[1] > means[2]
