"""Shared fixtures: input tables generated once by driving the crwmirror CLI.

The renderer touches the physics package only through files on disk, so these
fixtures shell out to the installed command instead of importing it.
"""

import subprocess
import sys

import pytest


def _crwmirror(args, out):
    cmd = [sys.executable, "-m", "crwmirror", *args, "--out", str(out)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, f"{' '.join(cmd)}\n{proc.stderr}"
    return str(out)


@pytest.fixture(scope="session")
def tables(tmp_path_factory):
    root = tmp_path_factory.mktemp("tables")
    gauss = ["disorder", "--dist", "gauss", "--na", "10", "--samples", "48",
             "--seed", "0", "--delta-min", "-2.5", "--delta-max", "0.75",
             "--steps", "53"]
    return {
        "spectrum_na1": _crwmirror(["spectrum", "--na", "1"], root / "spectrum_na1.csv"),
        "spectrum_na2": _crwmirror(["spectrum", "--na", "2"], root / "spectrum_na2.csv"),
        "spectrum_na10_json": _crwmirror(
            ["spectrum", "--na", "10", "--format", "json"], root / "spectrum_na10.json"),
        "spectrum_na50": _crwmirror(
            ["spectrum", "--na", "50", "--steps", "801"], root / "spectrum_na50.csv"),
        "approx": _crwmirror(["spectrum-approx", "--na", "10"], root / "approx.csv"),
        "width_V": _crwmirror(
            ["bandwidth", "--axis", "V", "--min", "-2", "--max", "2", "--steps", "81"],
            root / "width_V.csv"),
        "width_g": _crwmirror(
            ["bandwidth", "--axis", "g", "--min", "0", "--max", "60", "--steps", "61"],
            root / "width_g.csv"),
        "width_Omega": _crwmirror(
            ["bandwidth", "--axis", "Omega", "--min", "4", "--max", "100", "--steps", "49"],
            root / "width_Omega.csv"),
        "width_omega": _crwmirror(
            ["bandwidth", "--axis", "omega", "--min", "3", "--max", "9", "--steps", "25"],
            root / "width_omega.csv"),
        "convergence": _crwmirror(
            ["convergence",
             "--deltas=-0.61803398874989485,0.30277563773199464,-0.65,0.35",
             "--na-min", "1", "--na-max", "60"],
            root / "convergence.csv"),
        "bands": _crwmirror(["bands", "--na", "30"], root / "bands.csv"),
        "single": _crwmirror(
            ["disorder", "--dist", "uniform", "--width-frac", "0.2", "--samples", "1",
             "--seed", "0", "--single", "--na", "10",
             "--delta-min", "-0.9", "--delta-max", "0.5", "--steps", "57"],
            root / "single.csv"),
        "ens_weak": _crwmirror(
            [*gauss, "--sigma-omega", "0.05", "--sigma-v", "0.01"], root / "ens_weak.csv"),
        "ens_mid": _crwmirror(
            [*gauss, "--sigma-omega", "0.25", "--sigma-v", "0.05"], root / "ens_mid.csv"),
        "ens_strong": _crwmirror(
            [*gauss, "--sigma-omega", "0.5", "--sigma-v", "0.1"], root / "ens_strong.csv"),
        "loss": _crwmirror(
            ["loss", "--gamma-a", "0.02", "--gamma-c", "0.01", "--na", "10",
             "--delta-min", "-2.5", "--delta-max", "0.75", "--steps", "61"],
            root / "loss.csv"),
    }


@pytest.fixture(scope="session")
def recipe_inputs(tables):
    """Recipe id -> the input table paths its tests render from."""
    return {
        "fig3a": [tables["spectrum_na1"]],
        "fig3b": [tables["spectrum_na2"]],
        "fig3c": [tables["spectrum_na10_json"]],
        "fig3d": [tables["spectrum_na50"]],
        "fig4": [tables["approx"]],
        "fig5a": [tables["width_V"]],
        "fig5b": [tables["width_g"]],
        "fig5c": [tables["width_Omega"]],
        "fig5d": [tables["width_omega"]],
        "fig6": [tables["convergence"]],
        "fig7": [tables["bands"]],
        "fig8": [tables["bands"]],
        "fig9a": [tables["single"]],
        "fig9b": [tables["ens_weak"]],
        "fig9c": [tables["ens_mid"]],
        "fig9d": [tables["ens_strong"]],
        "fig10a": [tables["loss"]],
        "fig10b": [tables["loss"]],
    }
