"""Figure recipes: bind table columns to deterministic matplotlib renders.

Each recipe names the table columns it draws and aborts with a clear error
when an input lacks them.  No physics is computed here: the only arithmetic
on table values is presentation-level -- shifting energies by the recorded
atomic frequency so the abscissa reads as detuning, summing the two already
tabulated current fractions for a conservation panel, and the threshold scan
that locates the reflection plateau a spectrum already shows so it can be
annotated.  All numbers originate in the input files.

Rendering is pinned to the Agg backend with fixed rc settings so that
re-running on the same inputs yields byte-identical PNG files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned before pyplot)
import numpy as np  # noqa: E402

from .tables import Table, read_table  # noqa: E402

# transmission below this counts as part of a reflection plateau
DARK_THRESHOLD = 1e-3

# fixed look; rc_context keeps user matplotlibrc files from leaking in
_RC = {
    "font.family": "DejaVu Sans",
    "mathtext.fontset": "dejavusans",
    "figure.figsize": (6.4, 4.0),
    "figure.dpi": 120,
    "savefig.dpi": 120,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.axisbelow": True,
    "legend.framealpha": 1.0,
}


class RecipeError(ValueError):
    """Raised when inputs do not match what a recipe expects."""


@dataclass(frozen=True)
class FigureRecipe:
    figure_id: str
    description: str
    n_inputs: int
    required_columns: tuple  # one tuple of column names per input table
    xlabel: str
    ylabel: str
    draw: Callable  # (Axes, [Table]) -> dict of annotated values


def _series(table: Table, xname: str, yname: str):
    """Paired finite samples of two columns, skipping rows with empty cells."""
    xs, ys = [], []
    for x, y in zip(table.column(xname), table.column(yname)):
        if isinstance(x, float) and isinstance(y, float):
            xs.append(x)
            ys.append(y)
    if not xs:
        raise RecipeError(f"{table.path}: no plottable ({xname}, {yname}) rows")
    return np.asarray(xs), np.asarray(ys)


def _atoms_title(ax, table: Table) -> None:
    if "na" in table.meta:
        ax.set_title(f"$N_a = {table.meta_float('na'):g}$", fontsize=10)


def _draw_spectrum(ax, tables):
    (t,) = tables
    d, T = _series(t, "delta", "T")
    ax.plot(d, T, color="tab:blue", lw=1.3)
    ax.set_ylim(-0.02, 1.02)
    _atoms_title(ax, t)
    return {}


def _draw_spectrum_plateau(ax, tables):
    _draw_spectrum(ax, tables)
    (t,) = tables
    d, T = _series(t, "delta", "T")
    i0 = int(np.argmin(np.abs(d)))
    if not T[i0] < DARK_THRESHOLD:
        raise RecipeError(f"{t.path}: no reflection plateau at zero detuning (T={T[i0]:g})")
    lo = i0
    while lo > 0 and T[lo - 1] < DARK_THRESHOLD:
        lo -= 1
    hi = i0
    while hi < d.size - 1 and T[hi + 1] < DARK_THRESHOLD:
        hi += 1
    ax.axvspan(d[lo], d[hi], color="0.88", zorder=0)
    ax.annotate(
        f"$|t|^2 < 10^{{-3}}$ over $[{d[lo]:.3f},\\ {d[hi]:.3f}]$",
        xy=(0.5, 0.92), xycoords="axes fraction", ha="center", fontsize=9,
    )
    return {"plateau_lo": float(d[lo]), "plateau_hi": float(d[hi])}


def _draw_approx_overlay(ax, tables):
    (t,) = tables
    d, exact = _series(t, "delta", "T_exact")
    d2, product = _series(t, "delta", "T_incoherent")
    ax.plot(d, exact, color="tab:blue", lw=1.3, label="exact")
    ax.plot(d2, product, color="tab:red", ls="--", lw=1.3, label="single-atom product")
    ax.set_ylim(-0.02, 1.02)
    ax.legend(loc="upper left", fontsize=9)
    _atoms_title(ax, t)
    return {}


def _width_sweep(axis_name: str):
    def draw(ax, tables):
        (t,) = tables
        swept = t.meta.get("axis")
        if swept != axis_name:
            raise RecipeError(f"{t.path}: sweep axis is {swept!r}, recipe needs {axis_name!r}")
        value, width = _series(t, "value", "width_L")
        ax.plot(value, width, color="tab:blue", lw=1.3)
        return {}

    return draw


# one fixed style per detuning series, cycled if the table holds more
_CONVERGENCE_STYLES = (
    ("tab:blue", ":"),
    ("tab:red", "--"),
    ("tab:purple", ":"),
    ("tab:brown", "-."),
)


def _draw_convergence(ax, tables):
    (t,) = tables
    order = []
    groups = {}
    for d, n, T in zip(t.column("delta"), t.column("na"), t.column("T")):
        if d not in groups:
            groups[d] = []
            order.append(d)
        groups[d].append((n, T))
    for i, d in enumerate(order):
        color, ls = _CONVERGENCE_STYLES[i % len(_CONVERGENCE_STYLES)]
        pts = np.asarray(groups[d], dtype=float)
        ax.plot(pts[:, 0], pts[:, 1], color=color, ls=ls, lw=1.3,
                label=f"$\\Delta = {d:g}$")
    ax.set_ylim(-0.02, 1.02)
    ax.legend(loc="upper right", fontsize=9)
    return {"n_series": len(order)}


def _draw_levels(ax, tables):
    (t,) = tables
    p, lower = _series(t, "p", "e_minus")
    p2, upper = _series(t, "p", "e_plus")
    ax.plot(p, lower, color="tab:blue", lw=1.0, marker="o", ms=3, label="lower band")
    ax.plot(p2, upper, color="tab:red", lw=1.0, marker="s", ms=3, label="upper band")
    ax.legend(loc="center right", fontsize=9)
    _atoms_title(ax, t)
    return {}


def _draw_group_velocity(ax, tables):
    (t,) = tables
    Omega = t.meta_float("Omega")
    lo = t.meta_float("stopped_light_lo") - Omega
    hi = t.meta_float("stopped_light_hi") - Omega
    for ecol, vcol, color, ls, label in (
        ("e_minus", "vg_minus", "tab:blue", ":", "lower band"),
        ("e_plus", "vg_plus", "tab:red", "--", "upper band"),
        ("e_free", "vg_free", "tab:brown", "-", "undoped chain"),
    ):
        e, v = _series(t, ecol, vcol)
        ax.plot(e - Omega, v, color=color, ls=ls, lw=1.3, label=label)
    ax.axvspan(lo, hi, color="0.88", zorder=0)
    ax.legend(loc="upper left", fontsize=9)
    return {"stopped_lo": lo, "stopped_hi": hi}


def _draw_ensemble_mean(ax, tables):
    (t,) = tables
    d, mean = _series(t, "delta", "mean_T")
    ax.plot(d, mean, color="tab:blue", lw=1.3)
    ax.set_ylim(-0.02, 1.02)
    parts = []
    for key, symbol in (("sigma_omega", "\\sigma_\\omega"), ("sigma_v", "\\sigma_V")):
        if key in t.meta:
            parts.append(f"${symbol} = {t.meta_float(key):g}$")
    if "samples" in t.meta:
        parts.append(f"{t.meta_float('samples'):g} samples")
    if parts:
        ax.set_title(", ".join(parts), fontsize=10)
    return {}


def _loss_title(ax, table: Table) -> None:
    parts = []
    for key, symbol in (("gamma_a", "\\gamma_a"), ("gamma_c", "\\gamma_c")):
        if key in table.meta:
            parts.append(f"${symbol} = {table.meta_float(key):g}$")
    if "na" in table.meta:
        parts.append(f"$N_a = {table.meta_float('na'):g}$")
    if parts:
        ax.set_title(", ".join(parts), fontsize=10)


def _draw_lossy_transmission(ax, tables):
    (t,) = tables
    d, trans = _series(t, "delta", "T_L")
    ax.plot(d, trans, color="tab:blue", lw=1.3)
    ax.set_ylim(-0.02, 1.02)
    _loss_title(ax, t)
    return {}


def _draw_current_budget(ax, tables):
    (t,) = tables
    d, trans = _series(t, "delta", "T_L")
    d2, refl = _series(t, "delta", "R_L")
    if not np.array_equal(d, d2):
        raise RecipeError(f"{t.path}: T_L and R_L are sampled on different grids")
    ax.plot(d, refl + trans, color="tab:blue", lw=1.3)
    ax.axhline(1.0, color="0.5", lw=0.8, ls="--")
    _loss_title(ax, t)
    return {}


RECIPES: dict = {}


def _register(figure_id, description, columns, xlabel, ylabel, draw):
    RECIPES[figure_id] = FigureRecipe(
        figure_id, description, 1, (tuple(columns),), xlabel, ylabel, draw)


_DELTA = r"$\Delta$"
_T2 = r"$|t|^2$"

_register("fig3a", "transmission spectrum, single atom",
          ("delta", "T"), _DELTA, _T2, _draw_spectrum)
_register("fig3b", "transmission spectrum, two atoms",
          ("delta", "T"), _DELTA, _T2, _draw_spectrum)
_register("fig3c", "transmission spectrum, ten atoms",
          ("delta", "T"), _DELTA, _T2, _draw_spectrum)
_register("fig3d", "transmission spectrum with reflection-plateau annotation, fifty atoms",
          ("delta", "T"), _DELTA, _T2, _draw_spectrum_plateau)
_register("fig4", "exact spectrum against the independent-scatterer product",
          ("delta", "T_exact", "T_incoherent"), _DELTA, _T2, _draw_approx_overlay)
_register("fig5a", "perfect-reflection bandwidth against the hopping strength",
          ("value", "width_L"), "$V$", "$L$", _width_sweep("V"))
_register("fig5b", "perfect-reflection bandwidth against the coupling strength",
          ("value", "width_L"), "$g$", "$L$", _width_sweep("g"))
_register("fig5c", "perfect-reflection bandwidth against the atomic frequency",
          ("value", "width_L"), "$\\Omega$", "$L$", _width_sweep("Omega"))
_register("fig5d", "perfect-reflection bandwidth against the resonator frequency",
          ("value", "width_L"), "$\\omega$", "$L$", _width_sweep("omega"))
_register("fig6", "transmission against chain length at fixed detunings",
          ("delta", "na", "T"), "$N_a$", _T2, _draw_convergence)
_register("fig7", "hybridized level ladder against the level index",
          ("p", "e_minus", "e_plus"), "$p$", "$E$", _draw_levels)
_register("fig8", "group velocities with the stopped-light window",
          ("e_minus", "vg_minus", "e_plus", "vg_plus", "e_free", "vg_free"),
          _DELTA, "$v_g$", _draw_group_velocity)
_register("fig9a", "transmission through one disordered realization",
          ("delta", "T"), _DELTA, _T2, _draw_spectrum)
_register("fig9b", "ensemble-averaged transmission, weak disorder",
          ("delta", "mean_T"), _DELTA, r"$\langle |t|^2 \rangle$", _draw_ensemble_mean)
_register("fig9c", "ensemble-averaged transmission, moderate disorder",
          ("delta", "mean_T"), _DELTA, r"$\langle |t|^2 \rangle$", _draw_ensemble_mean)
_register("fig9d", "ensemble-averaged transmission, strong disorder",
          ("delta", "mean_T"), _DELTA, r"$\langle |t|^2 \rangle$", _draw_ensemble_mean)
_register("fig10a", "transmission with atomic and resonator loss",
          ("delta", "T_L"), _DELTA, "$|t_L|^2$", _draw_lossy_transmission)
_register("fig10b", "scattered-current budget under loss",
          ("delta", "T_L", "R_L"), _DELTA, "$|r_L|^2 + |t_L|^2$", _draw_current_budget)


def render(figure_id: str, in_paths, out_path) -> dict:
    """Render one recipe from its input tables to a PNG file.

    Returns the values the recipe annotated onto the figure (empty for most
    recipes; fig3d reports the detected plateau edges, fig8 the shaded
    stopped-light window).
    """
    try:
        recipe = RECIPES[figure_id]
    except KeyError:
        known = ", ".join(RECIPES)
        raise RecipeError(f"unknown recipe {figure_id!r}; known recipes: {known}") from None
    in_paths = [str(p) for p in in_paths]
    if len(in_paths) != recipe.n_inputs:
        raise RecipeError(
            f"{figure_id} takes exactly {recipe.n_inputs} input table(s), got {len(in_paths)}")
    tables = [read_table(p) for p in in_paths]
    for table, needed in zip(tables, recipe.required_columns):
        missing = [c for c in needed if c not in table.columns]
        if missing:
            raise RecipeError(
                f"{table.path}: missing column(s) {', '.join(missing)}; "
                f"recipe {figure_id} binds ({', '.join(needed)})")
        if not table.rows:
            raise RecipeError(f"{table.path}: no data rows")
    with matplotlib.rc_context(_RC):
        fig, ax = plt.subplots()
        try:
            notes = recipe.draw(ax, tables)
            ax.set_xlabel(recipe.xlabel)
            ax.set_ylabel(recipe.ylabel)
            fig.tight_layout()
            fig.savefig(str(out_path), format="png", metadata={"Software": "figgen"})
        finally:
            plt.close(fig)
    return notes
