"""Render paper-style figure panels from pinned simulator CSV outputs.

All heatmaps are normalized to their own maximum (the color-scale policy
is stamped on every figure); rendering is read-only over the inputs and
produces byte-stable PNG + SVG pairs.
"""

from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "qpinem-figs"  # deterministic element ids
import matplotlib.pyplot as plt
from matplotlib.gridspec import GridSpec

from .recipes import RecipeError, verify_recipe

_SVG_METADATA = {"Date": None}  # keep re-renders byte-identical


def _load_matrix(path) -> np.ndarray:
    return np.atleast_2d(np.genfromtxt(path, delimiter=",", skip_header=1))


def _load_columns(path):
    rows = np.atleast_2d(np.genfromtxt(path, delimiter=",", skip_header=1))
    header = Path(path).read_text().splitlines()[0].split(",")
    return header, rows


def _panel_map(ax, values, z_mm, tau_frac, title):
    vmax = values.max()
    ax.imshow(
        (values / vmax).T,
        origin="lower",
        aspect="auto",
        extent=[z_mm[0], z_mm[-1], tau_frac[0], tau_frac[-1]],
        cmap="inferno",
        vmin=0.0,
        vmax=1.0,
        interpolation="nearest",
    )
    ax.set_title(title, fontsize=9)
    ax.set_xlabel("z (mm)")
    ax.set_ylabel(r"$\tau/\tau_0$")


def _axes_mm_tau(slot):
    z_mm = np.asarray(slot["axes"]["z_m"]) * 1e3
    tau0 = slot["extra"]["tau0_s"]
    tau_frac = np.asarray(slot["axes"]["tau_s"]) / tau0
    return z_mm, tau_frac


def _render_fig1b(recipe, fig):
    slot = recipe["inputs"]["map"]
    data_dir = Path(recipe["data_dir"])
    values = _load_matrix(data_dir / slot["files"][0]["path"])
    z_t = slot["extra"]["z_talbot_m"]
    z_frac = np.asarray(slot["axes"]["z_m"]) / z_t
    tau0 = slot["extra"]["tau0_s"]
    tau_frac = np.asarray(slot["axes"]["tau_s"]) / tau0
    ax = fig.add_subplot(111)
    ax.imshow(
        (values / values.max()).T,
        origin="lower",
        aspect="auto",
        extent=[z_frac[0], z_frac[-1], tau_frac[0], tau_frac[-1]],
        cmap="inferno",
        interpolation="nearest",
    )
    ax.set_xlabel(r"$z/z_T$")
    ax.set_ylabel(r"$\tau/\tau_0$")
    ax.set_title("density after interaction with classical light: Talbot revivals", fontsize=10)


_FIG2_LABELS = [
    ("classical", "(a) classical"),
    ("mpu", "(b) MPU"),
    ("phase", "(c) phase-squeezed"),
    ("amplitude", "(d) amplitude-squeezed"),
]


def _render_fig2(recipe, fig):
    data_dir = Path(recipe["data_dir"])
    maps = recipe["inputs"]["maps"]
    z_mm, tau_frac = _axes_mm_tau(maps)
    gs = GridSpec(2, 3, figure=fig, hspace=0.45, wspace=0.35)
    by_label = {Path(f["path"]).stem.split("_")[-1]: f["path"] for f in maps["files"]}
    for i, (label, title) in enumerate(_FIG2_LABELS):
        ax = fig.add_subplot(gs[i // 2, i % 2])
        _panel_map(ax, _load_matrix(data_dir / by_label[label]), z_mm, tau_frac, title)
    # (e) FWHM vs z
    ax = fig.add_subplot(gs[0, 2])
    header, rows = _load_columns(data_dir / recipe["inputs"]["fwhm"]["files"][0]["path"])
    z = rows[:, 0] * 1e3
    for j, name in enumerate(header[1:], start=1):
        ax.plot(z, rows[:, j] * 1e18, label=name, lw=1.2)
    ax.set_xlabel("z (mm)")
    ax.set_ylabel("FWHM (as)")
    ax.set_title("(e) pulse width", fontsize=9)
    ax.set_yscale("log")
    ax.legend(fontsize=6)
    # (f) min FWHM vs coupling strength
    ax = fig.add_subplot(gs[1, 2])
    header, rows = _load_columns(data_dir / recipe["inputs"]["fwhm_beta"]["files"][0]["path"])
    series = {}
    for j, name in enumerate(header[1:], start=1):
        family, beta = name.rsplit("_b", maxsplit=1)
        series.setdefault(family, []).append((float(beta), rows[:, j].min() * 1e18))
    for family, pts in series.items():
        pts.sort()
        ax.plot([b for b, _ in pts], [w for _, w in pts], "o-", label=family, lw=1.2)
    ax.set_xlabel(r"$|\beta|$")
    ax.set_ylabel("min FWHM (as)")
    ax.set_title("(f) compression vs coupling", fontsize=9)
    ax.legend(fontsize=6)


def _render_fig3(recipe, fig):
    data_dir = Path(recipe["data_dir"])
    prof = recipe["inputs"]["profiles"]
    z_mm, tau_frac = _axes_mm_tau(prof)
    by_label = {Path(f["path"]).stem.split("_")[-1]: f["path"] for f in prof["files"]}
    classical = _load_matrix(data_dir / by_label["classical"])
    amplitude = _load_matrix(data_dir / by_label["amplitude"])
    gs = GridSpec(2, 4, figure=fig, hspace=0.55, wspace=0.45)
    for i, z in enumerate(z_mm[:3]):
        ax = fig.add_subplot(gs[0, i])
        ax.plot(tau_frac, classical[i], "--", color="gray", lw=1.0, label="classical")
        ax.plot(tau_frac, amplitude[i], "-", color="crimson", lw=1.4, label="amplitude-squeezed")
        ax.set_title(f"({'abc'[i]}) z = {z:.1f} mm", fontsize=9)
        ax.set_xlabel(r"$\tau/\tau_0$")
        if i == 0:
            ax.set_ylabel("density")
            ax.legend(fontsize=6)
    # (d): amplitude-squeezed evolution maps, one per coupling strength
    beta_maps = recipe["inputs"]["beta_maps"]
    zb_mm, taub_frac = _axes_mm_tau(beta_maps)
    for i, entry in enumerate(beta_maps["files"][:4]):
        ax = fig.add_subplot(gs[1, i])
        label = Path(entry["path"]).stem.split("_")[-1]
        _panel_map(ax, _load_matrix(data_dir / entry["path"]), zb_mm, taub_frac,
                   f"(d) amplitude-squeezed, |beta| = {label[-1]}")


def _render_fig4(recipe, fig):
    data_dir = Path(recipe["data_dir"])
    slot = recipe["inputs"]["dmatrix"]
    tau0 = slot["extra"]["tau0_s"]
    tau = np.asarray(slot["axes"]["tau_s"]) / tau0
    taup = np.asarray(slot["axes"]["tau_prime_s"]) / tau0
    paths = {Path(f["path"]).stem: f["path"] for f in slot["files"]}
    labels = ["classical", "mpu", "phase", "amplitude"]
    gs = GridSpec(2, 4, figure=fig, hspace=0.4, wspace=0.4)
    panel = ord("b")
    for col, label in enumerate(labels):
        for row, part in enumerate(("re", "im")):
            values = _load_matrix(data_dir / paths[f"fig4_dmatrix_{label}_{part}"])
            vmax = np.abs(values).max()
            ax = fig.add_subplot(gs[row, col])
            ax.imshow(
                values.T / vmax,
                origin="lower",
                aspect="auto",
                extent=[tau[0], tau[-1], taup[0], taup[-1]],
                cmap="RdBu_r",
                vmin=-1.0,
                vmax=1.0,
                interpolation="nearest",
            )
            ax.set_title(f"({chr(panel)}) {part.capitalize()} - {label}", fontsize=8)
            ax.set_xlabel(r"$\tau/\tau_0$")
            ax.set_ylabel(r"$\tau'/\tau_0$")
            panel += 1


def _render_fig5(recipe, fig):
    data_dir = Path(recipe["data_dir"])
    slot = recipe["inputs"]["delta"]
    z_t = slot["extra"]["z_talbot_m"]
    gs = GridSpec(2, 2, figure=fig, hspace=0.45, wspace=0.3)
    panel = ord("b")
    for i, entry in enumerate(slot["files"]):
        label = Path(entry["path"]).stem.split("_")[-1]
        header, rows = _load_columns(data_dir / entry["path"])
        ax = fig.add_subplot(gs[i // 2, i % 2])
        for m in sorted(set(rows[:, 1])):
            sel = rows[rows[:, 1] == m]
            ax.plot(sel[:, 0] / z_t, sel[:, 2], lw=1.1, label=f"m = {int(m)}")
        ax.set_title(f"({chr(panel)}) {label}", fontsize=9)
        ax.set_xlabel(r"$d/z_T$")
        ax.set_ylabel(r"$|\Delta_m|$")
        if i == 0:
            ax.legend(fontsize=6)
        panel += 1


_RENDERERS = {
    "fig1b": (_render_fig1b, (7.0, 3.2)),
    "fig2": (_render_fig2, (10.5, 6.0)),
    "fig3": (_render_fig3, (10.0, 6.0)),
    "fig4": (_render_fig4, (11.0, 5.2)),
    "fig5": (_render_fig5, (8.0, 6.0)),
}


def render(recipe: dict, svg: bool = True) -> list:
    """Verify every pinned input, then write PNG (and SVG) for the recipe."""
    verify_recipe(recipe)
    figure = recipe["figure"]
    if figure not in _RENDERERS:
        raise RecipeError(f"no renderer for figure {figure!r}")
    builder, size = _RENDERERS[figure]
    fig = plt.figure(figsize=size, dpi=130)
    try:
        builder(recipe, fig)
        fig.text(0.995, 0.005, "color scale: per-panel max", ha="right", fontsize=6,
                 color="gray")
        out = Path(recipe["output"])
        out.parent.mkdir(parents=True, exist_ok=True)
        written = []
        fig.savefig(out, format="png")
        written.append(out)
        if svg:
            svg_path = out.with_suffix(".svg")
            fig.savefig(svg_path, format="svg", metadata=_SVG_METADATA)
            written.append(svg_path)
        return written
    finally:
        plt.close(fig)
