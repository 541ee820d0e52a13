"""Matplotlib rendering of the CLI report data.

Each function takes the already-computed table data and writes a PNG next
to the delimited output; nothing here recomputes physics.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

_LINESTYLES = ("-", "--", "-.", ":")


def plot_param_curves(curves, quantity, path, gamma0):
    """One line per (T, r) configuration; curves maps (T, r) -> (t, value)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for k, ((T, r), (ts, vals)) in enumerate(sorted(curves.items())):
        ax.plot(ts, vals, _LINESTYLES[k % len(_LINESTYLES)],
                label=f"T={T:g}, r={r:g}")
    ax.set_xlabel("t")
    ax.set_ylabel(quantity)
    ax.set_title(f"{quantity}(t), gamma0={gamma0:g}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_evolution(ts, bloch, path):
    """Bloch components against time; bloch is an (n, 3) array."""
    bloch = np.asarray(bloch)
    fig, ax = plt.subplots(figsize=(6, 4))
    for idx, name in enumerate(("x", "y", "z")):
        ax.plot(ts, bloch[:, idx], _LINESTYLES[idx], label=f"<sigma_{name}>")
    ax.set_xlabel("t")
    ax.set_ylabel("Bloch component")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_chi_surface(thetas, phis, chi, path):
    """Holevo quantity over the (theta0, phi0) input-pair grid."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    mesh = ax.pcolormesh(phis, thetas, chi, shading="auto", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="chi (bits)")
    ax.set_xlabel("phi0")
    ax.set_ylabel("theta0")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_capacity_curves(ts, columns, path):
    """Capacity against time; columns maps a label to a value list."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for k, (label, vals) in enumerate(columns.items()):
        ax.plot(ts, vals, _LINESTYLES[k % len(_LINESTYLES)], label=label)
    ax.set_xlabel("t")
    ax.set_ylabel("C (bits)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
