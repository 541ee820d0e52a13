"""Holevo quantity and restricted classical capacity of a qubit channel.

The capacity search is restricted to the binary ensembles of orthogonal
pure states {(theta0, phi0), (theta0 + pi, phi0)} with fixed symbol
probability f, which is exactly the communication game the channel figures
describe. The reported quantity is therefore labelled
``restricted_binary_capacity`` rather than a full Holevo capacity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kraus_channels import KrausSet, apply_channel
from .qubit_core import pure_state, von_neumann_entropy


@dataclass(frozen=True)
class Ensemble:
    """Weighted list of input density matrices."""

    members: tuple  # of (probability, rho) pairs

    def __post_init__(self):
        probs = np.array([p for p, _ in self.members])
        if np.any(probs < 0):
            raise ValueError("ensemble probabilities must be >= 0")
        if abs(probs.sum() - 1.0) > 1e-12:
            raise ValueError(f"ensemble probabilities sum to {probs.sum()}")


@dataclass(frozen=True)
class CapacityResult:
    """Restricted binary capacity c (bits) and the optimizing input pair."""

    c: float
    theta0: float
    phi0: float
    f: float
    kind: str = "restricted_binary_capacity"


def binary_orthogonal_ensemble(theta0, phi0, f) -> Ensemble:
    """Ensemble {(f, |theta0,phi0>), (1-f, |theta0+pi,phi0>)}; the two
    members are antipodal on the Bloch sphere, hence orthogonal."""
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"f must be in [0,1], got {f}")
    return Ensemble(members=((f, pure_state(theta0, phi0)),
                             (1.0 - f, pure_state(theta0 + np.pi, phi0))))


def holevo_chi(ensemble: Ensemble, k: KrausSet) -> float:
    """Holevo quantity of the channel outputs:
    S(sum_j p_j E(rho_j)) - sum_j p_j S(E(rho_j)), in bits."""
    avg = np.zeros((2, 2), dtype=complex)
    cond = 0.0
    for p, rho in ensemble.members:
        out = apply_channel(k, rho)
        avg += p * out
        if p > 0.0:
            cond += p * von_neumann_entropy(out)
    return von_neumann_entropy(avg) - cond


def chi_surface(k: KrausSet, n_theta=61, n_phi=121, f=0.5):
    """chi sampled on a (theta0, phi0) grid over [0, pi] x [0, 2 pi].

    Returns (theta_grid, phi_grid, chi) with chi indexed [i_theta, i_phi]
    in deterministic row-major order.
    """
    if n_theta < 2 or n_phi < 2:
        raise ValueError("grid must be at least 2x2")
    thetas = np.linspace(0.0, np.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * np.pi, n_phi)
    chi = np.empty((n_theta, n_phi))
    for i, t0 in enumerate(thetas):
        for j, p0 in enumerate(phis):
            chi[i, j] = holevo_chi(binary_orthogonal_ensemble(t0, p0, f), k)
    return thetas, phis, chi


def classical_capacity(k: KrausSet, n_theta=61, n_phi=121, f=0.5,
                       refine_rounds=3, shrink=10.0) -> CapacityResult:
    """Maximize chi over binary orthogonal pure-state ensembles.

    Coarse grid search followed by coordinate-descent refinement with
    interval shrinking around the best node. Ties on flat surfaces break to
    the lexicographically smallest (theta0, phi0) because the row-major scan
    keeps the first strict maximum.
    """
    thetas, phis, chi = chi_surface(k, n_theta, n_phi, f)
    i, j = np.unravel_index(int(np.argmax(chi)), chi.shape)
    best_t, best_p, best_c = float(thetas[i]), float(phis[j]), float(chi[i, j])

    def objective(t0, p0):
        return holevo_chi(binary_orthogonal_ensemble(t0, p0, f), k)

    dt = float(thetas[1] - thetas[0])
    dp = float(phis[1] - phis[0])
    for _ in range(refine_rounds):
        for grid_t in (np.linspace(best_t - dt, best_t + dt, 11),):
            for t0 in grid_t:
                c = objective(t0, best_p)
                if c > best_c + 1e-15:
                    best_c, best_t = c, float(t0)
        for grid_p in (np.linspace(best_p - dp, best_p + dp, 11),):
            for p0 in grid_p:
                c = objective(best_t, p0)
                if c > best_c + 1e-15:
                    best_c, best_p = c, float(p0)
        dt /= shrink
        dp /= shrink
    return CapacityResult(c=best_c, theta0=best_t, phi0=best_p, f=f)
