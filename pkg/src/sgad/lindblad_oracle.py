"""Fixed-step RK4 integrator for the squeezed-bath master equation.

This module is the numerical ground truth the analytic solution and the
Kraus synthesis are checked against, so it is kept deliberately plain:
classical RK4, fixed step, no trace renormalization (trace drift is a
convergence diagnostic, not something to hide).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .bath import BathSpec, derive_bath
from .qubit_core import SIGMA_MINUS, SIGMA_PLUS

TRACE_DRIFT_TOL = 1e-6


@dataclass(frozen=True)
class LindbladGenerator:
    """The two Lindblad operators R1, R2 with rate prefactors absorbed."""

    bath: BathSpec
    operators: tuple  # (R1, R2)


def build_generator(bath: BathSpec) -> LindbladGenerator:
    """R1 = sqrt(g(n_th+1)/2) R, R2 = sqrt(g n_th/2) R^dagger with
    R = sigma_- cosh r + e^{i Phi} sigma_+ sinh r; R2 vanishes at T = 0."""
    der = derive_bath(bath)
    r_op = SIGMA_MINUS * np.cosh(bath.r) \
        + SIGMA_PLUS * np.exp(1j * bath.Phi) * np.sinh(bath.r)
    r1 = np.sqrt(bath.gamma0 * (der.n_th + 1.0) / 2.0) * r_op
    r2 = np.sqrt(bath.gamma0 * der.n_th / 2.0) * r_op.conj().T
    return LindbladGenerator(bath=bath, operators=(r1, r2))


def rhs(gen: LindbladGenerator, rho):
    """Dissipator sum_j (2 R_j rho R_j^dag - R_j^dag R_j rho - rho R_j^dag R_j)."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((2, 2), dtype=complex)
    for r in gen.operators:
        rd = r.conj().T
        anti = rd @ r
        out += 2.0 * (r @ rho @ rd) - anti @ rho - rho @ anti
    return out


def liouvillian(gen: LindbladGenerator):
    """4x4 matrix of the (linear) dissipator acting on row-stacked vec(rho),
    built by applying rhs to the matrix-unit basis."""
    cols = []
    for i in range(2):
        for j in range(2):
            basis = np.zeros((2, 2), dtype=complex)
            basis[i, j] = 1.0
            cols.append(rhs(gen, basis).reshape(4))
    return np.column_stack(cols)


def default_step(gen: LindbladGenerator) -> float:
    """Step giving at least 100 steps per stiffest characteristic time."""
    der = derive_bath(gen.bath)
    stiffest = gen.bath.gamma0 * (der.two_n_plus_one + der.a)
    return min(1e-3, 1.0 / (100.0 * stiffest))


def integrate(gen: LindbladGenerator, rho0, t, dt=None):
    """Integrate the master equation from rho0 to time t (interaction
    picture) with classical fixed-step RK4.

    rho0 may carry leading batch dimensions (..., 2, 2); all states share
    the step schedule. Each step ends with a Hermitian symmetrization
    (trace untouched). Warns if the trace drifts by more than 1e-6.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    if dt is None:
        dt = default_step(gen)
    if dt <= 0:
        raise ValueError(f"step must be > 0, got {dt}")
    rho0 = np.asarray(rho0, dtype=complex)
    shape = rho0.shape
    if t == 0:
        return rho0.copy()
    lv = liouvillian(gen)
    n_steps = max(int(np.ceil(t / dt - 1e-12)), 1)
    h = t / n_steps
    # columns of v are the vectorized states
    v = rho0.reshape(-1, 4).T
    for _ in range(n_steps):
        k1 = lv @ v
        k2 = lv @ (v + 0.5 * h * k1)
        k3 = lv @ (v + 0.5 * h * k2)
        k4 = lv @ (v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        m = v.T.reshape(-1, 2, 2)
        m = 0.5 * (m + np.conj(np.swapaxes(m, -1, -2)))
        v = m.reshape(-1, 4).T
    out = v.T.reshape(shape)
    drift = float(np.max(np.abs(np.trace(out.reshape(-1, 2, 2),
                                         axis1=-2, axis2=-1) - 1.0)))
    if drift > TRACE_DRIFT_TOL:
        warnings.warn(f"trace drift {drift:.3e} exceeds {TRACE_DRIFT_TOL}; "
                      "step too large", RuntimeWarning)
    return out
