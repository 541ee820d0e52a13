"""Analytic solution of the squeezed-bath master equation.

The Bloch components are solved in the interaction picture; the free phase
e^{-i omega t} is applied to the off-diagonal density-matrix entry only when
the Schroedinger picture is requested.
"""

from __future__ import annotations

import numpy as np

from .bath import BathSpec, derive_bath

PICTURES = ("interaction", "schroedinger")


def _decay_factors(bath: BathSpec, t: float):
    """Return (cosh_decay, sinh_decay, z_decay, two_n_plus_one).

    cosh_decay = cosh(g a t / 2) e^{-g (2N+1) t / 2} and similarly for sinh,
    factored as half-sums of decaying exponentials so no intermediate
    overflows for large t (2N + 1 > a always holds).
    """
    der = derive_bath(bath)
    q = 0.5 * bath.gamma0 * der.two_n_plus_one * t
    p = 0.5 * bath.gamma0 * der.a * t
    fast = np.exp(-p - q)
    slow = np.exp(p - q)
    return 0.5 * (slow + fast), 0.5 * (slow - fast), np.exp(-2.0 * q), der.two_n_plus_one


def evolve_bloch(b0, bath: BathSpec, t: float):
    """Bloch vector at time t (interaction picture) for initial vector b0."""
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    x0, y0, z0 = np.asarray(b0, dtype=float)
    ch, sh, ez, tnp1 = _decay_factors(bath, t)
    cphi, sphi = np.cos(bath.Phi), np.sin(bath.Phi)
    x = (ch + cphi * sh) * x0 - sphi * sh * y0
    y = (ch - cphi * sh) * y0 - sphi * sh * x0
    z = ez * z0 - (1.0 - ez) / tnp1
    return np.array([x, y, z])


def evolve_density(rho0, bath: BathSpec, t: float, picture="interaction"):
    """Density matrix at time t.

    The off-diagonal entry evolves as cosh(g a t/2) e^{-g(2N+1)t/2} <s_-(0)>
    + sinh(g a t/2) e^{i Phi - g(2N+1)t/2} <s_+(0)>; in the Schroedinger
    picture it additionally picks up the free phase e^{-i omega t}.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    if picture not in PICTURES:
        raise ValueError(f"unknown picture {picture!r}")
    rho0 = np.asarray(rho0, dtype=complex)
    ch, sh, ez, tnp1 = _decay_factors(bath, t)
    z0 = float(np.real(rho0[0, 0] - rho0[1, 1]))
    sm0 = rho0[0, 1]  # <sigma_-(0)> sits at the upper-right entry
    sp0 = rho0[1, 0]
    z = ez * z0 - (1.0 - ez) / tnp1
    off = ch * sm0 + sh * np.exp(1j * bath.Phi) * sp0
    if picture == "schroedinger":
        off = off * np.exp(-1j * bath.omega * t)
    return np.array([[0.5 * (1.0 + z), off],
                     [np.conj(off), 0.5 * (1.0 - z)]])


def asymptotic_state(bath: BathSpec):
    """Fixed point diag(1-q, q) with q = (N+1)/(2N+1) in the (|1>,|0>) basis."""
    der = derive_bath(bath)
    q = (der.n_eff + 1.0) / der.two_n_plus_one
    return np.array([[1.0 - q, 0.0], [0.0, q]], dtype=complex)
