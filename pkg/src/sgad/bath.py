"""Squeezed thermal bath specification and derived quantities.

Units: hbar = k_B = 1 throughout, so temperature and frequency share units
and gamma0 carries inverse time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# exp(x) overflows doubles near 709; beyond this the occupation underflows
_EXP_CUTOFF = 700.0


@dataclass(frozen=True)
class BathSpec:
    """Physical parameters of a squeezed thermal bath coupled to a qubit.

    T: bath temperature (>= 0); r: squeezing magnitude (>= 0); Phi:
    squeezing phase (radians); gamma0: spontaneous emission rate (> 0);
    omega: qubit transition frequency (> 0).
    """

    T: float
    r: float = 0.0
    Phi: float = 0.0
    gamma0: float = 0.05
    omega: float = 1.0

    def __post_init__(self):
        if self.T < 0:
            raise ValueError(f"temperature must be >= 0, got {self.T}")
        if self.r < 0:
            raise ValueError(f"squeezing magnitude must be >= 0, got {self.r}")
        if self.gamma0 <= 0:
            raise ValueError(f"gamma0 must be > 0, got {self.gamma0}")
        if self.omega <= 0:
            raise ValueError(f"omega must be > 0, got {self.omega}")


@dataclass(frozen=True)
class DerivedBath:
    """Derived bath quantities: thermal occupation n_th, effective photon
    number n_eff, squeezing correlation m, and the rate parameter a."""

    n_th: float
    n_eff: float
    m: complex
    a: float

    @property
    def two_n_plus_one(self):
        return 2.0 * self.n_eff + 1.0


def planck_occupation(omega, T):
    """Mean thermal photon number 1/(e^{omega/T} - 1); exactly 0 at T = 0."""
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega}")
    if T < 0:
        raise ValueError(f"temperature must be >= 0, got {T}")
    if T == 0 or omega / T > _EXP_CUTOFF:
        return 0.0
    return 1.0 / np.expm1(omega / T)


def derive_bath(spec: BathSpec) -> DerivedBath:
    """All derived squeezed-thermal quantities for a bath specification."""
    n_th = planck_occupation(spec.omega, spec.T)
    ch2, sh2 = np.cosh(spec.r) ** 2, np.sinh(spec.r) ** 2
    n_eff = n_th * (ch2 + sh2) + sh2
    a = np.sinh(2.0 * spec.r) * (2.0 * n_th + 1.0)
    m = -0.5 * np.sinh(2.0 * spec.r) * np.exp(1j * spec.Phi) * (2.0 * n_th + 1.0)
    # 2N + 1 - a = (2 n_th + 1) e^{-2r} > 0; the analytic solution relies on it
    if 2.0 * n_eff + 1.0 - a <= 0:
        raise ValueError(
            f"bath violates 2N+1 > a (N={n_eff}, a={a}); dynamics would diverge")
    return DerivedBath(n_th=float(n_th), n_eff=float(n_eff), m=complex(m),
                       a=float(a))
