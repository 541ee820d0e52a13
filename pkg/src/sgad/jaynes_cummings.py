"""Dissipative single-excitation Jaynes-Cummings reduction.

A two-level atom resonant with a lossy cavity mode, the cavity eliminated in
favour of a Lorentzian spectral density of width kappa. The reduced dynamics
is exactly an amplitude damping channel; jc_lambda gives the damping
parameter that makes the identification explicit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_IMAG_TOL = 1e-10
_SERIES_CUTOFF = 1e-6


@dataclass(frozen=True)
class JcSpec:
    """kappa: spectral width; gamma0: coupling rate; omega0: atomic frequency."""

    kappa: float
    gamma0: float
    omega0: float = 1.0

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError(f"kappa must be > 0, got {self.kappa}")
        if self.gamma0 <= 0:
            raise ValueError(f"gamma0 must be > 0, got {self.gamma0}")

    @property
    def l(self):
        """Complex rate sqrt(kappa^2 - 2 gamma0 kappa); imaginary when
        underdamped (kappa < 2 gamma0)."""
        return np.sqrt(complex(self.kappa ** 2 - 2.0 * self.gamma0 * self.kappa))


def _bracket(spec: JcSpec, t: float) -> float:
    """cosh(l t/2) + (kappa/l) sinh(l t/2), real-valued for all regimes.

    Underdamped l is imaginary: evaluated through complex arithmetic with the
    imaginary residue asserted negligible. Near l = 0 the expression
    degenerates to 1 + kappa t/2 and is taken from its series instead.
    """
    l = spec.l
    if abs(l) * t < _SERIES_CUTOFF:
        x2 = (l * t / 2.0) ** 2
        val = 1.0 + spec.kappa * t / 2.0 + x2 * (0.5 + spec.kappa * t / 12.0)
    else:
        x = l * t / 2.0
        val = np.cosh(x) + (spec.kappa / l) * np.sinh(x)
    if abs(val.imag) > _IMAG_TOL:
        raise AssertionError(f"bracket should be real, imag={val.imag:.3e}")
    return float(val.real)


def jc_lambda(spec: JcSpec, t: float) -> float:
    """Amplitude damping parameter lambda(t) = 1 - e^{-kappa t} bracket^2.

    Clamped to [0, 1]; the clamping magnitude must be roundoff-level.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    lam = 1.0 - np.exp(-spec.kappa * t) * _bracket(spec, t) ** 2
    clamped = min(max(lam, 0.0), 1.0)
    if abs(clamped - lam) > 1e-10:
        raise AssertionError(f"lambda left [0,1] by {abs(clamped - lam):.3e}")
    return clamped


def jc_evolve(theta0, phi0, spec: JcSpec, t, picture="interaction"):
    """Reduced atomic density matrix at time t from the initial pure state
    cos(theta0/2)|1> + e^{i phi0} sin(theta0/2)|0>.

    The excited population decays as e^{-kappa t} bracket^2 and the coherence
    as e^{-kappa t/2} bracket; in the Schroedinger picture the coherence also
    carries the free phase e^{-i omega0 t}.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    if picture not in ("interaction", "schroedinger"):
        raise ValueError(f"unknown picture {picture!r}")
    br = _bracket(spec, t)
    pop0 = np.cos(theta0 / 2.0) ** 2
    coh0 = 0.5 * np.exp(-1j * phi0) * np.sin(theta0)
    a = pop0 * np.exp(-spec.kappa * t) * br ** 2
    b = coh0 * np.exp(-spec.kappa * t / 2.0) * br
    if picture == "schroedinger":
        b = b * np.exp(-1j * spec.omega0 * t)
    return np.array([[a, b], [np.conj(b), 1.0 - a]], dtype=complex)
