"""Exact 2x2 complex linear algebra for qubit states.

Basis ordering is (|1>, |0>): row/column 0 is the upper state |1>, so the
(0, 0) entry of a density matrix is (1 + <sigma_z>)/2 and the upper-right
entry is <sigma_-> with sigma_- = (sigma_x - i sigma_y)/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

IDENTITY = np.eye(2, dtype=complex)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)   # |1><0|
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)  # |0><1|

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = -1e-12


def pure_state(theta0, phi0):
    """Density matrix of cos(theta0/2)|1> + e^{i phi0} sin(theta0/2)|0>."""
    ket = np.array([np.cos(theta0 / 2.0),
                    np.exp(1j * phi0) * np.sin(theta0 / 2.0)])
    return np.outer(ket, ket.conj())


def bloch_to_density(b):
    """Map a Bloch vector (x, y, z) to rho = (I + b . sigma)/2.

    Raises ValueError for vectors outside the closed Bloch ball
    (norm > 1 + 1e-12).
    """
    b = np.asarray(b, dtype=float)
    norm = float(np.linalg.norm(b))
    if norm > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector norm {norm} exceeds 1 (unphysical state)")
    x, y, z = b
    return 0.5 * (IDENTITY + x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z)


def density_to_bloch(rho):
    """Bloch vector (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z)."""
    rho = np.asarray(rho, dtype=complex)
    x = float(np.real(rho[0, 1] + rho[1, 0]))
    y = float(np.real(1j * (rho[0, 1] - rho[1, 0])))
    z = float(np.real(rho[0, 0] - rho[1, 1]))
    return np.array([x, y, z])


def eigenvalues_hermitian2(m, tol=1e-10):
    """Eigenvalues of a 2x2 Hermitian matrix, descending.

    Uses the closed form (tr +- sqrt(tr^2 - 4 det))/2 with the discriminant
    clamped at zero. Rejects non-Hermitian input (defect > tol).
    """
    m = np.asarray(m, dtype=complex)
    defect = float(np.abs(m - m.conj().T).max())
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    tr = float(np.real(m[0, 0] + m[1, 1]))
    det = float(np.real(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]))
    disc = max(tr * tr - 4.0 * det, 0.0)
    root = np.sqrt(disc)
    return (0.5 * (tr + root), 0.5 * (tr - root))


def von_neumann_entropy(rho):
    """Von Neumann entropy S(rho) in bits, with 0 log 0 := 0.

    Eigenvalues are clamped to [0, 1] so that near-pure outputs with tiny
    negative roundoff eigenvalues do not produce NaNs.
    """
    s = 0.0
    for lam in eigenvalues_hermitian2(rho):
        lam = min(max(lam, 0.0), 1.0)
        if lam > 0.0:
            s -= lam * np.log2(lam)
    return float(s)


@dataclass(frozen=True)
class DensityReport:
    """Diagnostic report from validate_density."""

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float

    @property
    def passed(self):
        return (self.hermiticity_defect <= HERMITICITY_TOL
                and self.trace_defect <= TRACE_TOL
                and self.min_eigenvalue >= PSD_TOL)


def validate_density(rho):
    """Check Hermiticity, unit trace and positivity of a 2x2 matrix.

    Diagnostic only: never raises, always returns a DensityReport.
    """
    rho = np.asarray(rho, dtype=complex)
    herm = float(np.abs(rho - rho.conj().T).max())
    trace = float(abs(np.trace(rho) - 1.0))
    sym = 0.5 * (rho + rho.conj().T)
    _, lo = eigenvalues_hermitian2(sym, tol=np.inf)
    return DensityReport(hermiticity_defect=herm, trace_defect=trace,
                         min_eigenvalue=lo)
