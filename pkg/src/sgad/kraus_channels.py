"""Kraus operator synthesis for the AD, GAD and SGAD channel families.

The SGAD parameters (p1, p2, alpha, mu, nu, theta) are obtained from the
bath by matching the Kraus map to the analytic Bloch solution. The matching
reduces to a quadratic in p2 whose two roots are both exact decompositions
at early times; the root taken here (the '+' branch of the closed form) is
the one that remains an exact decomposition for all t and relaxes to
N/(2N+1), so sweeps in t never flip branches. Every emitted parameter set is
certified by back-substitution into the five matching constraints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .bath import BathSpec, derive_bath
from .qubit_core import IDENTITY

COMPLETENESS_TOL = 1e-10
RESIDUAL_TOL = 1e-8
_T_CLAMP = 1e-5  # below this value of gamma0 (2N+1) t the quadratic degenerates


class DegenerateChannelError(ValueError):
    """Raised when N = 0 (T = 0 and r = 0): the SGAD formulas divide by N
    and the channel is plain amplitude damping."""


class ChannelSynthesisError(RuntimeError):
    """Raised when neither quadratic branch yields certified parameters."""


@dataclass(frozen=True)
class KrausSet:
    """Ordered Kraus operators of a qubit channel at a fixed time."""

    operators: tuple
    label: str
    meta: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SgadParams:
    """Channel parameters of the squeezed generalized amplitude damping map."""

    p1: float
    p2: float
    alpha: float
    mu: float
    nu: float
    theta: float
    branch: int = +1


def ad_kraus(lam) -> KrausSet:
    """Amplitude damping channel: two operators, decay |1> -> |0> with
    probability lam."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must be in [0,1], got {lam}")
    e0 = np.array([[np.sqrt(1.0 - lam), 0.0], [0.0, 1.0]], dtype=complex)
    e1 = np.array([[0.0, 0.0], [np.sqrt(lam), 0.0]], dtype=complex)
    return KrausSet(operators=(e0, e1), label="AD", meta={"lambda": float(lam)})


def gad_params(bath: BathSpec, t):
    """(lambda, p) of the generalized amplitude damping channel at time t.

    Defined at zero squeezing only: lambda = 1 - e^{-gamma0 (2 n_th + 1) t},
    p = (n_th + 1)/(2 n_th + 1).
    """
    if bath.r != 0:
        raise ValueError("GAD is defined at zero squeezing (r = 0)")
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    n_th = derive_bath(bath).n_th
    lam = -np.expm1(-bath.gamma0 * (2.0 * n_th + 1.0) * t)
    p = (n_th + 1.0) / (2.0 * n_th + 1.0)
    return float(lam), float(p)


def gad_kraus(lam, p) -> KrausSet:
    """Generalized amplitude damping channel: four operators with sqrt(p)
    and sqrt(1-p) prefactors."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must be in [0,1], got {lam}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    sp, sq = np.sqrt(p), np.sqrt(1.0 - p)
    sl, sk = np.sqrt(lam), np.sqrt(1.0 - lam)
    e0 = sp * np.array([[sk, 0.0], [0.0, 1.0]], dtype=complex)
    e1 = sp * np.array([[0.0, 0.0], [sl, 0.0]], dtype=complex)
    e2 = sq * np.array([[1.0, 0.0], [0.0, sk]], dtype=complex)
    e3 = sq * np.array([[0.0, sl], [0.0, 0.0]], dtype=complex)
    return KrausSet(operators=(e0, e1, e2, e3), label="GAD",
                    meta={"lambda": float(lam), "p": float(p)})


def _aux_quantities(bath: BathSpec, t):
    """The four p2-independent auxiliaries (A, B, D, E) plus rates.

    A = p2 mu, B = p2 nu, D = cosh^2(g a t/2) e^{-g(2N+1)t},
    E = e^{-g(2N+1)t}. Factored into decaying exponentials only, so values
    stay finite for arbitrarily large t (2N + 1 > a always).
    """
    der = derive_bath(bath)
    n, a = der.n_eff, der.a
    q = 0.5 * bath.gamma0 * der.two_n_plus_one * t
    p = 0.5 * bath.gamma0 * a * t
    slow, fast = np.exp(p - q), np.exp(-p - q)
    e_full = np.exp(-2.0 * q)
    # sinh^2(p) e^{-q} / sinh(q) = (e^{p-q} - e^{-p-q})^2 / (2 (1 - e^{-2q}))
    aa = der.two_n_plus_one / (2.0 * n) * (slow - fast) ** 2 / (2.0 * (1.0 - e_full))
    bb = n / der.two_n_plus_one * (1.0 - e_full)
    dd = 0.25 * (slow + fast) ** 2
    return aa, bb, dd, e_full


def _p2_roots(aa, bb, dd, ee):
    """Both roots of the p2 quadratic, '+' branch first."""
    cc = aa + bb + ee
    den = (aa + bb - cc - 1.0) ** 2 - 4.0 * dd
    base = (aa ** 2 * bb + cc ** 2 + aa * (bb ** 2 - cc - bb * (1.0 + cc) - dd)
            - (1.0 + bb) * dd - cc * (bb + dd - 1.0))
    disc = dd * (bb - aa * bb + (aa - 1.0) * cc + dd) \
        * (aa - aa * bb + (bb - 1.0) * cc + dd)
    root = 2.0 * np.sqrt(max(disc, 0.0))
    return (base + root) / den, (base - root) / den


def _constraint(p2, aa, bb, dd, ee):
    """Scalar residual of the first matching constraint as a function of p2
    (the other four constraints hold identically once mu = A/p2, nu = B/p2
    and alpha is taken from the population constraint)."""
    u = (1.0 - p2) * (aa + bb + ee - p2)
    v = (p2 - aa) * (p2 - bb)
    if u < 0 or v < 0:
        return None
    return np.sqrt(u) + np.sqrt(v) - np.sqrt(dd)


def _polish(p2, aa, bb, dd, ee):
    """A few secant steps on the unsquared constraint to remove the
    cancellation error of the closed-form root."""
    f0 = _constraint(p2, aa, bb, dd, ee)
    if f0 is None or f0 == 0.0:
        return p2
    h = max(abs(p2), 1.0) * 1e-7
    for _ in range(8):
        f1 = _constraint(p2 + h, aa, bb, dd, ee)
        if f1 is None or f1 == f0:
            break
        step = f0 * h / (f1 - f0)
        cand = p2 - step
        fc = _constraint(cand, aa, bb, dd, ee)
        if fc is None or abs(fc) >= abs(f0):
            break
        p2, f0 = cand, fc
        if abs(f0) < 1e-15:
            break
        h = max(abs(step) * 0.1, 1e-12)
    return p2


def _params_from_root(p2, aa, bb, dd, ee, theta, branch):
    if 1.0 < p2 <= 1.0 + 1e-4:
        # roundoff drift of the near-degenerate quadratic just above the
        # small-t clamp; legitimacy is decided by the residual certification
        p2 = 1.0
    if not 0.0 < p2 <= 1.0 or p2 < max(aa, bb):
        return None
    p1 = 1.0 - p2
    vals = []
    for v in (aa / p2, bb / p2):
        if v < -1e-9 or v > 1.0 + 1e-9:
            return None
        vals.append(min(max(v, 0.0), 1.0))
    mu, nu = vals
    if p1 < 1e-9:
        # alpha enters every constraint with weight p1, below certification
        alpha = 0.0
    else:
        alpha_pop = (1.0 - aa - bb - ee) / p1
        # the coherence constraint p1 sqrt(1-alpha) = sqrt(D)
        # - p2 sqrt((1-mu)(1-nu)) is infinitely stiff in alpha at alpha -> 1,
        # where roundoff in alpha_pop leaves an O(sqrt(eps)) residual; solving
        # that constraint for alpha moves the roundoff into the population
        # constraints, whose sensitivity to alpha is only linear
        gap = np.sqrt(dd) - p2 * np.sqrt((1.0 - mu) * (1.0 - nu))
        alpha = 1.0 - (max(gap, 0.0) / p1) ** 2
        consistent = abs(alpha - alpha_pop) <= 1e-6 or p1 < 1e-6
        if not (0.0 <= alpha <= 1.0 and consistent):
            if alpha_pop < -1e-9 or alpha_pop > 1.0 + 1e-9:
                return None
            alpha = min(max(alpha_pop, 0.0), 1.0)
    return SgadParams(p1=p1, p2=p2, alpha=alpha, mu=mu, nu=nu, theta=theta,
                      branch=branch)


def sgad_params(bath: BathSpec, t) -> SgadParams:
    """SGAD channel parameters at time t, certified by back-substitution.

    Raises DegenerateChannelError at N = 0 (use ad_kraus instead) and
    ChannelSynthesisError if no quadratic branch certifies.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    der = derive_bath(bath)
    if der.n_eff == 0.0:
        raise DegenerateChannelError(
            "N = 0 (T = 0, r = 0): the channel is plain amplitude damping")
    x = bath.gamma0 * der.two_n_plus_one * t
    if x < _T_CLAMP:
        # quadratic denominator vanishes as t -> 0; the channel is the
        # identity there regardless of p2, so take p2 by continuity from the
        # clamp boundary and zero all damping parameters
        t_edge = _T_CLAMP / (bath.gamma0 * der.two_n_plus_one)
        edge = sgad_params(bath, t_edge)
        return SgadParams(p1=edge.p1, p2=edge.p2, alpha=0.0, mu=0.0, nu=0.0,
                          theta=bath.Phi, branch=edge.branch)
    if der.a == 0.0:
        # zero squeezing: the quadratic's discriminant vanishes identically
        # and its double root is N_th/(2 N_th + 1) for every t; evaluating
        # the closed form there divides 0 by 0, so take the root exactly
        n_th = der.n_th
        lam = -np.expm1(-bath.gamma0 * der.two_n_plus_one * t)
        params = SgadParams(p1=(n_th + 1.0) / (2.0 * n_th + 1.0),
                            p2=n_th / (2.0 * n_th + 1.0),
                            alpha=lam, mu=0.0, nu=lam, theta=bath.Phi,
                            branch=+1)
        res = float(np.max(np.abs(sgad_residuals(params, bath, t))))
        if res > RESIDUAL_TOL:
            raise ChannelSynthesisError(
                f"zero-squeezing parameters failed certification at t={t} "
                f"for {bath}: residual {res:.3e}")
        return params
    aa, bb, dd, ee = _aux_quantities(bath, t)
    attempts = []
    for branch, p2 in zip((+1, -1), _p2_roots(aa, bb, dd, ee)):
        params = _params_from_root(_polish(p2, aa, bb, dd, ee),
                                   aa, bb, dd, ee, bath.Phi, branch)
        if params is None:
            attempts.append((branch, p2, None))
            continue
        res = float(np.max(np.abs(sgad_residuals(params, bath, t))))
        if res <= RESIDUAL_TOL:
            return params
        attempts.append((branch, p2, res))
    raise ChannelSynthesisError(
        f"no certified p2 branch at t={t} for {bath}: {attempts}")


def sgad_residuals(params: SgadParams, bath: BathSpec, t):
    """Residuals of the five Bloch-matching constraints, as an array."""
    der = derive_bath(bath)
    q = 0.5 * bath.gamma0 * der.two_n_plus_one * t
    p = 0.5 * bath.gamma0 * der.a * t
    slow, fast = np.exp(p - q), np.exp(-p - q)
    ch, sh = 0.5 * (slow + fast), 0.5 * (slow - fast)
    ee = np.exp(-2.0 * q)
    p1, p2 = params.p1, params.p2
    al, mu, nu = params.alpha, params.mu, params.nu
    cphi, sphi = np.cos(bath.Phi), np.sin(bath.Phi)
    cth, sth = np.cos(params.theta), np.sin(params.theta)
    return np.array([
        p1 * np.sqrt(1.0 - al) + p2 * np.sqrt((1.0 - mu) * (1.0 - nu)) - ch,
        p2 * np.sqrt(mu * nu) * cth - cphi * sh,
        p2 * np.sqrt(mu * nu) * sth - sphi * sh,
        p1 * al + p2 * (mu - nu) - (1.0 - ee) / der.two_n_plus_one,
        1.0 - p1 * al - p2 * (mu + nu) - ee,
    ])


def sgad_kraus(params: SgadParams) -> KrausSet:
    """Four SGAD Kraus operators from a certified parameter set."""
    for name in ("p1", "p2", "alpha", "mu", "nu"):
        v = getattr(params, name)
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} must be in [0,1], got {v}")
    if abs(params.p1 + params.p2 - 1.0) > 1e-10:
        raise ValueError(f"p1 + p2 must equal 1, got {params.p1 + params.p2}")
    sp1, sp2 = np.sqrt(params.p1), np.sqrt(params.p2)
    sal = np.sqrt(params.alpha)
    smu, snu = np.sqrt(params.mu), np.sqrt(params.nu)
    e0 = sp1 * np.array([[np.sqrt(1.0 - params.alpha), 0.0],
                         [0.0, 1.0]], dtype=complex)
    e1 = sp1 * np.array([[0.0, 0.0], [sal, 0.0]], dtype=complex)
    e2 = sp2 * np.array([[np.sqrt(1.0 - params.mu), 0.0],
                         [0.0, np.sqrt(1.0 - params.nu)]], dtype=complex)
    e3 = sp2 * np.array([[0.0, snu],
                         [smu * np.exp(-1j * params.theta), 0.0]], dtype=complex)
    return KrausSet(operators=(e0, e1, e2, e3), label="SGAD",
                    meta={"params": params})


def synthesize_channel(bath: BathSpec, t) -> KrausSet:
    """Channel for a bath at time t, dispatching N = 0 to amplitude damping."""
    try:
        return sgad_kraus(sgad_params(bath, t))
    except DegenerateChannelError:
        lam = -np.expm1(-bath.gamma0 * t)
        k = ad_kraus(lam)
        k.meta["notice"] = "degenerate bath (N = 0): amplitude damping emitted"
        return k


def apply_channel(k: KrausSet, rho):
    """Channel action sum_j E_j rho E_j^dagger."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((2, 2), dtype=complex)
    for e in k.operators:
        out += e @ rho @ e.conj().T
    return out


def completeness_defect(k: KrausSet) -> float:
    """Frobenius norm of sum_j E_j^dagger E_j - I."""
    acc = np.zeros((2, 2), dtype=complex)
    for e in k.operators:
        acc += e.conj().T @ e
    return float(np.linalg.norm(acc - IDENTITY))


def choi_matrix(k: KrausSet):
    """Unnormalized Choi matrix sum_j (E_j x I)|Phi+><Phi+|(E_j x I)^dagger,
    trace 2 for a trace-preserving channel."""
    phi = np.zeros(4, dtype=complex)
    phi[0] = phi[3] = 1.0  # unnormalized |00> + |11>
    choi = np.zeros((4, 4), dtype=complex)
    for e in k.operators:
        v = np.kron(e, np.eye(2)) @ phi
        choi += np.outer(v, v.conj())
    return choi


def cp_defect(choi) -> float:
    """Negative part of the Choi spectrum: -min eigenvalue, clamped at 0.

    Eigenpairs are certified by their residual ||C v - lam v||.
    """
    choi = np.asarray(choi, dtype=complex)
    vals, vecs = np.linalg.eigh(choi)
    for lam, v in zip(vals, vecs.T):
        res = float(np.linalg.norm(choi @ v - lam * v))
        if res > 1e-9:
            raise AssertionError(f"uncertified Choi eigenpair, residual {res:.3e}")
    return float(max(-vals.min(), 0.0))


def kraus_to_json(k: KrausSet) -> str:
    """Serialize a KrausSet: row-major matrices of [re, im] pairs plus the
    label and generating record; 17-significant-digit round-trip."""
    def enc(x):
        if isinstance(x, SgadParams):
            return {f: getattr(x, f) for f in
                    ("p1", "p2", "alpha", "mu", "nu", "theta", "branch")}
        if isinstance(x, BathSpec):
            return {f: getattr(x, f) for f in ("T", "r", "Phi", "gamma0", "omega")}
        raise TypeError(f"cannot encode {type(x)}")

    ops = [[[[float(c.real), float(c.imag)] for c in row] for row in op]
           for op in k.operators]
    return json.dumps({"label": k.label, "operators": ops, "meta": k.meta},
                      default=enc, indent=2)


def kraus_from_json(text: str) -> KrausSet:
    """Inverse of kraus_to_json (meta is kept as plain dicts)."""
    doc = json.loads(text)
    ops = tuple(np.array([[complex(re, im) for re, im in row] for row in op])
                for op in doc["operators"])
    return KrausSet(operators=ops, label=doc["label"], meta=doc.get("meta", {}))
