import numpy as np
import pytest

from sgad.bath import BathSpec
from sgad.bloch_dynamics import asymptotic_state, evolve_density
from sgad.lindblad_oracle import (
    build_generator,
    default_step,
    integrate,
    liouvillian,
    rhs,
)
from sgad.qubit_core import pure_state

BATH = BathSpec(T=1.0, r=1.0, Phi=0.7, gamma0=0.05)


def test_zero_temperature_has_single_operator():
    gen = build_generator(BathSpec(T=0.0, r=0.0, gamma0=0.05))
    r1, r2 = gen.operators
    assert np.any(r1 != 0)
    assert np.all(r2 == 0)


def test_rhs_preserves_trace_and_hermiticity():
    gen = build_generator(BATH)
    rho = pure_state(0.8, 1.9)
    d = rhs(gen, rho)
    assert np.trace(d) == pytest.approx(0.0, abs=1e-15)
    assert d == pytest.approx(d.conj().T)


def test_rhs_vanishes_at_fixed_point():
    gen = build_generator(BATH)
    assert np.linalg.norm(rhs(gen, asymptotic_state(BATH))) < 1e-15


def test_liouvillian_matches_rhs():
    gen = build_generator(BATH)
    rng = np.random.default_rng(2)
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    lv = liouvillian(gen)
    assert (lv @ m.reshape(4)).reshape(2, 2) == pytest.approx(rhs(gen, m))


def test_integrate_matches_analytic():
    gen = build_generator(BATH)
    rho0 = pure_state(0.6, 2.1)
    for t in (0.5, 5.0, 20.0):
        num = integrate(gen, rho0, t)
        assert num == pytest.approx(evolve_density(rho0, BATH, t), abs=1e-8)


def test_integrate_batched_states():
    gen = build_generator(BATH)
    stack = np.stack([pure_state(0.3, 0.1), pure_state(2.0, 4.0)])
    out = integrate(gen, stack, 3.0)
    assert out.shape == (2, 2, 2)
    for k in range(2):
        assert out[k] == pytest.approx(integrate(gen, stack[k], 3.0))


def test_convergence_is_fourth_order():
    gen = build_generator(BATH)
    rho0 = pure_state(0.6, 2.1)
    exact = evolve_density(rho0, BATH, 1.0)
    h = 0.05
    e1 = np.abs(integrate(gen, rho0, 1.0, dt=h) - exact).max()
    e2 = np.abs(integrate(gen, rho0, 1.0, dt=h / 2.0) - exact).max()
    order = np.log2(e1 / e2)
    assert 3.7 <= order <= 4.3


def test_trace_drift_warning_on_coarse_step():
    bath = BathSpec(T=5.0, r=2.0, gamma0=0.05)
    gen = build_generator(bath)
    with pytest.warns(RuntimeWarning):
        integrate(gen, pure_state(0.0, 0.0), 5.0, dt=0.5)


def test_default_step_resolves_stiffest_rate():
    stiff = build_generator(BathSpec(T=5.0, r=2.0, gamma0=0.05))
    assert default_step(stiff) < 1e-3
    assert default_step(build_generator(BATH)) > 0


def test_rejects_bad_arguments():
    gen = build_generator(BATH)
    with pytest.raises(ValueError):
        integrate(gen, pure_state(0, 0), -1.0)
    with pytest.raises(ValueError):
        integrate(gen, pure_state(0, 0), 1.0, dt=0.0)
