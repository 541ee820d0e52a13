import numpy as np
import pytest

from sgad.bath import BathSpec, derive_bath
from sgad.bloch_dynamics import (
    asymptotic_state,
    evolve_bloch,
    evolve_density,
)
from sgad.qubit_core import bloch_to_density, density_to_bloch, pure_state

BATH = BathSpec(T=1.0, r=1.0, Phi=0.7, gamma0=0.05)


def test_identity_at_t_zero():
    b0 = np.array([0.3, -0.2, 0.4])
    assert evolve_bloch(b0, BATH, 0.0) == pytest.approx(b0)
    rho0 = pure_state(1.0, 2.0)
    assert evolve_density(rho0, BATH, 0.0) == pytest.approx(rho0)


def test_bloch_frozen_value():
    # [DERIVED] closed form at 40 digits, b0=(0.3,-0.2,0.4), t=5
    b = evolve_bloch([0.3, -0.2, 0.4], BATH, 5.0)
    assert b == pytest.approx(
        [0.31336680736390393, -0.12665047241947472, -0.05452863323812516],
        abs=1e-14)


def test_density_consistent_with_bloch():
    rng = np.random.default_rng(7)
    for _ in range(25):
        theta0, phi0 = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
        t = rng.uniform(0, 30)
        rho0 = pure_state(theta0, phi0)
        b = evolve_bloch(density_to_bloch(rho0), BATH, t)
        rho = evolve_density(rho0, BATH, t)
        assert rho == pytest.approx(bloch_to_density(b), abs=1e-12)


def test_large_time_no_overflow():
    # r = 2 makes the naive cosh/sinh overflow near t = 100
    bath = BathSpec(T=5.0, r=2.0, gamma0=0.05)
    rho = evolve_density(pure_state(0.3, 0.0), bath, 100.0)
    assert np.all(np.isfinite(rho.view(float)))
    # coherences relax on the slow rate gamma0 (2N+1-a), so push further out
    assert evolve_density(pure_state(0.3, 0.0), bath, 12000.0) == pytest.approx(
        asymptotic_state(bath), abs=1e-12)


def test_relaxation_to_asymptotic_state():
    rho = evolve_density(pure_state(0.0, 0.0), BATH, 500.0)
    assert rho == pytest.approx(asymptotic_state(BATH), abs=1e-12)


def test_asymptotic_population():
    der = derive_bath(BATH)
    rho = asymptotic_state(BATH)
    assert rho[1, 1].real == pytest.approx((der.n_eff + 1.0) / der.two_n_plus_one)
    assert np.trace(rho) == pytest.approx(1.0)


def test_unsqueezed_coherence_decay():
    # at r = 0 the off-diagonal entry decays as a plain exponential
    bath = BathSpec(T=1.0, gamma0=0.05)
    der = derive_bath(bath)
    rho0 = pure_state(np.pi / 2.0, 0.4)
    t = 7.0
    rho = evolve_density(rho0, bath, t)
    decay = np.exp(-0.5 * bath.gamma0 * der.two_n_plus_one * t)
    assert rho[0, 1] == pytest.approx(rho0[0, 1] * decay, abs=1e-14)


def test_schroedinger_picture_phase():
    rho_i = evolve_density(pure_state(1.0, 0.3), BATH, 4.0)
    rho_s = evolve_density(pure_state(1.0, 0.3), BATH, 4.0, picture="schroedinger")
    assert rho_s[0, 0] == pytest.approx(rho_i[0, 0])
    assert rho_s[0, 1] == pytest.approx(rho_i[0, 1] * np.exp(-1j * BATH.omega * 4.0))


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        evolve_bloch([0, 0, 1], BATH, -1.0)
    with pytest.raises(ValueError):
        evolve_density(pure_state(0, 0), BATH, 1.0, picture="heisenberg")
