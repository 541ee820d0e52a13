import numpy as np
import pytest

from sgad.bath import BathSpec, derive_bath, planck_occupation


def test_planck_occupation_zero_temperature():
    assert planck_occupation(1.0, 0.0) == 0.0


def test_planck_occupation_value():
    # [DERIVED] 1/(e - 1) at 40 digits
    assert planck_occupation(1.0, 1.0) == pytest.approx(0.5819767068693265, abs=1e-15)


def test_planck_occupation_no_overflow():
    assert planck_occupation(1.0, 1e-6) == 0.0


def test_derived_unsqueezed():
    der = derive_bath(BathSpec(T=1.0))
    assert der.n_eff == pytest.approx(der.n_th)
    assert der.a == 0.0
    assert der.m == 0.0


def test_derived_squeezed_values():
    # [DERIVED] n_th(cosh^2 r + sinh^2 r) + sinh^2 r and sinh(2r)(2 n_th + 1)
    der = derive_bath(BathSpec(T=1.0, r=1.0))
    assert der.n_eff == pytest.approx(3.570608104436637, abs=1e-13)
    assert der.a == pytest.approx(7.848356960714119, abs=1e-13)
    der = derive_bath(BathSpec(T=5.0, r=2.0))
    assert der.n_eff == pytest.approx(136.4959982578941, rel=1e-13)
    assert der.a == pytest.approx(273.8082300122315, rel=1e-13)


def test_derived_zero_temperature_squeezed():
    der = derive_bath(BathSpec(T=0.0, r=1.0))
    assert der.n_th == 0.0
    assert der.n_eff == pytest.approx(np.sinh(1.0) ** 2)


def test_decay_margin_identity():
    # 2N + 1 - a = (2 n_th + 1) e^{-2r} for any bath
    for T, r in [(0.0, 0.0), (1.0, 0.5), (3.0, 2.0), (7.0, 1.3)]:
        der = derive_bath(BathSpec(T=T, r=r))
        margin = der.two_n_plus_one - der.a
        assert margin == pytest.approx(
            (2.0 * der.n_th + 1.0) * np.exp(-2.0 * r), rel=1e-12)
        assert margin > 0


def test_squeezing_correlation_magnitude():
    # |m|^2 = N(N+1) - n_th(n_th+1), heat-bath consistency of the pair
    der = derive_bath(BathSpec(T=2.0, r=0.8, Phi=1.1))
    lhs = abs(der.m) ** 2
    rhs = der.n_eff * (der.n_eff + 1.0) - der.n_th * (der.n_th + 1.0)
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_spec_validation():
    with pytest.raises(ValueError):
        BathSpec(T=-1.0)
    with pytest.raises(ValueError):
        BathSpec(T=1.0, r=-0.1)
    with pytest.raises(ValueError):
        BathSpec(T=1.0, gamma0=0.0)
    with pytest.raises(ValueError):
        BathSpec(T=1.0, omega=-2.0)
