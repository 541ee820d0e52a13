import numpy as np
import pytest

from sgad.bath import BathSpec
from sgad.capacity import (
    Ensemble,
    binary_orthogonal_ensemble,
    chi_surface,
    classical_capacity,
    holevo_chi,
)
from sgad.kraus_channels import KrausSet, ad_kraus, synthesize_channel
from sgad.qubit_core import IDENTITY


def identity_channel():
    return KrausSet(operators=(IDENTITY.copy(),), label="ID")


def test_ensemble_validation():
    with pytest.raises(ValueError):
        Ensemble(members=((0.6, None), (0.6, None)))
    with pytest.raises(ValueError):
        binary_orthogonal_ensemble(0.5, 0.5, 1.5)


def test_chi_identity_channel_is_binary_entropy():
    # orthogonal pure inputs through the identity: chi = H(f)
    for f in (0.5, 0.2):
        chi = holevo_chi(binary_orthogonal_ensemble(0.7, 1.1, f),
                         identity_channel())
        h = -f * np.log2(f) - (1 - f) * np.log2(1 - f)
        assert chi == pytest.approx(h, abs=1e-12)


def test_chi_ad_equator_frozen():
    # [DERIVED] chi of the equatorial orthogonal pair through AD(0.3),
    # f = 1/2, at 40 digits
    chi = holevo_chi(binary_orthogonal_ensemble(np.pi / 2.0, 0.0, 0.5),
                     ad_kraus(0.3))
    assert chi == pytest.approx(0.6243827114607841, abs=1e-13)


def test_chi_surface_shape_and_bounds():
    k = synthesize_channel(BathSpec(T=1.0, r=0.5, gamma0=0.05), 3.0)
    thetas, phis, chi = chi_surface(k, n_theta=13, n_phi=17)
    assert chi.shape == (13, 17)
    assert np.all(chi >= -1e-12)
    assert np.all(chi <= 1.0 + 1e-12)


def test_capacity_identity_channel():
    result = classical_capacity(identity_channel(), n_theta=13, n_phi=17)
    assert result.c == pytest.approx(1.0, abs=1e-12)
    assert result.kind == "restricted_binary_capacity"


def test_capacity_refinement_beats_grid():
    k = synthesize_channel(BathSpec(T=5.0, r=1.0, gamma0=0.05), 5.0)
    thetas, phis, chi = chi_surface(k, n_theta=21, n_phi=21)
    refined = classical_capacity(k, n_theta=21, n_phi=21)
    assert refined.c >= float(chi.max()) - 1e-15


def test_capacity_argmax_on_equator():
    # the squeezing-phase-aligned optimum sits at theta0 = pi/2
    k = synthesize_channel(BathSpec(T=5.0, r=1.0, Phi=0.0, gamma0=0.05), 5.0)
    result = classical_capacity(k)
    assert abs(result.theta0 - np.pi / 2.0) <= 0.01


def test_capacity_deterministic():
    k = synthesize_channel(BathSpec(T=5.0, r=2.0, gamma0=0.05), 2.0)
    a = classical_capacity(k, n_theta=21, n_phi=41)
    b = classical_capacity(k, n_theta=21, n_phi=41)
    assert (a.c, a.theta0, a.phi0) == (b.c, b.theta0, b.phi0)
