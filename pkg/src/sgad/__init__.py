"""Qubit channels from a squeezed thermal bath.

Kraus synthesis of the amplitude damping, generalized amplitude damping and
squeezed generalized amplitude damping channels from physical bath
parameters, the matching analytic Bloch dynamics, an independent RK4 master
equation integrator, and a Holevo-quantity capacity search. The ``sgad``
console script reproduces the channel parameter sweeps, evolution traces
and capacity curves as CSV/JSON (optionally with rendered figures).
"""

__version__ = "0.1.0"

from .bath import BathSpec, DerivedBath, derive_bath, planck_occupation
from .bloch_dynamics import asymptotic_state, evolve_bloch, evolve_density
from .capacity import (
    CapacityResult,
    Ensemble,
    binary_orthogonal_ensemble,
    chi_surface,
    classical_capacity,
    holevo_chi,
)
from .jaynes_cummings import JcSpec, jc_evolve, jc_lambda
from .kraus_channels import (
    ChannelSynthesisError,
    DegenerateChannelError,
    KrausSet,
    SgadParams,
    ad_kraus,
    apply_channel,
    choi_matrix,
    completeness_defect,
    cp_defect,
    gad_kraus,
    gad_params,
    kraus_from_json,
    kraus_to_json,
    sgad_kraus,
    sgad_params,
    sgad_residuals,
    synthesize_channel,
)
from .lindblad_oracle import LindbladGenerator, build_generator, integrate, rhs
from .qubit_core import (
    DensityReport,
    bloch_to_density,
    density_to_bloch,
    eigenvalues_hermitian2,
    pure_state,
    validate_density,
    von_neumann_entropy,
)

__all__ = [
    "__version__",
    "BathSpec", "DerivedBath", "derive_bath", "planck_occupation",
    "asymptotic_state", "evolve_bloch", "evolve_density",
    "CapacityResult", "Ensemble", "binary_orthogonal_ensemble",
    "chi_surface", "classical_capacity", "holevo_chi",
    "JcSpec", "jc_evolve", "jc_lambda",
    "ChannelSynthesisError", "DegenerateChannelError", "KrausSet",
    "SgadParams", "ad_kraus", "apply_channel", "choi_matrix",
    "completeness_defect", "cp_defect", "gad_kraus", "gad_params",
    "kraus_from_json", "kraus_to_json", "sgad_kraus", "sgad_params",
    "sgad_residuals", "synthesize_channel",
    "LindbladGenerator", "build_generator", "integrate", "rhs",
    "DensityReport", "bloch_to_density", "density_to_bloch",
    "eigenvalues_hermitian2", "pure_state", "validate_density",
    "von_neumann_entropy",
]
