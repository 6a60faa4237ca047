"""Finite designs for linear operators, with the binary icosahedral projection design."""

from .design import (
    DesignReport,
    LocalDesignPair,
    check_tau_design,
    coset_reduced_operator,
    local_operator,
    orbit_average,
    verify_tau_design,
)
from .group import (
    X0,
    FiniteMatrixGroup,
    GroupElement,
    ProjectivePoint,
    binary_icosahedral_group,
    generate_closure,
    icosahedral_generators,
)
from .linalg import TolerancePolicy

__version__ = "0.1.0"
