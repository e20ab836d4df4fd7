"""Restricted roots, curvature and the invariants I = v = |H|, lambda0 = |H|^2 / 4
of symmetric spaces of noncompact type, built from matrix Lie algebras."""
from .errors import SpecError, SymspaceError
from .invariants import (
    CurvatureSpectrum,
    SpaceInvariants,
    curvature_operator,
    curvature_spectrum,
    mean_curvature_l,
    numeric_sup_l,
    rescale_invariants,
    sectional_curvature,
    space_invariants,
)
from .lie_core import (
    AlgebraElement,
    CartanDecomposition,
    LieAlgebraRealization,
    ad_matrix,
    bracket,
    build_algebra,
    cartan_decompose,
    cartan_involution,
    inner_product,
    killing_form,
)
from .root_space import (
    MaximalAbelian,
    RestrictedRoot,
    RootSystem,
    choose_positive,
    compute_H,
    maximal_abelian,
    restricted_roots,
    root_system,
    root_vector,
)
from .spaces import SpaceSpec, parse_space

__version__ = "0.1.0"

__all__ = [
    "SpecError",
    "SymspaceError",
    "CurvatureSpectrum",
    "SpaceInvariants",
    "curvature_operator",
    "curvature_spectrum",
    "mean_curvature_l",
    "numeric_sup_l",
    "rescale_invariants",
    "sectional_curvature",
    "space_invariants",
    "AlgebraElement",
    "CartanDecomposition",
    "LieAlgebraRealization",
    "ad_matrix",
    "bracket",
    "build_algebra",
    "cartan_decompose",
    "cartan_involution",
    "inner_product",
    "killing_form",
    "MaximalAbelian",
    "RestrictedRoot",
    "RootSystem",
    "choose_positive",
    "compute_H",
    "maximal_abelian",
    "restricted_roots",
    "root_system",
    "root_vector",
    "SpaceSpec",
    "parse_space",
]
