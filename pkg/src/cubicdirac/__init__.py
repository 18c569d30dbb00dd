"""Exact linear algebra for cubic Dirac operators attached to parabolic
subalgebras of sl_n, with u-homology / ubar-cohomology and their Hodge-type
decompositions."""

__version__ = "0.1.0"

from .kernels import BACKEND
from .linalg import Matrix, SubspaceBasis, image_basis, kernel_basis, rank
from .lie import LieAlgebraSln, ParabolicAlgebra, RootSystem, Weight, parabolic_split
from .representations import Representation, build_irrep, isotypic_decomposition
from .clifford import SpinModule
from .dirac import (DiracComplex, boundary_map, coboundary_map, cohomology, dirac_complex,
                    dirac_operator, hodge_decompose, identity_suite, isotypic_blocks,
                    main_theorem_splittings, scalar_c, splitting_operator_Tlambda,
                    verify_square_formula)
from .fourier import (SmoothRepModel, casimir_growth_series, cg_scan, dimension_estimate_check,
                      global_T, seminorm_estimate_check)

__all__ = [
    "BACKEND", "Matrix", "SubspaceBasis", "image_basis", "kernel_basis", "rank",
    "LieAlgebraSln", "ParabolicAlgebra", "RootSystem", "Weight", "parabolic_split",
    "Representation", "build_irrep", "isotypic_decomposition", "SpinModule",
    "DiracComplex", "boundary_map", "coboundary_map", "cohomology", "dirac_complex",
    "dirac_operator", "hodge_decompose", "identity_suite", "isotypic_blocks",
    "main_theorem_splittings", "scalar_c", "splitting_operator_Tlambda",
    "verify_square_formula", "SmoothRepModel", "casimir_growth_series", "cg_scan",
    "dimension_estimate_check", "global_T", "seminorm_estimate_check",
]
