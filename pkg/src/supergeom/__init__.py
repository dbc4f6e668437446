"""Exact computations on projective superspace P^{m,n}.

Supercommutative polynomial arithmetic, reduction of B(m,n)-modules to
parity-tagged graded modules over the even subring, Groebner bases and
minimal free resolutions, parity-split Hilbert polynomials and sheaf
cohomology, super Koszul complexes, and a few Picard-theoretic tools.
"""

from .cohomology import (
    CohomologyTable,
    castelnuovo_check,
    cohomology_table,
    is_r_regular,
    line_bundle_cohomology_bott,
    line_bundle_cohomology_recursive,
    regularity,
    serre_duality_check,
    sheaf_cohomology,
)
from .dims import DimPair, PolyPair, QPoly
from .errors import (
    HomogeneityError,
    LimitError,
    ParityError,
    ParseError,
    PreconditionError,
    RingMismatchError,
    SingularBlockError,
    SuperGeomError,
    UnknownVariableError,
)
from .expansion import BModulePresentation, GradedSModule, expand_module, parity_components, theta_basis
from .groebner import (
    BettiTable,
    GroebnerBasis,
    Resolution,
    betti_table,
    free_resolution,
    groebner_basis,
    saturate,
)
from .hilbert import (
    FiltrationQuotients,
    euler_characteristic,
    flag_fibre_dim,
    h_mn,
    hilbert_function,
    hilbert_polynomial_pair,
    super_hilbert_polynomial,
    supergrass_dim,
    total_filtration,
)
from .koszul import (
    KoszulComplex,
    berezinian_transform_scalar,
    dual_concentration_check,
    koszul_complex,
    koszul_homology,
    regular_sequence_check,
)
from .picard import (
    FactoredUnit,
    GrassmannAlgebra,
    NestedResult,
    SplitSurfaceData,
    even_unit_factorize,
    exp_even_nilpotent,
    log_unipotent,
    nested_pair_count,
    nested_zero_cycle_check,
    pic_parity_structure,
    picard_odd_dimension,
)
from .superalgebra import (
    EVEN,
    ODD,
    BiDegree,
    Parity,
    SuperMatrix,
    SuperPoly,
    SuperRing,
    berezinian,
    polys,
    standard_smooth_check,
)

__version__ = "0.1.0"

__all__ = [
    "BModulePresentation",
    "BettiTable",
    "BiDegree",
    "CohomologyTable",
    "DimPair",
    "EVEN",
    "FactoredUnit",
    "FiltrationQuotients",
    "GradedSModule",
    "GrassmannAlgebra",
    "GroebnerBasis",
    "HomogeneityError",
    "KoszulComplex",
    "LimitError",
    "NestedResult",
    "ODD",
    "Parity",
    "ParityError",
    "ParseError",
    "PolyPair",
    "PreconditionError",
    "QPoly",
    "Resolution",
    "RingMismatchError",
    "SingularBlockError",
    "SplitSurfaceData",
    "SuperGeomError",
    "SuperMatrix",
    "SuperPoly",
    "SuperRing",
    "UnknownVariableError",
    "berezinian",
    "berezinian_transform_scalar",
    "betti_table",
    "castelnuovo_check",
    "cohomology_table",
    "dual_concentration_check",
    "euler_characteristic",
    "even_unit_factorize",
    "exp_even_nilpotent",
    "expand_module",
    "flag_fibre_dim",
    "free_resolution",
    "groebner_basis",
    "h_mn",
    "hilbert_function",
    "hilbert_polynomial_pair",
    "is_r_regular",
    "koszul_complex",
    "koszul_homology",
    "line_bundle_cohomology_bott",
    "line_bundle_cohomology_recursive",
    "log_unipotent",
    "nested_pair_count",
    "nested_zero_cycle_check",
    "parity_components",
    "pic_parity_structure",
    "picard_odd_dimension",
    "polys",
    "regular_sequence_check",
    "regularity",
    "saturate",
    "serre_duality_check",
    "sheaf_cohomology",
    "standard_smooth_check",
    "super_hilbert_polynomial",
    "supergrass_dim",
    "theta_basis",
    "total_filtration",
]
