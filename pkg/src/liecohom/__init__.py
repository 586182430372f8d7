"""Exact Chevalley-Eilenberg cohomology, relative and invariant variants, and
the de Rham cohomology of homogeneous quotients G/H."""

__version__ = "0.1.0"

from .catalog import catalog, catalog_entry
from .ce import (
    BettiTable,
    CochainComplex,
    betti,
    ce_differential,
    coadjoint,
    contraction,
    full_complex,
    invariant_complex,
    relative_complex,
)
from .errors import (
    DSquaredNonzero,
    InputError,
    JacobiViolation,
    LieCohomError,
    NotAnIdeal,
    NotASubalgebra,
    NotClosed,
    UnorderedScalar,
)
from .gh import Assumptions, GHReport, cross_validate, gh_cohomology
from .liealg import (
    CompactTypeCertificate,
    LieAlgebra,
    compact_type,
    direct_sum,
    is_ideal,
    is_subalgebra,
    jacobi_check,
    quotient,
    structure,
)
from .linalg import Definiteness, Matrix, Subspace, definiteness, rref, solve
from .scalar import RatFunc, T, format_scalar, parse_scalar
from .symmetric import e1_table, invariant_polynomials_dim
from .torus import TorusFoliation, TrigForm, average, basic_cohomology, build_foliation, homotopy_certificate

__all__ = [
    "Assumptions",
    "average",
    "basic_cohomology",
    "betti",
    "BettiTable",
    "build_foliation",
    "catalog",
    "catalog_entry",
    "ce_differential",
    "coadjoint",
    "CochainComplex",
    "compact_type",
    "CompactTypeCertificate",
    "contraction",
    "cross_validate",
    "Definiteness",
    "definiteness",
    "direct_sum",
    "DSquaredNonzero",
    "e1_table",
    "format_scalar",
    "full_complex",
    "gh_cohomology",
    "GHReport",
    "homotopy_certificate",
    "InputError",
    "invariant_complex",
    "invariant_polynomials_dim",
    "is_ideal",
    "is_subalgebra",
    "jacobi_check",
    "JacobiViolation",
    "LieAlgebra",
    "LieCohomError",
    "Matrix",
    "NotAnIdeal",
    "NotASubalgebra",
    "NotClosed",
    "parse_scalar",
    "quotient",
    "RatFunc",
    "relative_complex",
    "rref",
    "solve",
    "structure",
    "Subspace",
    "T",
    "TorusFoliation",
    "TrigForm",
    "UnorderedScalar",
]
