"""Exact rational machinery for distribution functions and copula extraction.

The package verifies, with tolerance zero, the classical properties of
generalized inverses, the box-volume axioms of multivariate distribution
functions, and the copula obtained from a cdf by the right-limit quantile
transform; wherever a property genuinely fails (discrete margins, flat
pieces), the reports carry exact rational counterexample witnesses.
"""

from .errors import CopulaCheckError, DomainError, ValidationError
from .families import (
    ComonotoneDf,
    CountermonotoneDf,
    EmpiricalDf,
    GridDf,
    GridMass,
    ProductDf,
    comonotone_df,
    countermonotone_df,
    empirical_from_rows,
    grid_df,
    product_df,
)
from .monotone import (
    CheckEntry,
    FfResult,
    Knot,
    LemmaReport,
    MonotoneFn,
    discrete_cdf,
    ff_check,
    lemma_report,
    make_monotone,
    uniform_cdf,
)
from .mvdf import (
    Cuboid,
    DfReport,
    MultivariateDf,
    check_df_axioms,
    df_eval,
    margin,
    random_unit_cuboids,
    vertex_sum,
    volume,
)
from .rng import SplitMix64
from .scalars import NEG_INF, POS_INF, ExtScalar, Scalar, fmt, parse_ext, parse_scalar
from .sklar import (
    CheckReport,
    Copula,
    GridSpec,
    Violation,
    copula_eval,
    extract_copula,
    verify_copula_axioms,
    verify_sklar_identity,
    verify_uniform_margins,
)

__version__ = "0.1.0"

__all__ = [
    "NEG_INF",
    "POS_INF",
    "CheckEntry",
    "CheckReport",
    "ComonotoneDf",
    "Copula",
    "CopulaCheckError",
    "CountermonotoneDf",
    "Cuboid",
    "DfReport",
    "DomainError",
    "EmpiricalDf",
    "ExtScalar",
    "FfResult",
    "GridDf",
    "GridMass",
    "GridSpec",
    "Knot",
    "LemmaReport",
    "MonotoneFn",
    "MultivariateDf",
    "ProductDf",
    "Scalar",
    "SplitMix64",
    "ValidationError",
    "Violation",
    "check_df_axioms",
    "comonotone_df",
    "copula_eval",
    "countermonotone_df",
    "df_eval",
    "discrete_cdf",
    "empirical_from_rows",
    "extract_copula",
    "ff_check",
    "fmt",
    "grid_df",
    "lemma_report",
    "make_monotone",
    "margin",
    "parse_ext",
    "parse_scalar",
    "product_df",
    "random_unit_cuboids",
    "uniform_cdf",
    "verify_copula_axioms",
    "verify_sklar_identity",
    "verify_uniform_margins",
    "vertex_sum",
    "volume",
]
