"""Conformable fractional Legendre polynomials with exact arithmetic and an FDE collocation solver."""

from .errors import (
    DomainError,
    FractionalIC,
    IllPosed,
    NegativeBaseEvenRoot,
    NoConvergence,
    NonCommensurate,
    PochhammerPole,
    ProblemParseError,
    SingularSystem,
)
from .fracpoly import (
    Alpha,
    FracPoly,
    conformable_derivative,
    conformable_integral,
    evaluate,
    poly_algebra,
    sequential_derivative,
)
from .legendre import (
    CflpForm,
    HypForm,
    cflp,
    cflp_hyp,
    cflp_integral,
    cflp_via,
    expand_monomial,
    genfun_check,
    hyp2f1_terminating,
    inner_product,
    laplace_integral,
)
from .quad import QuadRule, conformable_quad, gauss_legendre
from .shifted import (
    RootSet,
    cflp_rodrigues,
    project,
    sclp,
    sclp_inner_product,
    sclp_recurrence,
    sclp_rodrigues,
    sclp_roots,
)
from .solver import DerivCoeffs, FdeProblem, SolveReport, assemble, deriv_coeffs, solve

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "FractionalIC",
    "IllPosed",
    "NegativeBaseEvenRoot",
    "NoConvergence",
    "NonCommensurate",
    "PochhammerPole",
    "ProblemParseError",
    "SingularSystem",
    "Alpha",
    "FracPoly",
    "conformable_derivative",
    "conformable_integral",
    "evaluate",
    "poly_algebra",
    "sequential_derivative",
    "CflpForm",
    "HypForm",
    "cflp",
    "cflp_hyp",
    "cflp_integral",
    "cflp_via",
    "expand_monomial",
    "genfun_check",
    "hyp2f1_terminating",
    "inner_product",
    "laplace_integral",
    "RootSet",
    "cflp_rodrigues",
    "project",
    "sclp",
    "sclp_inner_product",
    "sclp_recurrence",
    "sclp_rodrigues",
    "sclp_roots",
    "QuadRule",
    "conformable_quad",
    "gauss_legendre",
    "DerivCoeffs",
    "FdeProblem",
    "SolveReport",
    "assemble",
    "deriv_coeffs",
    "solve",
    "__version__",
]
