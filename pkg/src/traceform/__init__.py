"""Characteristic polynomials from power traces, exact and in floating point.

The coefficients of ``det(zI - A)`` are computed from ``trace(A**k)`` by the
Newton recursion; the same coefficients give the Cayley-Hamilton null
identity, a polynomial formula for the resolvent ``(zI - A)^-1`` and, in four
dimensions, the closed-form inverse of a perturbed metric ``g0 + h``.
"""

from .errors import (
    AsymmetricTensor,
    DegenerateBackground,
    DegenerateTotalMetric,
    DivisionByZero,
    EmptyInput,
    ModeMismatch,
    NegativeTolerance,
    ParseError,
    ShapeError,
    SingularMatrix,
    SpectrumPoint,
    TraceFormError,
    UsageError,
)
from .matrix import (
    ResolventValue,
    SquareMatrix,
    adjugate_polynomial,
    cayley_hamilton_residual,
    char_poly,
    determinant,
    inverse,
    power_traces,
    resolvent,
)
from .metric import (
    MetricTensor,
    MixedPerturbation,
    Perturbation,
    det_ratio,
    inverse_metric,
    mixed_perturbation,
    neumann_error_report,
    neumann_truncation,
)
from .traces import (
    CharPoly,
    TraceFormula,
    evaluate_poly,
    horner_partial_sums,
    newton_coefficients,
    newton_traces,
    symbolic_trace_formula,
)

__version__ = "0.1.0"
