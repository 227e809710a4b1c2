"""Closed-form inverse and determinant of a perturbed 4-dimensional metric.

With ``g = g0 + h`` and the mixed tensor ``H = g0^-1 h`` we have
``g = g0 (I + H)``, so both ``det(g) / det(g0) = det(I + H)`` and
``g^-1 = (I + H)^-1 g0^-1`` are the 4-dimensional characteristic and
resolvent formulas at ``z = 1`` with the operator ``-H``.  Everything is a
polynomial in ``H`` and its traces ``H1..H4``; nothing here inverts ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import scalars
from .errors import (
    AsymmetricTensor,
    DegenerateBackground,
    DegenerateTotalMetric,
    ModeMismatch,
    ShapeError,
    SingularMatrix,
)
from .matrix import SquareMatrix, _negligible, _resolve_tolerance, inverse, power_traces
from .scalars import Scalar

DIM = 4


class _SymmetricTensor(SquareMatrix):
    """4x4 symmetric component array; asymmetric input is rejected, never symmetrized."""

    __slots__ = ()

    def __init__(self, components, mode: Optional[str] = None):
        super().__init__(components, mode)
        if self.n != DIM:
            raise ShapeError(f"expected 4x4 components, got {self.n}x{self.n}")
        a = self.array
        for mu in range(DIM):
            for nu in range(mu + 1, DIM):
                if a[mu, nu] != a[nu, mu]:
                    raise AsymmetricTensor(
                        f"component ({mu},{nu}) = {a[mu, nu]} differs from ({nu},{mu}) = {a[nu, mu]}"
                    )


class MetricTensor(_SymmetricTensor):
    """Covariant components ``g_{mu nu}``; nondegeneracy is checked where it is used."""

    __slots__ = ()


class Perturbation(_SymmetricTensor):
    """Covariant components ``h_{mu nu}``."""

    __slots__ = ()


def _as(cls, x):
    return x if isinstance(x, cls) else cls(x)


@dataclass(frozen=True)
class MixedPerturbation:
    H: SquareMatrix
    traces: Tuple[Scalar, Scalar, Scalar, Scalar]
    background_inverse: SquareMatrix


def mixed_perturbation(g0, h, tolerance: Optional[float] = None) -> MixedPerturbation:
    """``H = g0^-1 h`` together with ``H_k = trace(H**k)`` for ``k = 1..4``."""
    g0, h = _as(MetricTensor, g0), _as(Perturbation, h)
    if g0.mode != h.mode:
        raise ModeMismatch(f"g0 is {g0.mode} but h is {h.mode}")
    try:
        g0_inv = inverse(g0, tolerance)
    except SingularMatrix as exc:
        raise DegenerateBackground(f"background metric is degenerate: {exc}") from None
    H = g0_inv @ h
    return MixedPerturbation(H, power_traces(H, DIM), g0_inv)


def _partial_sums(traces) -> List[Scalar]:
    """``s0 .. s4`` with ``s4 = det(I + H)``.

    ``s_k`` adds the degree-k coefficient of ``det(I + H)``; ``s1..s3`` are the
    scalar weights of ``H**2, H, I`` in the inverse formula.
    """
    H1, H2, H3, H4 = traces
    one = scalars.one(scalars.mode_of(H1))
    e1 = H1
    e2 = (H1**2 - H2) / 2
    e3 = (H1**3 - 3 * H1 * H2 + 2 * H3) / 6
    e4 = (H1**4 - 6 * H1**2 * H2 + 8 * H1 * H3 + 3 * H2**2 - 6 * H4) / 24
    s = [one]
    for e in (e1, e2, e3, e4):
        s.append(s[-1] + e)
    return s


def det_ratio(g0, h, tolerance: Optional[float] = None) -> Scalar:
    """``det(g0 + h) / det(g0)`` as a polynomial in ``H1..H4``."""
    return _partial_sums(mixed_perturbation(g0, h, tolerance).traces)[4]


def inverse_metric(g0, h, tolerance: Optional[float] = None) -> MetricTensor:
    """``(g0 + h)^-1`` as ``[-H**3 + s1 H**2 - s2 H + s3 I] g0^-1 / s4``.

    Raises :class:`DegenerateTotalMetric` when ``s4 = det(g)/det(g0)`` vanishes.
    """
    mp = mixed_perturbation(g0, h, tolerance)
    mode = mp.H.mode
    tol = _resolve_tolerance(tolerance, mode)
    s = _partial_sums(mp.traces)
    ratio = s[4]
    if _negligible(ratio, sum(abs(x) for x in s[:4]), tol, mode):
        raise DegenerateTotalMetric(f"det(g0 + h) vanishes (ratio {ratio})")
    H = mp.H
    # Horner in H: ((-H + s1 I) H - s2 I) H + s3 I
    poly = ((-H).shift(s[1]) @ H).shift(-s[2])
    poly = (poly @ H).shift(s[3])
    out = (poly @ mp.background_inverse).scale(1 / ratio)
    if mode != scalars.RATIONAL:
        # the product is symmetric up to rounding; restore exact symmetry
        out = SquareMatrix((out.array + out.array.T) / 2, mode)
    return MetricTensor(out)


def neumann_truncation(g0, h, order: int, tolerance: Optional[float] = None) -> SquareMatrix:
    """``(I - H + H**2 - ... + (-H)**order) g0^-1``; no convergence check."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    mp = mixed_perturbation(g0, h, tolerance)
    return _neumann_sums(mp, order)[-1]


def _neumann_sums(mp: MixedPerturbation, max_order: int) -> List[SquareMatrix]:
    term = mp.background_inverse
    total = term
    out = [total]
    minus_H = -mp.H
    for _ in range(max_order):
        term = minus_H @ term
        total = total + term
        out.append(total)
    return out


def neumann_error_report(
    g0, h, max_order: int, tolerance: Optional[float] = None
) -> List[Tuple[int, Scalar]]:
    """Max-norm distance between each Neumann truncation and the closed-form inverse."""
    if max_order < 0:
        raise ValueError(f"max_order must be nonnegative, got {max_order}")
    exact = inverse_metric(g0, h, tolerance)
    mp = mixed_perturbation(g0, h, tolerance)
    return [
        (order, (partial - exact).max_norm())
        for order, partial in enumerate(_neumann_sums(mp, max_order))
    ]
