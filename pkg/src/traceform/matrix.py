"""Dense square matrices and the operations built on their power traces.

Rational matrices are numpy ``object`` arrays of :class:`~fractions.Fraction`
so every product and sum is exact; real and complex matrices use ``float64``
and ``complex128``.  Characteristic coefficients always come from the power
traces through the Newton recursion, never from elimination.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import scalars
from .errors import (
    ModeMismatch,
    NegativeTolerance,
    ShapeError,
    SingularMatrix,
    SpectrumPoint,
)
from .scalars import Scalar
from .traces import CharPoly, TraceSequence, horner_partial_sums, newton_coefficients

#: default absolute tolerance for singularity / spectrum tests in float modes
DEFAULT_FLOAT_TOLERANCE = 1e-12

#: float-mode dimension above which the Newton recursion warns about cancellation
FLOAT_SOFT_CAP = 12

_DTYPES = {scalars.RATIONAL: object, scalars.REAL: np.float64, scalars.COMPLEX: np.complex128}


class PrecisionWarning(UserWarning):
    pass


class SquareMatrix:
    """Immutable ``n x n`` matrix whose entries share one scalar mode."""

    __slots__ = ("_a", "mode")

    def __init__(self, entries, mode: Optional[str] = None):
        if isinstance(entries, SquareMatrix):
            if mode is not None and mode != entries.mode:
                raise ModeMismatch(f"matrix is {entries.mode}, requested {mode}")
            self._a, self.mode = entries._a, entries.mode
            return
        if isinstance(entries, np.ndarray) and entries.dtype.kind in "iufc":
            raw = entries
        else:
            # nested Python lists keep their element types so mixed modes are caught
            raw = np.asarray(entries, dtype=object)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] == 0:
            raise ShapeError(f"expected a nonempty square matrix, got shape {raw.shape}")
        if mode is None:
            kind = raw.dtype.kind
            if kind == "f":
                mode = scalars.REAL
            elif kind == "c":
                mode = scalars.COMPLEX
            else:
                mode = scalars.common_mode(
                    v.item() if isinstance(v, np.generic) else v for v in raw.ravel()
                )
        if mode not in _DTYPES:
            raise ValueError(f"unknown scalar mode {mode!r}")
        if mode == scalars.RATIONAL:
            a = np.empty(raw.shape, dtype=object)
            for idx, v in np.ndenumerate(raw):
                a[idx] = scalars.coerce(v.item() if isinstance(v, np.generic) else v, mode)
        else:
            if raw.dtype == object or (mode == scalars.REAL and raw.dtype.kind == "c"):
                for v in raw.ravel().tolist():
                    scalars.coerce(v, mode)
            a = np.array(raw, dtype=_DTYPES[mode])
        a.flags.writeable = False
        self._a = a
        self.mode = mode

    @classmethod
    def _wrap(cls, a: np.ndarray, mode: str) -> "SquareMatrix":
        m = object.__new__(cls)
        a.flags.writeable = False
        m._a, m.mode = a, mode
        return m

    @classmethod
    def identity(cls, n: int, mode: str = scalars.RATIONAL) -> "SquareMatrix":
        return cls._wrap(_eye(n, mode), mode)

    @classmethod
    def zeros(cls, n: int, mode: str = scalars.RATIONAL) -> "SquareMatrix":
        return cls._wrap(_scaled_eye(n, mode, scalars.zero(mode)), mode)

    @classmethod
    def diag(cls, values, mode: Optional[str] = None) -> "SquareMatrix":
        values = list(values)
        mode = mode or scalars.common_mode(values)
        a = _scaled_eye(len(values), mode, scalars.zero(mode))
        for i, v in enumerate(values):
            a[i, i] = scalars.coerce(v, mode)
        return cls._wrap(a, mode)

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    def tolist(self) -> list:
        return self._a.tolist()

    def __getitem__(self, idx):
        return self._a[idx]

    def __repr__(self):
        return f"SquareMatrix({self._a.tolist()!r}, mode={self.mode!r})"

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.mode == other.mode and np.array_equal(self._a, other._a)

    __hash__ = None

    def _other(self, other: "SquareMatrix") -> np.ndarray:
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected SquareMatrix, got {type(other).__name__}")
        if other.mode != self.mode:
            raise ModeMismatch(f"{self.mode} matrix combined with {other.mode} matrix")
        if other.n != self.n:
            raise ShapeError(f"dimension mismatch: {self.n} vs {other.n}")
        return other._a

    def __matmul__(self, other):
        return SquareMatrix._wrap(self._a @ self._other(other), self.mode)

    def __add__(self, other):
        return SquareMatrix._wrap(self._a + self._other(other), self.mode)

    def __sub__(self, other):
        return SquareMatrix._wrap(self._a - self._other(other), self.mode)

    def __neg__(self):
        return SquareMatrix._wrap(-self._a, self.mode)

    def scale(self, c) -> "SquareMatrix":
        c = _same_mode_scalar(c, self.mode)
        return SquareMatrix._wrap(self._a * c, self.mode)

    def shift(self, c) -> "SquareMatrix":
        """``self + c I``."""
        c = _same_mode_scalar(c, self.mode)
        return SquareMatrix._wrap(self._a + _scaled_eye(self.n, self.mode, c), self.mode)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix._wrap(self._a.T.copy(), self.mode)

    def trace(self) -> Scalar:
        total = scalars.zero(self.mode)
        for i in range(self.n):
            total += self._a[i, i]
        return total

    def max_norm(self):
        """Largest entry magnitude (exact for rationals)."""
        return max(abs(v) for v in self._a.ravel().tolist())

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._a.ravel().tolist())


def _same_mode_scalar(c, mode):
    if scalars.mode_of(c) != mode:
        raise ModeMismatch(f"{scalars.mode_of(c)} scalar used with {mode} matrix")
    return scalars.coerce(c, mode)


def _scaled_eye(n: int, mode: str, c) -> np.ndarray:
    zero = scalars.zero(mode)
    a = np.full((n, n), zero, dtype=_DTYPES[mode])
    for i in range(n):
        a[i, i] = c
    return a


def _eye(n, mode):
    return _scaled_eye(n, mode, scalars.one(mode))


def _as_matrix(A) -> SquareMatrix:
    return A if isinstance(A, SquareMatrix) else SquareMatrix(A)


def _resolve_tolerance(tolerance, mode) -> float:
    if tolerance is None:
        return 0 if mode == scalars.RATIONAL else DEFAULT_FLOAT_TOLERANCE
    if tolerance < 0:
        raise NegativeTolerance(f"tolerance must be nonnegative, got {tolerance!r}")
    if mode == scalars.RATIONAL and tolerance != 0:
        raise ModeMismatch("rational mode admits only tolerance 0")
    return tolerance


def _negligible(value, scale: float, tolerance: float, mode: str) -> bool:
    if mode == scalars.RATIONAL:
        return value == 0
    return abs(value) <= tolerance * scale


# -- operations -------------------------------------------------------------

def power_traces(A, m: int) -> TraceSequence:
    """``(trace(A), trace(A**2), ..., trace(A**m))``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    A = _as_matrix(A)
    out = []
    power = A
    for k in range(1, m + 1):
        if k > 1:
            power = power @ A
        out.append(power.trace())
    return tuple(out)


def char_poly(A) -> CharPoly:
    """Coefficients of ``det(zI - A)`` via the Newton recursion on power traces."""
    A = _as_matrix(A)
    if A.mode != scalars.RATIONAL and A.n > FLOAT_SOFT_CAP:
        warnings.warn(
            f"float-mode Newton recursion at n={A.n} loses accuracy to cancellation",
            PrecisionWarning,
            stacklevel=2,
        )
    return newton_coefficients(power_traces(A, A.n))


def determinant(A) -> Scalar:
    A = _as_matrix(A)
    d = char_poly(A).coefficients[-1]
    return d if A.n % 2 == 0 else -d


def adjugate_polynomial(A, poly: Optional[CharPoly] = None) -> List[SquareMatrix]:
    """Matrices ``B_j = A**j + D1 A**(j-1) + ... + Dj I`` for ``j = 0..n-1``.

    ``(zI - A)^-1 = sum_j z**(n-1-j) B_j / p(z)``, and ``B_(n-1)`` is
    ``(-1)**(n-1)`` times the adjugate of ``A``.
    """
    A = _as_matrix(A)
    D = (poly or char_poly(A)).coefficients
    B = [SquareMatrix.identity(A.n, A.mode)]
    for j in range(1, A.n):
        B.append((A @ B[-1]).shift(D[j - 1]))
    return B


def cayley_hamilton_residual(A) -> SquareMatrix:
    """``A**n + D1 A**(n-1) + ... + Dn I``; exactly zero in rational mode."""
    A = _as_matrix(A)
    poly = char_poly(A)
    B = adjugate_polynomial(A, poly)
    return (A @ B[-1]).shift(poly.coefficients[-1])


@dataclass(frozen=True)
class ResolventValue:
    point: Scalar
    value: SquareMatrix
    denominator: Scalar

    def residual(self, A) -> Scalar:
        """Max-norm of ``(zI - A) R - I`` and ``R (zI - A) - I``, whichever is larger."""
        A = _as_matrix(A)
        shifted = (-A).shift(self.point)
        eye = SquareMatrix.identity(A.n, A.mode)
        return max(
            (shifted @ self.value - eye).max_norm(),
            (self.value @ shifted - eye).max_norm(),
        )


def resolvent(A, z, tolerance: Optional[float] = None, verify: bool = False) -> ResolventValue:
    """``(zI - A)^-1`` as ``sum_j c_j A**(n-1-j) / p(z)``.

    ``c_j`` are the Horner partial sums of the characteristic polynomial at
    ``z``.  Raises :class:`SpectrumPoint` when ``p(z)`` vanishes (exactly in
    rational mode, relative to ``tolerance * (1 + sum |Dk| |z|**(n-k))`` in
    float modes).  With ``verify`` the result is checked against
    ``(zI - A) R = R (zI - A) = I``.
    """
    A = _as_matrix(A)
    z = _same_mode_scalar(z, A.mode)
    tol = _resolve_tolerance(tolerance, A.mode)
    poly = char_poly(A)
    c = horner_partial_sums(poly, z)
    p = c[-1] * z + poly.coefficients[-1]
    n = A.n
    scale = 1 + sum(abs(d) * abs(z) ** (n - k) for k, d in enumerate(poly.coefficients, 1))
    if _negligible(p, scale, tol, A.mode):
        raise SpectrumPoint(f"z = {z} is a characteristic value (p(z) = {p})")
    # Horner in A: (((I) A + c1 I) A + c2 I) ... = sum_j c_j A**(n-1-j)
    num = SquareMatrix.identity(n, A.mode)
    for cj in c[1:]:
        num = (A @ num).shift(cj)
    out = ResolventValue(z, num.scale(1 / p), p)
    if verify:
        err = out.residual(A)
        limit = 0 if A.mode == scalars.RATIONAL else 1e-8
        if err > limit:
            raise ArithmeticError(f"resolvent check failed: residual {err}")
    return out


def inverse(A, tolerance: Optional[float] = None) -> SquareMatrix:
    """``A^-1 = -(A**(n-1) + D1 A**(n-2) + ... + D(n-1) I) / Dn``."""
    A = _as_matrix(A)
    tol = _resolve_tolerance(tolerance, A.mode)
    poly = char_poly(A)
    dn = poly.coefficients[-1]
    scale = 1 + sum(abs(d) for d in poly.coefficients)
    if _negligible(dn, scale, tol, A.mode):
        raise SingularMatrix(f"matrix is singular (Dn = {dn})")
    B = adjugate_polynomial(A, poly)
    return B[-1].scale(-1 / dn)
