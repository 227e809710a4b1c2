"""Newton recursion between power traces and characteristic coefficients.

The characteristic polynomial ``p(z) = z**n + D1 z**(n-1) + ... + Dn`` of an
operator ``A`` and its power traces ``Tk = trace(A**k)`` satisfy, for
``k = 1..n``::

    Tk + D1 T(k-1) + ... + D(k-1) T1 + k Dk = 0

so the coefficients are recovered one at a time from the traces, and the
traces from the coefficients.  Running the same recursion over polynomials in
the indeterminates ``T1..Tk`` gives the closed trace formulas
``Dk(T1, ..., Tk)`` (:func:`symbolic_trace_formula`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from . import scalars
from .errors import EmptyInput, ModeMismatch
from .scalars import Scalar

# A trace sequence is a plain tuple (T1, ..., Tm) of same-mode scalars.
TraceSequence = Tuple[Scalar, ...]


def _normalize(values: Iterable, what: str) -> tuple[tuple, str]:
    values = tuple(values)
    if not values:
        raise EmptyInput(f"{what} must not be empty")
    mode = scalars.common_mode(values)
    return tuple(scalars.coerce(v, mode) for v in values), mode


def _divide(x, k: int, mode: str):
    if mode == scalars.RATIONAL:
        return x / k
    return x * (1.0 / k)


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial ``z**n + D1 z**(n-1) + ... + Dn``; stores ``(D1, ..., Dn)``."""

    coefficients: Tuple[Scalar, ...]
    mode: str

    def __post_init__(self):
        coeffs, mode = _normalize(self.coefficients, "coefficients")
        if mode != self.mode:
            raise ModeMismatch(f"coefficients are {mode}, declared {self.mode}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coefficients: Iterable) -> "CharPoly":
        coeffs, mode = _normalize(coefficients, "coefficients")
        return cls(coeffs, mode)

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def __len__(self):
        return self.n

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __call__(self, z):
        return evaluate_poly(self, z)


def _as_charpoly(coeffs) -> CharPoly:
    return coeffs if isinstance(coeffs, CharPoly) else CharPoly.from_coefficients(coeffs)


def _check_point(poly: CharPoly, z) -> Scalar:
    mz = scalars.mode_of(z)
    if mz != poly.mode:
        raise ModeMismatch(f"point is {mz} but polynomial is {poly.mode}")
    return scalars.coerce(z, poly.mode)


def newton_coefficients(traces: Sequence) -> CharPoly:
    """Characteristic coefficients ``D1..Dn`` from power traces ``T1..Tn``."""
    T, mode = _normalize(traces, "traces")
    D: List[Scalar] = []
    for k in range(1, len(T) + 1):
        acc = T[k - 1]
        for j in range(1, k):
            acc += D[j - 1] * T[k - j - 1]
        D.append(-_divide(acc, k, mode))
    return CharPoly(tuple(D), mode)


def newton_traces(coeffs, m: int) -> TraceSequence:
    """Power traces ``T1..Tm`` determined by the coefficients of a monic polynomial.

    For ``k > n`` the traces obey the linear recurrence
    ``Tk = -(D1 T(k-1) + ... + Dn T(k-n))`` that follows from Cayley-Hamilton.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    poly = _as_charpoly(coeffs)
    D, n = poly.coefficients, poly.n
    T: List[Scalar] = []
    for k in range(1, m + 1):
        acc = k * D[k - 1] if k <= n else scalars.zero(poly.mode)
        for j in range(1, min(k - 1, n) + 1):
            acc += D[j - 1] * T[k - j - 1]
        T.append(-acc)
    return tuple(T)


def evaluate_poly(coeffs, z) -> Scalar:
    """Horner evaluation of ``p(z)``."""
    poly = _as_charpoly(coeffs)
    z = _check_point(poly, z)
    acc = scalars.one(poly.mode)
    for d in poly.coefficients:
        acc = acc * z + d
    return acc


def horner_partial_sums(coeffs, z) -> List[Scalar]:
    """Partial Horner sums ``c_j = z**j + D1 z**(j-1) + ... + Dj`` for ``j < n``.

    ``c_j`` multiplies ``A**(n-1-j)`` in the numerator of the resolvent
    ``(zI - A)^-1``, and ``p(z) = z c_(n-1) + Dn``.
    """
    poly = _as_charpoly(coeffs)
    z = _check_point(poly, z)
    out = [scalars.one(poly.mode)]
    for d in poly.coefficients[:-1]:
        out.append(out[-1] * z + d)
    return out


# -- symbolic trace formulas ----------------------------------------------

# A partition is a tuple of (j, a_j) pairs, sorted by j, all a_j >= 1: it
# indexes the monomial T1**a1 T2**a2 ... of weighted degree sum(j * a_j).
Partition = Tuple[Tuple[int, int], ...]


def partition_weight(p: Partition) -> int:
    return sum(j * a for j, a in p)


def partition_parts(p: Partition) -> Tuple[int, ...]:
    """Parts in descending order, e.g. ``((1, 2), (3, 1)) -> (3, 1, 1)``."""
    return tuple(j for j, a in sorted(p, reverse=True) for _ in range(a))


def _times_trace(p: Partition, m: int) -> Partition:
    exps = dict(p)
    exps[m] = exps.get(m, 0) + 1
    return tuple(sorted(exps.items()))


def canonical_key(p: Partition):
    """Sort key: descending largest part, ties broken by the remaining parts."""
    return tuple(-j for j in partition_parts(p))


@dataclass(frozen=True)
class TraceFormula:
    """Exact polynomial ``Dk(T1..Tk)`` keyed by partition."""

    k: int
    terms: Dict[Partition, Fraction]

    def __post_init__(self):
        for p, c in self.terms.items():
            if partition_weight(p) != self.k:
                raise ValueError(f"monomial {p} does not have weighted degree {self.k}")
            if c == 0:
                raise ValueError(f"zero coefficient stored for {p}")

    def items(self) -> List[Tuple[Partition, Fraction]]:
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda t: canonical_key(t[0]))

    def evaluate(self, traces: Sequence) -> Scalar:
        T, mode = _normalize(traces, "traces")
        if len(T) < self.k:
            raise ValueError(f"need at least {self.k} traces, got {len(T)}")
        total = scalars.zero(mode)
        for p, c in self.items():
            term = scalars.coerce(c, mode)
            for j, a in p:
                term *= T[j - 1] ** a
            total += term
        return total

    def to_records(self) -> List[dict]:
        return [
            {"partition": [[j, a] for j, a in p], "coefficient": str(c)}
            for p, c in self.items()
        ]

    @classmethod
    def from_records(cls, k: int, records: Iterable[dict]) -> "TraceFormula":
        terms: Dict[Partition, Fraction] = {}
        for rec in records:
            p = tuple(sorted((int(j), int(a)) for j, a in rec["partition"]))
            terms[p] = terms.get(p, Fraction(0)) + Fraction(rec["coefficient"])
        return cls(k, {p: c for p, c in terms.items() if c != 0})

    def __str__(self):
        pieces = []
        for p, c in self.items():
            mono = " ".join(f"T{j}" if a == 1 else f"T{j}^{a}" for j, a in p)
            pieces.append(f"{'-' if c < 0 else '+'} {abs(c)} {mono}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@lru_cache(maxsize=None)
def _formula_terms(k: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    # Dk = -(1/k) (Tk + sum_{j<k} Dj T(k-j)), over polynomials in T1..Tk
    acc: Dict[Partition, Fraction] = {((k, 1),): Fraction(1)}
    for j in range(1, k):
        for p, c in _formula_terms(j):
            q = _times_trace(p, k - j)
            acc[q] = acc.get(q, Fraction(0)) + c
    return tuple((p, -c / k) for p, c in acc.items() if c != 0)


def symbolic_trace_formula(k: int) -> TraceFormula:
    """The exact polynomial expressing ``Dk`` in terms of ``T1..Tk``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    # build bottom-up so deep k does not hit the recursion limit
    for j in range(1, k):
        _formula_terms(j)
    return TraceFormula(k, dict(_formula_terms(k)))
