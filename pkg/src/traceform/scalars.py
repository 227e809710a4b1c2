"""Scalar modes and field arithmetic.

Three scalar modes are supported and never mixed silently:

* ``"rational"`` -- :class:`fractions.Fraction`, exact and always in lowest terms
* ``"real"`` -- 64-bit ``float``
* ``"complex"`` -- ``complex`` (pair of 64-bit floats)

Python ints are accepted wherever a rational is expected and are promoted to
``Fraction``.
"""

from __future__ import annotations

import numbers
import sys
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero, ModeMismatch, NegativeTolerance

Rational = Fraction
Scalar = Union[Fraction, float, complex]

RATIONAL = "rational"
REAL = "real"
COMPLEX = "complex"
MODES = (RATIONAL, REAL, COMPLEX)

#: smallest magnitude ``inv`` accepts in float modes
UNDERFLOW_FLOOR = sys.float_info.min


def mode_of(a) -> str:
    if isinstance(a, bool):
        raise ModeMismatch("booleans are not scalars")
    if isinstance(a, (Fraction, numbers.Integral)):
        return RATIONAL
    if isinstance(a, numbers.Real):
        return REAL
    if isinstance(a, numbers.Complex):
        return COMPLEX
    raise ModeMismatch(f"not a scalar: {a!r}")


def common_mode(values: Iterable) -> str | None:
    """Return the single mode shared by ``values`` (None when empty)."""
    mode = None
    for v in values:
        m = mode_of(v)
        if mode is None:
            mode = m
        elif m != mode:
            raise ModeMismatch(f"mixed scalar modes: {mode} and {m}")
    return mode


def coerce(a, mode: str) -> Scalar:
    """Convert ``a`` into ``mode``.

    Integers and rationals may be widened into a float mode; floats are never
    narrowed into the rational mode.
    """
    src = mode_of(a)
    if mode == RATIONAL:
        if src != RATIONAL:
            raise ModeMismatch(f"cannot use {src} value {a!r} as a rational")
        return Fraction(a)
    if mode == REAL:
        if src == COMPLEX:
            raise ModeMismatch(f"cannot use complex value {a!r} as a real")
        return float(a)
    if mode == COMPLEX:
        return complex(a)
    raise ValueError(f"unknown scalar mode {mode!r}")


def zero(mode: str) -> Scalar:
    return coerce(0, mode)


def one(mode: str) -> Scalar:
    return coerce(1, mode)


def _same_mode(a, b) -> str:
    ma, mb = mode_of(a), mode_of(b)
    if ma != mb:
        raise ModeMismatch(f"mixed scalar modes: {ma} and {mb}")
    return ma


def _lift(a, mode):
    return Fraction(a) if mode == RATIONAL else a


def add(a, b) -> Scalar:
    m = _same_mode(a, b)
    return _lift(a, m) + _lift(b, m)


def mul(a, b) -> Scalar:
    m = _same_mode(a, b)
    return _lift(a, m) * _lift(b, m)


def neg(a) -> Scalar:
    return -_lift(a, mode_of(a))


def inv(a, floor: float = UNDERFLOW_FLOOR) -> Scalar:
    m = mode_of(a)
    if m == RATIONAL:
        if a == 0:
            raise DivisionByZero("reciprocal of rational zero")
        return 1 / Fraction(a)
    if abs(a) <= floor:
        raise DivisionByZero(f"|{a!r}| is at or below the underflow floor {floor!r}")
    return 1 / a


def is_zero(a, tolerance: float = 0) -> bool:
    """Zero test: structural in rational mode, ``|a| <= tolerance`` otherwise."""
    if tolerance < 0:
        raise NegativeTolerance(f"tolerance must be nonnegative, got {tolerance!r}")
    if mode_of(a) == RATIONAL:
        if tolerance != 0:
            raise ModeMismatch("rational mode admits only tolerance 0")
        return a == 0
    return abs(a) <= tolerance


# -- text encoding --------------------------------------------------------

def encode(a, mode: str | None = None):
    """Encode a scalar for JSON: ``"p/q"`` or ``"p"``, a float, or ``[re, im]``."""
    mode = mode or mode_of(a)
    a = coerce(a, mode)
    if mode == RATIONAL:
        return str(a)
    if mode == REAL:
        return a
    return [a.real, a.imag]


def decode(obj, mode: str) -> Scalar:
    """Inverse of :func:`encode`; raises ``ValueError`` on malformed input."""
    if mode == RATIONAL:
        if isinstance(obj, bool):
            raise ValueError(f"bad rational {obj!r}")
        if isinstance(obj, int):
            return Fraction(obj)
        if not isinstance(obj, str):
            raise ValueError(f"rational must be a 'p/q' string, got {obj!r}")
        text = obj.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"bad rational {obj!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {obj!r}")
        return Fraction(p, q)
    if mode == REAL:
        if isinstance(obj, bool) or not isinstance(obj, (int, float, str)):
            raise ValueError(f"bad real {obj!r}")
        try:
            return float(obj)
        except ValueError:
            raise ValueError(f"bad real {obj!r}") from None
    if mode == COMPLEX:
        if not (isinstance(obj, list) and len(obj) == 2):
            raise ValueError(f"complex must be [re, im], got {obj!r}")
        re, im = (decode(x, REAL) for x in obj)
        return complex(re, im)
    raise ValueError(f"unknown scalar mode {mode!r}")
