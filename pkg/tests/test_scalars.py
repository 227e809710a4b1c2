from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from traceform import scalars
from traceform.errors import DivisionByZero, ModeMismatch, NegativeTolerance

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


def test_examples():
    assert scalars.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert scalars.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert scalars.mul(1j, 1j) == -1 + 0j
    assert scalars.mode_of(scalars.mul(1j, 1j)) == scalars.COMPLEX


def test_is_zero():
    assert scalars.is_zero(Fraction(0), 0)
    assert not scalars.is_zero(Fraction(1, 10**100), 0)
    assert scalars.is_zero(1e-12, 1e-9)
    assert not scalars.is_zero(1e-6, 1e-9)
    with pytest.raises(NegativeTolerance):
        scalars.is_zero(1.0, -1.0)
    with pytest.raises(ModeMismatch):
        scalars.is_zero(Fraction(1), 1e-9)


def test_normalization():
    q = Fraction(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert scalars.decode("6/-4", scalars.RATIONAL) == Fraction(-3, 2)


@pytest.mark.parametrize("a, b", [(Fraction(1), 1.0), (1.0, 1j), (Fraction(1, 2), 2j)])
def test_mode_mismatch(a, b):
    with pytest.raises(ModeMismatch):
        scalars.add(a, b)
    with pytest.raises(ModeMismatch):
        scalars.mul(b, a)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalars.inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        scalars.inv(0.0)
    with pytest.raises(DivisionByZero):
        scalars.inv(1e-300, floor=1e-200)
    assert scalars.inv(0.5) == 2.0


def test_modes_are_preserved():
    assert isinstance(scalars.add(1, 2), Fraction)
    assert isinstance(scalars.neg(Fraction(1, 3)), Fraction)
    assert isinstance(scalars.inv(4.0), float)
    assert scalars.mode_of(scalars.add(1 + 0j, 2j)) == scalars.COMPLEX
    with pytest.raises(ModeMismatch):
        scalars.mode_of(True)


@given(rationals, rationals, rationals)
def test_field_axioms_exact(a, b, c):
    add, mul = scalars.add, scalars.mul
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, scalars.neg(a)) == 0
    if a != 0:
        assert mul(a, scalars.inv(a)) == 1


@pytest.mark.parametrize(
    "value, mode, encoded",
    [
        (Fraction(-3, 2), "rational", "-3/2"),
        (Fraction(7), "rational", "7"),
        (0.25, "real", 0.25),
        (1 - 2j, "complex", [1.0, -2.0]),
    ],
)
def test_text_encoding_round_trip(value, mode, encoded):
    assert scalars.encode(value, mode) == encoded
    assert scalars.decode(encoded, mode) == value


@pytest.mark.parametrize(
    "obj, mode",
    [("1/0", "rational"), ("x", "rational"), (0.5, "rational"), ("abc", "real"), ([1.0], "complex")],
)
def test_decode_rejects(obj, mode):
    with pytest.raises(ValueError):
        scalars.decode(obj, mode)
