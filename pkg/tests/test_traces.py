import json
from fractions import Fraction

import pytest
from conftest import DATA
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import integer_partitions, power_sums, trace_formula_coefficient

from traceform.errors import EmptyInput, ModeMismatch
from traceform.traces import (
    CharPoly,
    TraceFormula,
    canonical_key,
    evaluate_poly,
    horner_partial_sums,
    newton_coefficients,
    newton_traces,
    partition_weight,
    symbolic_trace_formula,
)

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
trace_lists = st.lists(small_rationals, min_size=1, max_size=8)


@pytest.mark.parametrize(
    "traces, expected",
    [((3, 3, 3), (-3, 3, -1)), ((5, 13), (-5, 6)), ((0, 0, 0, 0), (0, 0, 0, 0))],
)
def test_newton_coefficients_examples(traces, expected):
    poly = newton_coefficients(traces)
    assert poly.coefficients == expected
    assert poly.mode == "rational"
    assert all(isinstance(d, Fraction) for d in poly)


def test_newton_traces_examples():
    assert newton_traces((-3, 3, -1), 3) == (3, 3, 3)
    assert newton_traces((0, 0), 2) == (0, 0)
    # beyond n the Cayley-Hamilton recurrence takes over; oracle is 2^k + 3^k
    assert newton_traces((-5, 6), 4) == power_sums([2, 3], 4)
    assert newton_traces((-5, 6), 9) == power_sums([2, 3], 9)


def test_errors():
    with pytest.raises(EmptyInput):
        newton_coefficients([])
    with pytest.raises(ModeMismatch):
        newton_coefficients([Fraction(1), 2.0])
    with pytest.raises(ModeMismatch):
        evaluate_poly((-5, 6), 2.0)
    with pytest.raises(ModeMismatch):
        CharPoly((1.0, 2.0), "rational")


def test_float_modes():
    D = newton_coefficients([5.0, 13.0])
    assert D.mode == "real"
    assert D.coefficients == pytest.approx((-5.0, 6.0))
    # roots 1 + i and 1 - i: power sums 2 and 0, polynomial z^2 - 2z + 2
    C = newton_coefficients([2 + 0j, 0j])
    assert C.mode == "complex"
    assert C.coefficients == pytest.approx((-2, 2))
    # roots i and 2: power sums 2 + i and 3
    C = newton_coefficients([2 + 1j, 3 + 0j])
    assert evaluate_poly(C, 1j) == pytest.approx(0)
    assert evaluate_poly(C, 2 + 0j) == pytest.approx(0)


@pytest.mark.parametrize("coeffs, z, value", [((-5, 6), 2, 0), ((-5, 6), 0, 6), ((-3, 3, -1), 2, 1)])
def test_evaluate_poly(coeffs, z, value):
    assert evaluate_poly(coeffs, z) == value


def test_horner_partial_sums_examples():
    assert horner_partial_sums((-5, 6), 0) == [1, -5]
    # direct recurrence c_j = c_(j-1) + D_j at z = 1
    assert horner_partial_sums((-3, 3, -1), 1) == [1, -2, 1]
    assert horner_partial_sums(CharPoly.from_coefficients([Fraction(7)]), 3) == [1]


@given(trace_lists)
def test_round_trip(traces):
    poly = newton_coefficients(traces)
    assert newton_traces(poly, len(traces)) == tuple(Fraction(t) for t in traces)


@given(trace_lists)
def test_recurrence_identity(traces):
    T = [Fraction(t) for t in traces]
    D = newton_coefficients(T).coefficients
    for k in range(1, len(T) + 1):
        assert T[k - 1] + sum(D[j - 1] * T[k - j - 1] for j in range(1, k)) + k * D[k - 1] == 0


@given(trace_lists, small_rationals)
def test_horner_link(traces, z):
    poly = newton_coefficients(traces)
    c = horner_partial_sums(poly, z)
    assert c[0] == 1
    assert evaluate_poly(poly, z) == z * c[-1] + poly[-1]


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_roots_give_back_polynomial(roots):
    # power sums of the roots determine prod(z - r)
    poly = newton_coefficients(power_sums(roots, len(roots)))
    for r in roots:
        assert evaluate_poly(poly, r) == 0
    assert evaluate_poly(poly, 10) == prod_shifted(roots, 10)


def prod_shifted(roots, z):
    out = Fraction(1)
    for r in roots:
        out *= z - r
    return out


# -- symbolic formulas --------------------------------------------------------


def test_formula_examples():
    assert symbolic_trace_formula(1).terms == {((1, 1),): -1}
    assert symbolic_trace_formula(3).terms == {
        ((1, 3),): Fraction(-1, 6),
        ((1, 1), (2, 1)): Fraction(1, 2),
        ((3, 1),): Fraction(-1, 3),
    }
    d8 = symbolic_trace_formula(8).terms
    assert d8[((8, 1),)] == Fraction(-1, 8)
    assert d8[((1, 8),)] == Fraction(1, 40320)


@pytest.mark.parametrize("k", range(1, 13))
def test_formula_matches_closed_form(k):
    f = symbolic_trace_formula(k)
    expected = {}
    for parts in integer_partitions(k):
        p = tuple(sorted((j, parts.count(j)) for j in set(parts)))
        expected[p] = trace_formula_coefficient(p)
    assert f.terms == expected


@pytest.mark.parametrize("k", range(1, 16))
def test_weighted_homogeneity(k):
    for p, c in symbolic_trace_formula(k).terms.items():
        assert partition_weight(p) == k
        assert c != 0
        assert all(a >= 1 for _, a in p)
        assert list(p) == sorted(p)


@settings(max_examples=40, deadline=None)
@given(trace_lists)
def test_symbolic_numeric_consistency(traces):
    D = newton_coefficients(traces)
    for k in range(1, len(traces) + 1):
        assert symbolic_trace_formula(k).evaluate(traces[:k]) == D[k - 1]


def test_canonical_order():
    f = symbolic_trace_formula(4)
    parts = [tuple(-x for x in canonical_key(p)) for p, _ in f.items()]
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_records_round_trip():
    f = symbolic_trace_formula(6)
    records = f.to_records()
    assert json.loads(json.dumps(records)) == records
    assert TraceFormula.from_records(6, records) == f


def test_golden_file_is_canonical():
    golden = json.loads((DATA / "trace_formulas_k1_8.json").read_text())
    for entry in golden["formulas"]:
        f = TraceFormula.from_records(entry["k"], entry["terms"])
        assert f.to_records() == entry["terms"]


def test_invalid_formula_rejected():
    with pytest.raises(ValueError):
        TraceFormula(3, {((1, 1),): Fraction(1)})
    with pytest.raises(ValueError):
        TraceFormula(1, {((1, 1),): Fraction(0)})


def test_str():
    assert str(symbolic_trace_formula(2)) == "-1/2 T2 + 1/2 T1^2"
    assert str(symbolic_trace_formula(1)) == "-1 T1"
