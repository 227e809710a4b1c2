"""
Characteristic coefficients from power traces
=============================================

Each coefficient of det(zI - A) is a polynomial in the traces of A, A^2, ...
We generate those polynomials exactly and check them on a matrix.
"""

from fractions import Fraction

from traceform import SquareMatrix, char_poly, power_traces, symbolic_trace_formula

# The first few formulas, as exact polynomials in T1, T2, ...
for k in range(1, 6):
    print(f"D{k} =", symbolic_trace_formula(k))

# The number of monomials in Dk is the number of integer partitions of k.
print([len(symbolic_trace_formula(k).terms) for k in range(1, 13)])

# Evaluate D1..D4 on the traces of a rational 4x4 matrix
A = SquareMatrix([
    [Fraction(1, 2), 2, 0, -1],
    [3, Fraction(-1, 3), 1, 0],
    [0, 1, 4, Fraction(2, 5)],
    [1, 0, -2, 1],
])
T = power_traces(A, 4)
print("traces:", [str(t) for t in T])
from_formulas = [symbolic_trace_formula(k).evaluate(T[:k]) for k in range(1, 5)]
print("from formulas:", [str(d) for d in from_formulas])
print("char_poly:    ", [str(d) for d in char_poly(A)])

# A formula as the JSON records used by the command line and the golden file
print(symbolic_trace_formula(3).to_records())
