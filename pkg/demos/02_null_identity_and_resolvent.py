"""
Null identity and the rational resolvent
========================================

The characteristic polynomial annihilates its matrix, and the same
coefficients give (zI - A)^-1 as a polynomial in A divided by p(z).
"""

from fractions import Fraction

from traceform import (
    SpectrumPoint,
    SquareMatrix,
    adjugate_polynomial,
    cayley_hamilton_residual,
    char_poly,
    inverse,
    resolvent,
)

A = SquareMatrix([[2, 1, 0], [0, 2, 1], [1, 0, 3]])
print("D =", [str(d) for d in char_poly(A)])

# p(A) is exactly the zero matrix in rational arithmetic
print("p(A) == 0:", cayley_hamilton_residual(A).is_zero())

# The resolvent at a point off the spectrum, checked against (zI - A)
z = Fraction(5, 2)
R = resolvent(A, z)
print("p(z) =", R.denominator)
shifted = (-A).shift(z)
print("(zI - A) R == I:", shifted @ R.value == SquareMatrix.identity(3))

# The numerator matrices B_j, built once, give the resolvent at any z
B = adjugate_polynomial(A)
for j, Bj in enumerate(B):
    print(f"B{j} =", [[str(x) for x in row] for row in Bj.tolist()])

# The inverse is the same numerator at z = 0
print("A^-1 =", [[str(x) for x in row] for row in inverse(A).tolist()])

# A characteristic value is rejected rather than divided by zero
U = SquareMatrix([[1, 5], [0, 3]])
try:
    resolvent(U, 3)
except SpectrumPoint as exc:
    print("SpectrumPoint:", exc)
