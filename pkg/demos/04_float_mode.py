"""
Floating-point accuracy
=======================

The Newton recursion is exact in rational arithmetic. In floating point the
trace monomials cancel, and the error grows with the dimension.
"""

import warnings

import numpy as np

from traceform import SquareMatrix, cayley_hamilton_residual, char_poly, inverse

rng = np.random.default_rng(0)

print(" n   rel. Cayley-Hamilton residual   max |coeff - np.poly|")
for n in (2, 4, 6, 8, 10, 12, 14, 16):
    A = rng.uniform(-1, 1, (n, n))
    M = SquareMatrix(A)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        residual = cayley_hamilton_residual(M).max_norm()
        coeffs = np.array(char_poly(M).coefficients)
    rel = residual / np.abs(np.linalg.matrix_power(A, n)).max()
    print(f"{n:2d}   {rel:.2e}                        {np.abs(coeffs - np.poly(A)[1:]).max():.2e}")

# The same matrix in exact arithmetic has no error at all
A = SquareMatrix(rng.integers(-3, 4, (6, 6)).tolist())
print("exact 6x6 residual is zero:", cayley_hamilton_residual(A).is_zero())
print("exact inverse check:", inverse(A) @ A == SquareMatrix.identity(6))
