"""
Inverse of a perturbed metric without a series
==============================================

For g = g0 + h in four dimensions, g^-1 is a cubic polynomial in
H = g0^-1 h times g0^-1. The Neumann series I - H + H^2 - ... only converges
for small H; the closed form does not care.
"""

from fractions import Fraction

import matplotlib.pyplot as plt

from traceform import SquareMatrix, det_ratio, inverse_metric, neumann_error_report

g0 = SquareMatrix.diag([-1, 1, 1, 1])
h = SquareMatrix([
    [Fraction(1, 5), Fraction(1, 10), 0, 0],
    [Fraction(1, 10), Fraction(-1, 4), 0, Fraction(1, 8)],
    [0, 0, Fraction(1, 3), 0],
    [0, Fraction(1, 8), 0, Fraction(1, 6)],
])

g_inv = inverse_metric(g0, h)
print("g^-1 (g0 + h) == I:", g_inv @ (g0 + h) == SquareMatrix.identity(4))
print("det(g)/det(g0) =", det_ratio(g0, h))

# Neumann truncation errors: a mild perturbation, and one too large to converge
orders = range(0, 16)
small = [float(e) for _, e in neumann_error_report(g0, h, orders[-1])]
large = [float(e) for _, e in neumann_error_report(g0, h.scale(4), orders[-1])]
print("closed form with 4h is still exact:",
      inverse_metric(g0, h.scale(4)) @ (g0 + h.scale(4)) == SquareMatrix.identity(4))

fig, ax = plt.subplots()
ax.semilogy(orders, small, "o-", label="h")
ax.semilogy(orders, large, "s-", label="4h")
ax.set_xlabel("Neumann truncation order")
ax.set_ylabel("max |truncation - exact inverse|")
ax.legend()
fig.savefig("neumann_errors.png")
print("wrote neumann_errors.png")
