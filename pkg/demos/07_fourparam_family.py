"""The 3-dimensional 4-parameter quadratic algebra.

Three generators, relations a xy - a^{-1} yx = kappa z^2 and cyclic.  The
degree-3 component of the dual Grassmann algebra jumps between 0, 1 and 3
depending on coupled parameter conditions; on the single-condition branch
the third pairing operator exists and is rank one.
"""

from fractions import Fraction

from maninalg.pairing import NotExists, fourparam_A3, verify_axioms
from maninalg.scenarios import fourparam_report

F = Fraction

grid = [(1, 1, 1, 1), (2, 2, 2, 1), (1, 2, 3, 1), (1, 1, 2, 1),
        (2, -2, 2, 3), (2, 2, 2, 0), (1, 2, 3, 0)]

print(f"{'(a, b, c, kappa)':24s} {'Xi_3':>4s} {'X_3':>4s} {'A_(3)':>7s}")
for a, b, c, kappa in grid:
    rep = fourparam_report(a, b, c, kappa)
    print(f"{str((a, b, c, kappa)):24s} {rep.data['xi3']:>4d} "
          f"{rep.data['x3']:>4d} {rep.data['A3']:>7s}   "
          f"(all checks pass: {rep.passed})")

print("\nThe X/Xi degree-3 difference is 9 at every point above.")

op = fourparam_A3(1, 1, 1, 1)
print("\nrank of A_(3) at (1,1,1,1):", op.operator.matrix.rank())
print("axioms:", verify_axioms(op))

missing = fourparam_A3(1, 2, 1, 1)
assert isinstance(missing, NotExists)
print("\nat (1,2,1,1) no condition holds ->", missing.reason)
