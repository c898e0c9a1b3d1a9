"""Graded dimensions of the four algebras attached to an idempotent.

For the multi-parameter deformation the dimensions reproduce the binomial
tables of polynomial and Grassmann algebras; for the orthogonal and
symplectic idempotents they follow different closed formulas, and the
symplectic dual Grassmann algebra dies early.
"""

from math import comb

from maninalg import idempotents as idem
from maninalg.quadratic import QuadAlgebra, dimension_table
from maninalg.suites import generic_parameter_matrix

print("== deformed polynomial / Grassmann algebras (generic parameters)")
for n in (2, 3):
    E = idem.parameterized_antisymmetrizer(generic_parameter_matrix(n))
    x_dims = dimension_table(QuadAlgebra(E, "X"), 4)
    xi_dims = dimension_table(QuadAlgebra(E, "Xi"), 4)
    print(f"n={n}  X : {x_dims}   (C(k+n-1,k) = {[comb(k+n-1,k) for k in range(5)]})")
    print(f"n={n}  Xi: {xi_dims}   (C(n,k)     = {[comb(n,k) for k in range(5)]})")

print("\n== orthogonal idempotent: polynomial algebra modulo one quadric")
for n in (3, 4):
    E = idem.orthogonal_idempotent(n)
    print(f"n={n}  X :", dimension_table(QuadAlgebra(E, "X"), 3))

print("\n== symplectic idempotent: Grassmann modulo the symplectic form")
E = idem.symplectic_idempotent(4)
print("n=4  Xi:", dimension_table(QuadAlgebra(E, "Xi"), 4),
      "(degree 3 and beyond vanish)")

print("\n== the dual pair can have different dimensions")
E = idem.fourparam_idempotent(1, 2, 1, 1)
print("4-parameter (1,2,1,1):",
      "Xi_3 =", dimension_table(QuadAlgebra(E, "Xi"), 3)[3],
      "but Xi*_3 =", dimension_table(QuadAlgebra(E, "Xistar"), 3)[3])
