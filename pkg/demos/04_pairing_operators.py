"""Four roads to the same pairing operator.

The degree-k pairing idempotents S_(k) and A_(k) are unique when they
exist, so independent constructions must agree exactly: dual bases of
kernel intersections, group averaging, the Hecke q-symmetrizer recursion,
the Brauer Jucys-Murphy products, and closed-form entries.
"""

from fractions import Fraction

from maninalg import idempotents as idem
from maninalg.pairing import (brauer_pairing, closed_form_multiparam,
                              generic_pairing, group_average, hecke_pairing,
                              verify_axioms)
from maninalg.suites import generic_parameter_matrix

q = Fraction(2)

print("== multi-parameter antisymmetrizer, n = 3, k = 3")
qhat = generic_parameter_matrix(3)
E = idem.parameterized_antisymmetrizer(qhat)
ops = {
    "generic dual bases": generic_pairing(E, 3, "A"),
    "group average": group_average(E, 3, "A"),
    "closed form": closed_form_multiparam(qhat, 3, "A"),
}
mats = {name: op.operator for name, op in ops.items()}
names = list(mats)
print("all three agree:",
      all(mats[names[0]] == mats[n] for n in names[1:]))
print("trace (= dim of the degree-3 dual component):",
      mats[names[0]].trace())

print("\n== Hecke recursion for the R-matrix idempotent, n = 2, k = 3")
s3 = hecke_pairing(q, 2, 3, "S")
a3 = hecke_pairing(q, 2, 3, "A")
print("matches generic:",
      s3.operator == generic_pairing(idem.hecke_minus(2, q), 3, "S").operator)
lower = [hecke_pairing(q, 2, 2, "S"), hecke_pairing(q, 2, 2, "A")]
print("axiom report:", verify_axioms(s3, partner=a3, lower=lower))

print("\n== Brauer products for the orthogonal/symplectic idempotents")
print("S^so_(2) = 1 - B_3:",
      brauer_pairing("so", 3, 2).operator ==
      idem.TensorOperator.identity(3, 2) - idem.orthogonal_idempotent(3))
print("traces S^so_(k), n=4, k=1..3:",
      [brauer_pairing("so", 4, k).operator.trace() for k in (1, 2, 3)])
print("A^sp_(3) vanishes for n=4:",
      brauer_pairing("sp", 4, 3).operator.is_zero())
