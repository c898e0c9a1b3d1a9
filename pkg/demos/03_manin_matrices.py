"""The Manin property over presented algebras.

A matrix M over an algebra is (A, B)-Manin when A M^{(1)} M^{(2)} (1-B)
vanishes; over a presented algebra this is a finite membership test in the
degree-2 relation span.  The universal relations (the right quantum
algebra) come from applying the same defect to a matrix of formal
generators.
"""

from maninalg import idempotents as idem
from maninalg.freealg import Gen, NCPoly, generator_matrix
from maninalg.ideals import PresentedAlgebra, commutator_relations, free_presentation
from maninalg.manin import (ManinPair, is_manin, double_manin_matches_commutators,
                            rll_matches_double_qmanin, universal_relations)

print("== a commutative 2x2 matrix is a Manin matrix; a free one is not")
gens = (Gen("a"), Gen("b"), Gen("c"), Gen("d"))
M = [[NCPoly.generator(gens[0]), NCPoly.generator(gens[1])],
     [NCPoly.generator(gens[2]), NCPoly.generator(gens[3])]]
pair = ManinPair(idem.antisymmetrizer(2), idem.antisymmetrizer(2))
print("commutative:", is_manin(pair, M, commutator_relations(gens)))
print("free:       ", is_manin(pair, M, free_presentation(gens)))

print("\n== universal relations of the right quantum algebra")
uni = universal_relations(pair)
print("dim of the (A_2, A_2) relation space:", uni.dim,
      "(column commutators plus the cross relation)")

print("\n== the quantum plane gives a diagonal Manin matrix")
x1, x2 = Gen("x", (1,)), Gen("x", (2,))
plane = PresentedAlgebra.from_polys(
    (x1, x2), [NCPoly({(x2, x1): 1, (x1, x2): -2})])  # x2 x1 = 2 x1 x2
diag = [[NCPoly.generator(x1), NCPoly.zero()],
        [NCPoly.zero(), NCPoly.generator(x2)]]
qpair = ManinPair(idem.q_antisymmetrizer(2, 2), idem.antisymmetrizer(2))
print("diag(x1, x2) is (A^q_2, A_2)-Manin:", is_manin(qpair, diag, plane))
print("same verdict for the left-equivalent Hecke idempotent:",
      is_manin(ManinPair(idem.hecke_minus(2, 2), idem.antisymmetrizer(2)),
               diag, plane))

print("\n== relation-space identities")
print("RLL relations = q-Manin relations of L and L^T (n=2,3):",
      rll_matches_double_qmanin(2, 2, 2), rll_matches_double_qmanin(3, 3, 2))
print("Manin + transposed-Manin relations span all commutators (n=2,3):",
      double_manin_matches_commutators(2, 2), double_manin_matches_commutators(3, 3))
