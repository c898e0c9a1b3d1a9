import itertools
from fractions import Fraction
from math import comb, factorial

import pytest

from maninalg import idempotents as idem
from maninalg.linalg import row_space
from maninalg.pairing import (BraidRelationFailed, GroupEnumerationExceeded,
                              NotExists, PairingOperator, brauer_pairing,
                              closed_form_multiparam, corrupt, fourparam_A3,
                              generic_pairing, group_average,
                              hecke_basis_change, hecke_pairing, q_factorial,
                              q_int, verify_axioms)
from maninalg.permutations import all_perms, inv
from maninalg.quadratic import component_subspaces
from maninalg.suites import generic_parameter_matrix
from maninalg.tensor import TensorOperator, perm_rep

F = Fraction


def test_generic_base_case_k2():
    for E in (idem.antisymmetrizer(2), idem.hecke_minus(3, 2),
              idem.orthogonal_idempotent(3)):
        one = TensorOperator.identity(E.row_dim, 2)
        s = generic_pairing(E, 2, "S")
        a = generic_pairing(E, 2, "A")
        assert s.operator == one - E
        assert a.operator == E


def test_generic_symmetrizer_degree_three():
    E = idem.antisymmetrizer(2)
    s = generic_pairing(E, 3, "S")
    assert s.operator.matrix.rank() == 4  # dim Sym^3 C^2
    assert s.operator == group_average(E, 3, "S").operator


def test_generic_not_exists_for_fourparam():
    E = idem.fourparam_idempotent(1, 2, 1, 1)
    result = generic_pairing(E, 3, "A")
    assert isinstance(result, NotExists)
    # oracle: the kernel intersections have different dimensions
    _, _, w3, wbar3 = component_subspaces(E, 3)
    assert (w3.dim, wbar3.dim) == (1, 0)
    assert result.details == {"right_dim": 1, "left_dim": 0}


def test_group_average_symmetrizers():
    for n in (2, 3):
        E = idem.antisymmetrizer(n)
        for k in (2, 3):
            s = group_average(E, k, "S").operator
            a = group_average(E, k, "A").operator
            sym = TensorOperator.zero(n, k)
            alt = TensorOperator.zero(n, k)
            for p in all_perms(k):
                sym = sym + perm_rep(p, n)
                alt = alt + perm_rep(p, n).scale(p.sign())
            assert s == sym.scale(F(1, factorial(k)))
            assert a == alt.scale(F(1, factorial(k)))


def test_group_average_k2_split():
    E = idem.parameterized_antisymmetrizer(generic_parameter_matrix(2))
    P = TensorOperator.identity(2, 2) - E.scale(2)
    assert group_average(E, 2, "S").operator == \
        (TensorOperator.identity(2, 2) + P).scale(F(1, 2))
    assert group_average(E, 2, "A").operator == \
        (TensorOperator.identity(2, 2) - P).scale(F(1, 2))


def test_group_average_braid_failure():
    with pytest.raises(BraidRelationFailed):
        group_average(idem.hecke_minus(2, 2), 3, "A")


def test_group_average_cap():
    with pytest.raises(GroupEnumerationExceeded):
        group_average(idem.antisymmetrizer(3), 3, "S", cap=3)


def test_hecke_base_case():
    for n in (2, 3):
        assert hecke_pairing(2, n, 2, "S").operator == idem.hecke_plus(n, 2)
        assert hecke_pairing(2, n, 2, "A").operator == idem.hecke_minus(n, 2)


def test_hecke_matches_generic():
    for n in (2, 3):
        E = idem.hecke_minus(n, 2)
        for k in (2, 3):
            for kind in ("S", "A"):
                assert hecke_pairing(2, n, k, kind).operator == \
                    generic_pairing(E, k, kind).operator


def test_hecke_antisymmetrizer_entries():
    q, n, k = F(2), 2, 3
    A = hecke_pairing(q, n, k, "A").operator
    assert A.is_zero()  # no strictly increasing triples on two letters
    n, k = 3, 2
    A = hecke_pairing(q, n, k, "A").operator
    scale = q ** (k * (k - 1) // 2) / q_factorial(k, q)
    for I in itertools.combinations(range(1, n + 1), k):
        for sigma in all_perms(k):
            for tau in all_perms(k):
                row = tuple(I[sigma(t) - 1] for t in range(1, k + 1))
                col = tuple(I[tau(t) - 1] for t in range(1, k + 1))
                expected = (scale * sigma.sign() * tau.sign()
                            * q ** (-inv(sigma) - inv(tau)))
                assert A.entry(row, col) == expected


def test_hecke_trace_is_binomial():
    for n in (2, 3):
        for k in (1, 2, 3):
            assert hecke_pairing(2, n, k, "A").operator.trace() == comb(n, k)


def test_q_numbers():
    q = F(2)
    assert q_int(1, q) == 1
    assert q_int(2, q) == q + 1 / q
    assert q_factorial(3, q) == q_int(2, q) * q_int(3, q)


def test_brauer_base_cases():
    for n in (3, 4):
        assert brauer_pairing("so", n, 2).operator == \
            TensorOperator.identity(n, 2) - idem.orthogonal_idempotent(n)
    assert brauer_pairing("sp", 4, 2).operator == idem.symplectic_idempotent(4)
    assert brauer_pairing("sp", 4, 3).operator.is_zero()


def test_brauer_matches_generic():
    for n in (3, 4):
        E = idem.orthogonal_idempotent(n)
        assert brauer_pairing("so", n, 3).operator == \
            generic_pairing(E, 3, "S").operator
    E = idem.symplectic_idempotent(4)
    assert brauer_pairing("sp", 4, 2).operator == \
        generic_pairing(E, 2, "A").operator


def test_brauer_preconditions():
    with pytest.raises(idem.InvalidParameter):
        brauer_pairing("sp", 3, 2)
    with pytest.raises(idem.InvalidParameter):
        brauer_pairing("sp", 4, 4)
    with pytest.raises(ValueError):
        brauer_pairing("gl", 3, 2)


def test_closed_form_reduces_to_symmetrizers():
    ones = [[F(1)] * 3 for _ in range(3)]
    for kind in ("S", "A"):
        cf = closed_form_multiparam(ones, 3, kind)
        ga = group_average(idem.antisymmetrizer(3), 3, kind)
        assert cf.operator == ga.operator


def test_closed_form_single_entry():
    cf = closed_form_multiparam(idem.uniform_parameter_matrix(2, 2), 2, "A")
    assert cf.operator.entry((1, 2), (2, 1)) == F(-1, 4)
    assert cf.operator.trace() == 1


def test_closed_form_trace():
    qhat = generic_parameter_matrix(3)
    for k in (1, 2, 3):
        assert closed_form_multiparam(qhat, k, "A").operator.trace() == comb(3, k)
        assert closed_form_multiparam(qhat, k, "S").operator.trace() == \
            comb(k + 2, k)


def test_fourparam_a3_exists_on_single_condition_branch():
    op = fourparam_A3(1, 1, 1, 1)
    assert isinstance(op, PairingOperator)
    report = verify_axioms(op)
    assert report["pass"]
    assert op.operator.matrix.rank() == 1


def test_fourparam_a3_not_exists():
    result = fourparam_A3(1, 2, 1, 1)
    assert isinstance(result, NotExists)
    assert result.details["conditions"] == {"i": False, "ii": False, "iii": False}


def test_fourparam_a3_kappa_zero_reduces_to_multiparam():
    q = F(2)
    op = fourparam_A3(q, q, q, 0)
    qhat = [[1, q * q, 1 / (q * q)],
            [1 / (q * q), 1, q * q],
            [q * q, 1 / (q * q), 1]]
    cf = closed_form_multiparam(qhat, 3, "A")
    assert op.operator == cf.operator
    assert row_space(op.operator.matrix) == row_space(cf.operator.matrix)


def test_verify_axioms_orthogonality_and_nesting():
    s3 = hecke_pairing(2, 2, 3, "S")
    a3 = hecke_pairing(2, 2, 3, "A")
    s2 = hecke_pairing(2, 2, 2, "S")
    a2 = hecke_pairing(2, 2, 2, "A")
    report = verify_axioms(s3, partner=a3, lower=[s2, a2])
    assert report == {"annihilation": True, "fixed_vectors": True,
                      "idempotent": True, "orthogonality": True,
                      "nesting": True, "pass": True}


def test_corrupted_operator_fails_idempotency():
    op = group_average(idem.antisymmetrizer(2), 3, "S")
    assert not verify_axioms(corrupt(op))["idempotent"]


def test_hecke_basis_change_entries():
    q = F(2)
    G = hecke_basis_change(2, 2, q)
    norm = q_factorial(2, q) / 2
    assert G.entry((1, 2), (1, 2)) == norm * q ** (-1)  # identity arrangement
    assert G.entry((2, 1), (2, 1)) == norm * q         # one inversion
    assert G.entry((1, 1), (1, 1)) == 1                 # repeated index


def test_group_average_axioms_up_to_degree_four():
    # symmetric-group averages for the plain antisymmetrizer pass every
    # axiom through arity 4
    for n in (2, 3):
        E = idem.antisymmetrizer(n)
        lower = []
        for k in (2, 3, 4):
            s = group_average(E, k, "S")
            a = group_average(E, k, "A")
            assert verify_axioms(s, partner=a, lower=lower)["pass"]
            assert verify_axioms(a, partner=s, lower=lower)["pass"]
            lower.extend([s, a])


def test_verify_axioms_rejects_mismatched_partner():
    s3 = hecke_pairing(2, 2, 3, "S")
    with pytest.raises(ValueError):
        verify_axioms(s3, partner=hecke_pairing(2, 2, 3, "S"))
    with pytest.raises(ValueError):
        verify_axioms(s3, partner=hecke_pairing(2, 2, 2, "A"))


def test_jucys_murphy_elements_commute():
    from maninalg.pairing import jucys_murphy
    for n in (3, 4):
        for twisted in (False, True):
            if twisted and n % 2:
                continue
            y2 = jucys_murphy(n, 3, 2, twisted)
            y3 = jucys_murphy(n, 3, 3, twisted)
            assert y2 * y3 == y3 * y2
