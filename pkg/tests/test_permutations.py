import itertools
from fractions import Fraction

import pytest

from maninalg.idempotents import uniform_parameter_matrix
from maninalg.pairing import q_factorial
from maninalg.permutations import (NonReducedWord, Perm, all_perms, from_word,
                                   inv, inversion_set,
                                   inversion_set_from_reduced_word, mu,
                                   reduced_word, stabilizer_order)


def test_inv_examples():
    assert inv(Perm((1, 2, 3))) == 0
    assert inv(Perm((2, 1, 3))) == 1
    assert inv(Perm((3, 2, 1))) == 3  # every pair of the longest element


def test_inv_equals_inv_of_inverse():
    for k in range(1, 6):
        for p in all_perms(k):
            assert inv(p) == inv(p.inverse())


def test_reduced_word_is_reduced_and_multiplies_back():
    for k in range(1, 5):
        for p in all_perms(k):
            word = reduced_word(p)
            assert len(word) == inv(p)
            assert from_word(word, k) == p


def test_inversion_set_examples():
    assert inversion_set_from_reduced_word((), 3) == frozenset()
    assert inversion_set_from_reduced_word((1,), 2) == frozenset({(1, 2)})
    assert inversion_set_from_reduced_word((1, 2), 3) == \
        frozenset({(1, 3), (2, 3)})


def all_reduced_words(p, k):
    """Every word of length inv(p) multiplying to p (brute force)."""
    target = inv(p)
    for word in itertools.product(range(1, k), repeat=target):
        if from_word(word, k) == p:
            yield word


def test_inversion_set_agrees_with_brute_force_on_all_words_s4():
    for p in all_perms(4):
        expected = inversion_set(p)
        for word in all_reduced_words(p, 4):
            assert inversion_set_from_reduced_word(word, 4) == expected


def test_non_reduced_word_rejected():
    with pytest.raises(NonReducedWord):
        inversion_set_from_reduced_word((1, 1), 2)
    with pytest.raises(NonReducedWord):
        inversion_set_from_reduced_word((1, 2, 1, 2), 3)


def test_mu_examples():
    q2 = uniform_parameter_matrix(2, 2)
    q3 = uniform_parameter_matrix(3, 2)
    assert mu(q2, Perm((1, 2))) == 1
    assert mu(q2, Perm((2, 1))) == 2
    assert mu(q3, Perm((3, 2, 1))) == 8  # three inversions, each worth q


def test_stabilizer_orders():
    assert stabilizer_order((1, 2, 3)) == 1
    assert stabilizer_order((1, 1)) == 2
    assert stabilizer_order((1, 1, 2, 2, 2)) == 12


def test_inversion_generating_function():
    q = Fraction(2)
    for k in range(1, 6):
        total = sum(q ** (-2 * inv(p)) for p in all_perms(k))
        assert total == q ** (-(k * (k - 1) // 2)) * q_factorial(k, q)


def test_perm_algebra():
    p = Perm((2, 3, 1))
    assert p * p.inverse() == Perm.identity(3)
    assert p.sign() == 1
    assert Perm((2, 1, 3)).sign() == -1
    m = p.matrix()
    # sigma e_1 = e_{sigma(1)} = e_2
    assert m.data[1][0] == 1


def test_apply_to_tuple():
    p = Perm((2, 3, 1))  # sends position content t_i to slot p(i)
    assert p.apply_to_tuple(("a", "b", "c")) == ("c", "a", "b")
