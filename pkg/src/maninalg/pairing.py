"""Construction and verification of the higher pairing idempotents.

For an idempotent A the k-th S-operator is killed by every adjacent copy of
A and fixes the degree-k component of the algebra presented by A; the k-th
A-operator plays the dual role for S = 1 - A.  Both are unique when they
exist.  Four constructions are provided:

* ``generic_pairing``   dual bases of the intersection subspaces,
* ``group_average``     uniform average over the group generated by the
                        signed adjacent flips (finite groups only),
* ``hecke_pairing``     the q-symmetrizer recursion for the R-matrix split,
* ``brauer_pairing``    Jucys-Murphy products for the orthogonal and
                        symplectic idempotents,

plus closed-form entries for the multi-parameter deformation and the
rank-one third operator of the 3-dimensional 4-parameter family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .idempotents import (InvalidParameter, check_parameter_matrix,
                          fourparam_idempotent, hecke_minus, hecke_r_matrix,
                          orthogonal_idempotent, parameterized_antisymmetrizer,
                          rank_one_contraction, restrict_parameter_matrix,
                          symplectic_idempotent, twisted_rank_one_contraction)
from .linalg import ONE, QMatrix, ZERO, invert, rat
from .permutations import Perm, all_perms, inv, mu, stabilizer_order
from .quadratic import component_subspaces
from .tensor import (TensorOperator, embed, embed_pair, flatten_index,
                     multi_indices, swap_operator)

DEFAULT_GROUP_CAP = 100000


class BraidRelationFailed(ValueError):
    """1 - 2E does not satisfy the braid relation."""


class GroupEnumerationExceeded(RuntimeError):
    """The group generated by the signed flips did not close under the cap."""


@dataclass(frozen=True)
class PairingOperator:
    kind: str                 # "S" | "A"
    arity: int
    source: TensorOperator    # the idempotent the operator belongs to
    operator: TensorOperator
    provenance: str

    def __post_init__(self):
        if self.kind not in ("S", "A"):
            raise ValueError("kind must be 'S' or 'A'")


@dataclass(frozen=True)
class NotExists:
    """Report that no pairing operator of this kind/arity exists."""

    kind: str
    arity: int
    reason: str
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return False


# --- generic construction (dual bases) ----------------------------------------

def generic_pairing(E: TensorOperator, k: int, kind: str):
    """Dual-basis construction from the intersection subspaces.

    Returns the operator sum v_alpha v^alpha when the natural pairing
    between the right and left subspaces is non-degenerate, else NotExists
    naming the failing condition.
    """
    n = E.row_dim
    if k < 1:
        raise ValueError("arity starts at 1")
    if k == 1:
        return PairingOperator(kind, 1, E, TensorOperator.identity(n, 1), "generic")
    v_k, vbar_k, w_k, wbar_k = component_subspaces(E, k)
    right, left = (v_k, vbar_k) if kind == "S" else (w_k, wbar_k)
    if right.dim != left.dim:
        return NotExists(kind, k, "dimension mismatch",
                         {"right_dim": right.dim, "left_dim": left.dim})
    d = right.dim
    if d == 0:
        return PairingOperator(kind, k, E, TensorOperator.zero(n, k), "generic")
    v_cols = right.basis.transpose()              # size x d
    xi_rows = left.basis                          # d x size
    gram = xi_rows * v_cols                       # d x d
    gram_inv = invert(gram)
    if gram_inv is None:
        return NotExists(kind, k, "degenerate natural pairing",
                         {"dim": d, "gram_rank": gram.rank()})
    op = v_cols * gram_inv * xi_rows
    return PairingOperator(kind, k, E, TensorOperator(n, n, k, op), "generic")


# --- group average -------------------------------------------------------------

def braid_relation_holds(P: TensorOperator) -> bool:
    b1 = embed(P, 3, 1)
    b2 = embed(P, 3, 2)
    return b1 * b2 * b1 == b2 * b1 * b2


def group_average(E: TensorOperator, k: int, kind: str,
                  cap: int = DEFAULT_GROUP_CAP) -> PairingOperator:
    """Uniform average over the group generated by the signed flips.

    P = 1 - 2E must satisfy the braid relation; the closure of the group
    generated by (+P)^{(a,a+1)} (kind S) or (-P)^{(a,a+1)} (kind A) is
    enumerated with a cap and averaged.
    """
    n = E.row_dim
    P = TensorOperator.identity(n, 2) - E.scale(2)
    if not braid_relation_holds(P):
        raise BraidRelationFailed("1 - 2E fails the braid relation")
    if k == 1:
        return PairingOperator(kind, 1, E, TensorOperator.identity(n, 1),
                               "group_average")
    signed = P if kind == "S" else -P
    gens = [embed(signed, k, a) for a in range(1, k)]
    identity = TensorOperator.identity(n, k)
    seen = {identity: None}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    if len(seen) >= cap:
                        raise GroupEnumerationExceeded(
                            f"group did not close within {cap} elements")
                    seen[h] = None
                    new_frontier.append(h)
        frontier = new_frontier
    total = TensorOperator.zero(n, k)
    for g in seen:
        total = total + g
    avg = total.scale(Fraction(1, len(seen)))
    return PairingOperator(kind, k, E, avg, "group_average")


# --- Hecke recursion -----------------------------------------------------------

def q_int(k: int, q: Fraction) -> Fraction:
    """k_q = q^{k-1} + q^{k-3} + ... + q^{1-k}."""
    return sum((q ** (k - 1 - 2 * t) for t in range(k)), ZERO)


def q_factorial(k: int, q: Fraction) -> Fraction:
    out = ONE
    for j in range(1, k + 1):
        out *= q_int(j, q)
    return out


def hecke_pairing(q, n: int, k: int, kind: str) -> PairingOperator:
    """S_(k) / A_(k) for the idempotent R^(hat)_- via the q-symmetrizer
    recursion; the base case k = 2 returns the R-matrix split itself."""
    q = rat(q)
    if q in (0, 1, -1):
        raise InvalidParameter("q must avoid {0, 1, -1}")
    source = hecke_minus(n, q)
    R = hecke_r_matrix(n, q)
    sign = 1 if kind == "S" else -1
    op = TensorOperator.identity(n, 1)
    for j in range(2, k + 1):
        prev = embed(op, j, 1)
        kq = q_int(j, q)
        head = prev.scale(q ** (sign * (j - 1)) / kq)
        tail = (prev * embed(R, j, j - 1) * prev).scale(q_int(j - 1, q) / kq)
        op = head + tail if sign > 0 else head - tail
    return PairingOperator(kind, k, source, op, "hecke")


def hecke_basis_change(n: int, k: int, q) -> TensorOperator:
    """The diagonal change G_[k] with A'_(k) = G_[k] A_(k), where A'_(k) is
    the closed-form operator for the one-parameter antisymmetrizer and
    A_(k) the Hecke one.

    On a repetition-free multi-index that is sigma applied to its sorted
    tuple the entry is (k_q!/k!) q^{2 inv(sigma) - k(k-1)/2}; indices with a
    repeated digit carry 1.
    """
    q = rat(q)
    size = n ** k
    out = QMatrix.zero(size)
    norm = q_factorial(k, q) / factorial(k)
    shift = Fraction(k * (k - 1), 2)
    for pos, index in enumerate(multi_indices(n, k)):
        if len(set(index)) < k:
            out.data[pos][pos] = ONE
        else:
            ranks = sorted(range(k), key=lambda t: index[t])
            sigma = Perm(tuple(t + 1 for t in ranks)).inverse()
            # index[t] = sorted(index)[sigma(t+1)-1]
            out.data[pos][pos] = norm * q ** (2 * inv(sigma) - shift)
    return TensorOperator(n, n, k, out)


# --- Brauer products -----------------------------------------------------------

def jucys_murphy(n: int, k: int, b: int, twisted: bool) -> TensorOperator:
    """Y_b = sum_{a<b} (P^{(ab)} - Q^{(ab)}) or its symplectic twin
    Y~_b = -sum_{a<b} (P^{(ab)} - Q~^{(ab)})."""
    P = swap_operator(n)
    Q = twisted_rank_one_contraction(n) if twisted else rank_one_contraction(n)
    total = TensorOperator.zero(n, k)
    for a in range(1, b):
        total = total + embed_pair(P, k, a, b) - embed_pair(Q, k, a, b)
    return -total if twisted else total


def brauer_pairing(family: str, n: int, k: int) -> PairingOperator:
    """S^{so_n}_(k) for B_n or A^{sp_n}_(k) for B~_n via Jucys-Murphy
    products; 'so' gives kind S, 'sp' gives kind A (n even, k <= n/2 + 1)."""
    if family not in ("so", "sp"):
        raise ValueError("family must be 'so' or 'sp'")
    if k < 1:
        raise ValueError("arity starts at 1")
    if family == "so":
        source, omega, twisted, kind = orthogonal_idempotent(n), n, False, "S"
    else:
        if n % 2:
            raise InvalidParameter("the symplectic family needs even n")
        if k > n // 2 + 1:
            raise InvalidParameter("symplectic arity is limited to n/2 + 1")
        source, omega, twisted, kind = symplectic_idempotent(n), -n, True, "A"
    op = TensorOperator.identity(n, k)
    for b in range(2, k + 1):
        denom = rat(2 * b + omega - 4)
        if not denom:
            raise InvalidParameter("vanishing denominator in the product")
        y = jucys_murphy(n, k, b, twisted)
        shifted = y + TensorOperator.identity(n, k).scale(rat(omega + b - 3))
        op = op * (y + TensorOperator.identity(n, k)) * shifted.scale(1 / denom)
    op = op.scale(Fraction(1, factorial(k)))
    return PairingOperator(kind, k, source, op, "brauer")


# --- closed-form multi-parameter entries ---------------------------------------

def closed_form_multiparam(qhat, k: int, kind: str) -> PairingOperator:
    """Entrywise S- and A-operators for the multi-parameter antisymmetrizer.

    A-entries are supported on repetition-free tuples sharing a sorted
    tuple I: (1/k!) sgn(sigma) sgn(tau) mu(q_II, sigma) / mu(q_II, tau).
    S-entries on rearrangements of a weakly increasing I:
    (nu_I / k!) mu(q_II, sigma) / mu(q_II, tau).
    """
    rows = check_parameter_matrix(qhat)
    n = len(rows)
    source = parameterized_antisymmetrizer(rows)
    size = n ** k
    out = QMatrix.zero(size)
    kfact = factorial(k)
    if kind == "A":
        for I in itertools.combinations(range(1, n + 1), k):
            qII = restrict_parameter_matrix(rows, I)
            arranged = []
            for sigma in all_perms(k):
                tup = tuple(I[sigma(t) - 1] for t in range(1, k + 1))
                arranged.append((flatten_index(tup, n), sigma.sign(), mu(qII, sigma)))
            for row_pos, s_sign, s_mu in arranged:
                orow = out.data[row_pos]
                for col_pos, t_sign, t_mu in arranged:
                    orow[col_pos] = Fraction(s_sign * t_sign, kfact) * s_mu / t_mu
    elif kind == "S":
        for I in itertools.combinations_with_replacement(range(1, n + 1), k):
            qII = restrict_parameter_matrix(rows, I)
            nu = stabilizer_order(I)
            arranged = {}
            for sigma in all_perms(k):
                tup = tuple(I[sigma(t) - 1] for t in range(1, k + 1))
                pos = flatten_index(tup, n)
                if pos not in arranged:
                    arranged[pos] = mu(qII, sigma)
            factor = Fraction(nu, kfact)
            for row_pos, s_mu in arranged.items():
                orow = out.data[row_pos]
                for col_pos, t_mu in arranged.items():
                    orow[col_pos] = factor * s_mu / t_mu
    else:
        raise ValueError("kind must be 'S' or 'A'")
    return PairingOperator(kind, k, source, TensorOperator(n, n, k, out),
                           "closed_form")


# --- 4-parameter third operator -------------------------------------------------

def fourparam_conditions(a, b, c, kappa) -> dict:
    """The three coupled conditions of the 3-dimensional classification."""
    a, b, c, kappa = rat(a), rat(b), rat(c), rat(kappa)
    cond_i = a * a == b * b == c * c
    cond_ii = (a ** 4 * b ** 2 == -1 and b ** 4 * c ** 2 == -1
               and c ** 4 * a ** 2 == -1 and kappa ** 3 == -(a ** 3) * c / b)
    cond_iii = (a ** 4 * c ** 2 == -1 and b ** 4 * a ** 2 == -1
                and c ** 4 * b ** 2 == -1 and kappa ** 3 == c / (a ** 3 * b))
    return {"i": cond_i, "ii": cond_ii, "iii": cond_iii}


def fourparam_xi3_dimension(a, b, c, kappa) -> int:
    """Predicted dim of the degree-3 dual-Grassmann component.

    For kappa != 0 the condition logic applies: 3 if all three conditions
    hold, 1 if exactly one does, else 0.  At kappa = 0 the family
    degenerates to the multi-parameter antisymmetrizer, whose component is
    always one-dimensional.
    """
    if not rat(kappa):
        return 1
    conds = fourparam_conditions(a, b, c, kappa)
    count = sum(conds.values())
    if count == 3:
        return 3
    if count == 1:
        return 1
    return 0


def fourparam_A3(a, b, c, kappa):
    """The rank-one third A-operator w_1 w^1, existing iff condition (i)
    holds alone; kappa = 0 degenerates to the multi-parameter case."""
    a, b, c, kappa = rat(a), rat(b), rat(c), rat(kappa)
    if not (a and b and c):
        raise InvalidParameter("a, b, c must be nonzero")
    if not kappa:
        qhat = [[ONE, a * a, 1 / (c * c)],
                [1 / (a * a), ONE, b * b],
                [c * c, 1 / (b * b), ONE]]
        return closed_form_multiparam(qhat, 3, "A")
    conds = fourparam_conditions(a, b, c, kappa)
    if not (conds["i"] and not conds["ii"] and not conds["iii"]):
        return NotExists("A", 3, "the single-condition branch does not hold",
                         {"conditions": conds})
    source = fourparam_idempotent(a, b, c, kappa)
    w1 = [ZERO] * 27
    sixth = Fraction(1, 6)
    for cyc in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        w1[flatten_index(cyc, 3)] = sixth
    for acyc in ((1, 3, 2), (2, 1, 3), (3, 2, 1)):
        w1[flatten_index(acyc, 3)] = -(a * a) * sixth
    w1cov = [ZERO] * 27
    for cyc in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        w1cov[flatten_index(cyc, 3)] = ONE
    for acyc in ((1, 3, 2), (2, 1, 3), (3, 2, 1)):
        w1cov[flatten_index(acyc, 3)] = -1 / (a * a)
    w1cov[flatten_index((1, 1, 1), 3)] = -kappa / b
    w1cov[flatten_index((2, 2, 2), 3)] = -kappa / c
    w1cov[flatten_index((3, 3, 3), 3)] = -kappa / a
    op = QMatrix.zero(27)
    for r, x in enumerate(w1):
        if x:
            for s, y in enumerate(w1cov):
                if y:
                    op.data[r][s] = x * y
    return PairingOperator("A", 3, source, TensorOperator(3, 3, 3, op),
                           "closed_form")


# --- axiom verification ----------------------------------------------------------

def verify_axioms(p: PairingOperator, partner: PairingOperator | None = None,
                  lower=()) -> dict:
    """Check the defining conditions of a pairing operator.

    Reported axioms: adjacent annihilation, the fixed-vector conditions in
    their intersection-subspace form, idempotency, orthogonality against the
    partner of the other kind (if given), and the nesting identities against
    lower-arity operators (if given).  Values are True/False, or None when a
    check was not applicable.
    """
    E = p.source
    n = E.row_dim
    k = p.arity
    op = p.operator
    killer = E if p.kind == "S" else TensorOperator.identity(n, 2) - E
    report = {}
    ann = True
    for a in range(1, k):
        emb = embed(killer, k, a)
        if not (emb * op).is_zero() or not (op * emb).is_zero():
            ann = False
            break
    report["annihilation"] = ann

    v_k, vbar_k, w_k, wbar_k = component_subspaces(E, k)
    right, left = (v_k, vbar_k) if p.kind == "S" else (w_k, wbar_k)
    fixed = True
    for row in right.basis.data:            # columns pi with op pi = pi
        if op.matrix.matvec(row) != list(row):
            fixed = False
            break
    if fixed:
        for row in left.basis.data:         # covectors xi with xi op = xi
            if op.matrix.vecmat(row) != list(row):
                fixed = False
                break
    report["fixed_vectors"] = fixed

    report["idempotent"] = (op * op) == op

    if partner is not None and k >= 2:
        if partner.kind == p.kind or partner.arity != k:
            raise ValueError("orthogonality needs the other kind at the same arity")
        prod1 = op * partner.operator
        prod2 = partner.operator * op
        report["orthogonality"] = prod1.is_zero() and prod2.is_zero()
    else:
        report["orthogonality"] = None

    if lower:
        nest = True
        for q in lower:
            ell = q.arity
            if ell >= k:
                continue
            for a in range(1, k - ell + 2):
                emb = embed(q.operator, k, a)
                if q.kind == p.kind:
                    if emb * op != op or op * emb != op:
                        nest = False
                elif ell >= 2:
                    if not (emb * op).is_zero() or not (op * emb).is_zero():
                        nest = False
        report["nesting"] = nest
    else:
        report["nesting"] = None

    report["pass"] = all(v for v in report.values() if v is not None)
    return report


def corrupt(p: PairingOperator, row: int = 0, col: int = 0) -> PairingOperator:
    """Perturb one entry; a negative control for verify_axioms."""
    m = p.operator.matrix.copy()
    m.data[row][col] += 1
    return PairingOperator(p.kind, p.arity, p.source,
                           TensorOperator(p.operator.row_dim,
                                          p.operator.col_dim, p.arity, m),
                           p.provenance)
