"""Exact dense linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (arbitrary precision, always stored in
lowest terms with positive denominator).  Matrices are dense and row-major;
pivoting picks the first nonzero entry, which is always safe in exact
arithmetic.  Row spaces are represented by :class:`Subspace`, whose basis is
kept in reduced row-echelon form so that two subspaces are equal iff their
bases are identical.
"""

from __future__ import annotations

from fractions import Fraction


QQ = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


class AmbientMismatch(ValueError):
    """Raised when two objects live in different ambient dimensions."""


def rat(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rat(x: Fraction) -> str:
    """Serialize as 'p' or 'p/q'."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QMatrix:
    """Dense matrix over Q.  Treated as immutable once constructed."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        self.rows = rows
        self.cols = cols
        self.data = [[rat(x) for x in row] for row in data]
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise ValueError("entry grid does not match declared shape")

    @staticmethod
    def zero(rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return QMatrix(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "QMatrix":
        m = QMatrix.zero(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @staticmethod
    def from_rows(rows) -> "QMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("need at least one row")
        return QMatrix(len(rows), len(rows[0]), rows)

    def copy(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, [row[:] for row in self.data])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_shape(other)
        return QMatrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_shape(other)
        return QMatrix(
            self.rows,
            self.cols,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
        )

    def __neg__(self) -> "QMatrix":
        return self.scale(-ONE)

    def scale(self, c) -> "QMatrix":
        c = rat(c)
        return QMatrix(self.rows, self.cols, [[c * a for a in row] for row in self.data])

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = out[i]
            for k, a in enumerate(arow):
                if a:
                    brow = bdata[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return QMatrix(self.rows, other.cols, out)

    def matvec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length differs from column count")
        return [sum((a * x for a, x in zip(row, v) if a and x), ZERO) for row in self.data]

    def vecmat(self, v):
        if len(v) != self.rows:
            raise ValueError("vector length differs from row count")
        out = [ZERO] * self.cols
        for x, row in zip(v, self.data):
            if x:
                for j, a in enumerate(row):
                    if a:
                        out[j] += x * a
        return out

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, [list(col) for col in zip(*self.data)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def kron(self, other: "QMatrix") -> "QMatrix":
        out = QMatrix.zero(self.rows * other.rows, self.cols * other.cols)
        for i, arow in enumerate(self.data):
            for j, a in enumerate(arow):
                if a:
                    for k, brow in enumerate(other.data):
                        orow = out.data[i * other.rows + k]
                        for l, b in enumerate(brow):
                            if b:
                                orow[j * other.cols + l] = a * b
        return out

    def rank(self) -> int:
        return rref(self)[1]

    def to_strings(self):
        return [[format_rat(x) for x in row] for row in self.data]

    @staticmethod
    def from_strings(grid) -> "QMatrix":
        return QMatrix.from_rows([[rat(x) for x in row] for row in grid])

    def _check_shape(self, other: "QMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def rref(m: QMatrix) -> tuple[QMatrix, int]:
    """Reduced row-echelon form and rank; the row space is preserved.

    The returned matrix has the shape of the input, zero rows at the bottom,
    pivots equal to 1 and cleared pivot columns.
    """
    data = [row[:] for row in m.data]
    nrows, ncols = m.rows, m.cols
    piv_row = 0
    for col in range(ncols):
        sel = None
        for r in range(piv_row, nrows):
            if data[r][col]:
                sel = r
                break
        if sel is None:
            continue
        data[piv_row], data[sel] = data[sel], data[piv_row]
        inv = ONE / data[piv_row][col]
        if inv != 1:
            data[piv_row] = [x * inv for x in data[piv_row]]
        prow = data[piv_row]
        for r in range(nrows):
            if r != piv_row and data[r][col]:
                c = data[r][col]
                data[r] = [x - c * y for x, y in zip(data[r], prow)]
        piv_row += 1
        if piv_row == nrows:
            break
    return QMatrix(nrows, ncols, data), piv_row


class Subspace:
    """A subspace of Q^ambient_dim, stored as an echelonized row basis.

    The basis matrix is in reduced row-echelon form with no zero rows, so
    equality of subspaces is literal equality of bases.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: QMatrix):
        self.ambient_dim = ambient_dim
        self.basis = basis
        if basis.cols != ambient_dim:
            raise AmbientMismatch("basis width differs from ambient dimension")

    @staticmethod
    def from_rows(rows, ambient_dim: int) -> "Subspace":
        rows = [list(r) for r in rows]
        if not rows:
            return Subspace(ambient_dim, QMatrix(0, ambient_dim, []))
        echelon, rank = rref(QMatrix(len(rows), ambient_dim, rows))
        return Subspace(ambient_dim, QMatrix(rank, ambient_dim, echelon.data[:rank]))

    @staticmethod
    def from_matrix(m: QMatrix) -> "Subspace":
        """Row space of m."""
        return Subspace.from_rows(m.data, m.cols)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, QMatrix(0, ambient_dim, []))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, vector) -> bool:
        vector = [rat(x) for x in vector]
        if len(vector) != self.ambient_dim:
            raise AmbientMismatch("vector lives in a different ambient space")
        v = vector[:]
        for row in self.basis.data:
            lead = next(j for j, x in enumerate(row) if x)
            if v[lead]:
                c = v[lead]
                v = [x - c * y for x, y in zip(v, row)]
        return not any(v)

    def contains_space(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("subspaces live in different ambient spaces")
        return all(self.contains(row) for row in other.basis.data)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("subspaces live in different ambient spaces")
        return self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    """Exact subspace equality; raises AmbientMismatch on unequal ambients."""
    return a == b


def kernel(m: QMatrix) -> Subspace:
    """Echelonized basis of the right null space {v : m v = 0}."""
    echelon, rank = rref(m)
    pivot_cols = []
    for row in echelon.data[:rank]:
        pivot_cols.append(next(j for j, x in enumerate(row) if x))
    pivot_set = set(pivot_cols)
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivot_cols):
            v[p] = -echelon.data[r][f]
        basis.append(v)
    return Subspace.from_rows(basis, m.cols)


def row_space(m: QMatrix) -> Subspace:
    return Subspace.from_matrix(m)


def column_space(m: QMatrix) -> Subspace:
    return Subspace.from_matrix(m.transpose())


def solve_right(m: QMatrix, rhs) -> list | None:
    """One solution x of m x = rhs, or None if inconsistent."""
    rhs = [rat(x) for x in rhs]
    if len(rhs) != m.rows:
        raise AmbientMismatch("right-hand side has wrong length")
    aug = QMatrix(m.rows, m.cols + 1, [row + [b] for row, b in zip(m.data, rhs)])
    echelon, rank = rref(aug)
    x = [ZERO] * m.cols
    for row in echelon.data[:rank]:
        lead = next(j for j, v in enumerate(row) if v)
        if lead == m.cols:
            return None
        x[lead] = row[m.cols]
    return x


def invert(m: QMatrix) -> QMatrix | None:
    """Exact inverse, or None if singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    aug = QMatrix(n, 2 * n, [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.data)])
    echelon, rank = rref(aug)
    if rank < n or any(echelon.data[i][i] != 1 for i in range(n)):
        return None
    return QMatrix(n, n, [row[n:] for row in echelon.data])


class SparseEchelon:
    """Incremental row reduction with sparse rows (dict index -> Fraction).

    Used for large word spaces where dense elimination is not affordable.
    Pivot rows are normalized to leading coefficient 1; the lead of a pivot
    row is its minimal index, so reduction proceeds strictly left to right
    and terminates in one ascending sweep.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {i: c for i, c in row.items() if c}
        while row:
            hits = [i for i in row if i in self.pivots]
            if not hits:
                break
            i = min(hits)
            c = row.pop(i)
            for j, v in self.pivots[i].items():
                if j == i:
                    continue
                nv = row.get(j, ZERO) - c * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        return row

    def insert(self, row: dict) -> bool:
        """Add a row to the span; returns True if the rank grew."""
        red = self.reduce(row)
        if not red:
            return False
        lead = min(red)
        inv = ONE / red[lead]
        if inv != 1:
            red = {j: c * inv for j, c in red.items()}
        self.pivots[lead] = red
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def reduced_rows(self) -> list[dict]:
        """Fully back-substituted pivot rows, ascending by lead index."""
        leads = sorted(self.pivots)
        reduced: dict[int, dict] = {}
        for lead in reversed(leads):
            row = dict(self.pivots[lead])
            while True:
                hits = [j for j in row if j != lead and j in reduced]
                if not hits:
                    break
                j = min(hits)
                c = row.pop(j)
                for jj, v in reduced[j].items():
                    if jj == j:
                        continue
                    nv = row.get(jj, ZERO) - c * v
                    if nv:
                        row[jj] = nv
                    else:
                        row.pop(jj, None)
            reduced[lead] = row
        return [reduced[lead] for lead in leads]

    def dense_basis(self, ambient_dim: int) -> Subspace:
        rows = []
        for row in self.reduced_rows():
            v = [ZERO] * ambient_dim
            for j, c in row.items():
                v[j] = c
            rows.append(v)
        if not rows:
            return Subspace.zero(ambient_dim)
        # reduced_rows already yields a reduced row-echelon basis
        return Subspace(ambient_dim, QMatrix(len(rows), ambient_dim, rows))
