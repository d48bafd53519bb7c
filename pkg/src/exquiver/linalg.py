"""Exact rational linear algebra: matrices, bilinear forms, adjoints, subspaces.

Everything is over Q via fractions.Fraction; there is no floating point
anywhere.  Matrices are dense and immutable-by-convention (methods return new
objects).  Zero-dimensional shapes (0 x n, n x 0) are fully supported since
graded spaces routinely have empty components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction


def frac_from_str(s) -> Fraction:
    """Parse "p/q" (or an int) into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QMatrix:
    """Dense matrix over Fraction, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        self.rows = rows
        self.cols = cols
        self.data = [[Fraction(data[r][c]) for c in range(cols)] for r in range(rows)]

    # -- constructors -------------------------------------------------
    @staticmethod
    def zeros(rows: int, cols: int) -> "QMatrix":
        m = QMatrix.__new__(QMatrix)
        m.rows, m.cols = rows, cols
        m.data = [[Fraction(0)] * cols for _ in range(rows)]
        return m

    @staticmethod
    def identity(n: int) -> "QMatrix":
        m = QMatrix.zeros(n, n)
        for i in range(n):
            m.data[i][i] = Fraction(1)
        return m

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "QMatrix":
        return QMatrix(rows)

    @staticmethod
    def diag(entries: Sequence) -> "QMatrix":
        n = len(entries)
        m = QMatrix.zeros(n, n)
        for i, e in enumerate(entries):
            m.data[i][i] = Fraction(e)
        return m

    @staticmethod
    def column(entries: Sequence) -> "QMatrix":
        return QMatrix([[e] for e in entries], len(entries), 1)

    def copy(self) -> "QMatrix":
        return QMatrix(self.data, self.rows, self.cols)

    # -- basics --------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"QMatrix({self.data!r})"

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.data for e in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "QMatrix") -> "QMatrix":
        assert self.shape == other.shape, (self.shape, other.shape)
        m = QMatrix.zeros(self.rows, self.cols)
        for r in range(self.rows):
            for c in range(self.cols):
                m.data[r][c] = self.data[r][c] + other.data[r][c]
        return m

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def __neg__(self) -> "QMatrix":
        return self.scale(-1)

    def scale(self, k) -> "QMatrix":
        k = Fraction(k)
        m = QMatrix.zeros(self.rows, self.cols)
        for r in range(self.rows):
            for c in range(self.cols):
                m.data[r][c] = k * self.data[r][c]
        return m

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        assert self.cols == other.rows, (self.shape, other.shape)
        m = QMatrix.zeros(self.rows, other.cols)
        for r in range(self.rows):
            srow = self.data[r]
            for c in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    if srow[k]:
                        acc += srow[k] * other.data[k][c]
                m.data[r][c] = acc
        return m

    def transpose(self) -> "QMatrix":
        m = QMatrix.zeros(self.cols, self.rows)
        for r in range(self.rows):
            for c in range(self.cols):
                m.data[c][r] = self.data[r][c]
        return m

    def trace(self) -> Fraction:
        assert self.is_square()
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def apply(self, vec: Sequence) -> list[Fraction]:
        assert len(vec) == self.cols
        return [
            sum((self.data[r][c] * Fraction(vec[c]) for c in range(self.cols)), Fraction(0))
            for r in range(self.rows)
        ]

    # -- block manipulation ----------------------------------------------
    @staticmethod
    def hstack(mats: Sequence["QMatrix"]) -> "QMatrix":
        mats = list(mats)
        rows = mats[0].rows
        assert all(m.rows == rows for m in mats)
        data = [[e for m in mats for e in m.data[r]] for r in range(rows)]
        return QMatrix(data, rows, sum(m.cols for m in mats))

    @staticmethod
    def vstack(mats: Sequence["QMatrix"]) -> "QMatrix":
        mats = list(mats)
        cols = mats[0].cols
        assert all(m.cols == cols for m in mats)
        data = [row for m in mats for row in m.data]
        return QMatrix(data, sum(m.rows for m in mats), cols)

    @staticmethod
    def block(grid: Sequence[Sequence["QMatrix"]]) -> "QMatrix":
        return QMatrix.vstack([QMatrix.hstack(row) for row in grid])

    def submatrix(self, row_range: range, col_range: range) -> "QMatrix":
        data = [[self.data[r][c] for c in col_range] for r in row_range]
        return QMatrix(data, len(row_range), len(col_range))

    # -- elimination -----------------------------------------------------
    def rref(self) -> tuple["QMatrix", list[int]]:
        """Reduced row echelon form and pivot column indices."""
        m = self.copy()
        pivots: list[int] = []
        r = 0
        for c in range(m.cols):
            if r >= m.rows:
                break
            pivot = None
            for rr in range(r, m.rows):
                if m.data[rr][c] != 0:
                    pivot = rr
                    break
            if pivot is None:
                continue
            m.data[r], m.data[pivot] = m.data[pivot], m.data[r]
            inv = Fraction(1) / m.data[r][c]
            m.data[r] = [inv * e for e in m.data[r]]
            for rr in range(m.rows):
                if rr != r and m.data[rr][c] != 0:
                    f = m.data[rr][c]
                    m.data[rr] = [a - f * b for a, b in zip(m.data[rr], m.data[r])]
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "QMatrix":
        """Basis of the right kernel, as columns (cols x nullity matrix)."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = QMatrix.zeros(self.cols, len(free))
        for j, fc in enumerate(free):
            basis.data[fc][j] = Fraction(1)
            for r, pc in enumerate(pivots):
                basis.data[pc][j] = -red.data[r][fc]
        return basis

    def solve(self, rhs: "QMatrix") -> "QMatrix | None":
        """One solution X of self @ X = rhs, or None if inconsistent."""
        assert rhs.rows == self.rows
        aug = QMatrix.hstack([self, rhs])
        red, pivots = aug.rref()
        pivots_in_self = [p for p in pivots if p < self.cols]
        if len(pivots_in_self) != len(pivots):
            return None  # a pivot landed in the rhs block
        x = QMatrix.zeros(self.cols, rhs.cols)
        for r, pc in enumerate(pivots_in_self):
            for c in range(rhs.cols):
                x.data[pc][c] = red.data[r][self.cols + c]
        return x

    def inverse(self) -> "QMatrix":
        assert self.is_square()
        n = self.rows
        red, pivots = QMatrix.hstack([self, QMatrix.identity(n)]).rref()
        if len(pivots) != n or pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def power(self, k: int) -> "QMatrix":
        assert self.is_square() and k >= 0
        out = QMatrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out


# ---------------------------------------------------------------------------
# Bilinear forms


@dataclass(frozen=True)
class Form:
    """A nondegenerate bilinear form on Q^d given by its Gram matrix.

    (u, v) = tuple(u) . gram . v.  delta = +1 (symmetric) or -1 (symplectic)
    when declared; None means no symmetry is promised.
    """

    gram: QMatrix
    delta: int | None = None

    def __post_init__(self):
        assert self.gram.is_square()
        if not self.gram.is_invertible():
            raise ValueError("Gram matrix must be invertible")
        if self.delta is not None:
            assert self.delta in (+1, -1)
            if self.gram.transpose() != self.gram.scale(self.delta):
                raise ValueError("Gram matrix does not match declared sign")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        row = QMatrix([list(u)], 1, self.dim)
        col = QMatrix.column(list(v))
        return (row @ self.gram @ col)[0, 0]


def standard_form(dim: int, delta: int) -> Form:
    """Identity Gram for delta=+1; [[0, I], [-I, 0]] for delta=-1 (even dim)."""
    if delta == +1:
        return Form(QMatrix.identity(dim), +1)
    assert delta == -1
    if dim % 2 != 0:
        raise ValueError("symplectic form needs even dimension")
    k = dim // 2
    g = QMatrix.zeros(dim, dim)
    for i in range(k):
        g.data[i][k + i] = Fraction(1)
        g.data[k + i][i] = Fraction(-1)
    return Form(g, -1)


def right_adjoint(t: QMatrix, src_form: Form, dst_form: Form) -> QMatrix:
    """T*: dst -> src with (T e, e')_dst = (e, T* e')_src.

    In Gram coordinates T* = G_src^{-1} tT G_dst.
    """
    assert t.cols == src_form.dim and t.rows == dst_form.dim
    return src_form.gram.inverse() @ t.transpose() @ dst_form.gram


def left_adjoint(t: QMatrix, src_form: Form, dst_form: Form) -> QMatrix:
    """T^!: dst -> src with (e', T e)_dst = (T^! e', e)_src.

    Equals delta_src * delta_dst * T* on sign-declared forms.
    """
    assert t.cols == src_form.dim and t.rows == dst_form.dim
    g_src_inv_t = src_form.gram.inverse().transpose()
    return g_src_inv_t @ t.transpose() @ dst_form.gram.transpose()


def classify_membership(x: QMatrix, form: Form) -> set[str]:
    """Which of x = -x* (isometry Lie algebra) / x = x* (symmetric part) hold."""
    star = right_adjoint(x, form, form)
    out = set()
    if x == -star:
        out.add("lie_isometry")
    if x == star:
        out.add("symmetric_space")
    return out or {"neither"}


def sample_fraction(rng: random.Random, num_bound: int = 4, dens=(1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.choice(dens))


def sample_matrix(rng: random.Random, rows: int, cols: int, num_bound: int = 4) -> QMatrix:
    return QMatrix(
        [[sample_fraction(rng, num_bound) for _ in range(cols)] for _ in range(rows)],
        rows,
        cols,
    )


def sample_isometry(form: Form, seed_or_rng, max_tries: int = 50) -> QMatrix:
    """Exact g with g g* = I via the Cayley transform.

    Sample y with ty = -delta y, set x = G^{-1} y (so x = -x*), and return
    (I - x)(I + x)^{-1}; regenerate while I + x is singular.
    """
    assert form.delta in (+1, -1), "sampling needs a sign-declared form"
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    n = form.dim
    if n == 0:
        return QMatrix.identity(0)
    g_inv = form.gram.inverse()
    for _ in range(max_tries):
        y = QMatrix.zeros(n, n)
        for r in range(n):
            for c in range(r, n):
                val = sample_fraction(rng)
                if r == c:
                    y.data[r][c] = val if form.delta == -1 else Fraction(0)
                else:
                    y.data[r][c] = val
                    y.data[c][r] = -form.delta * val
        x = g_inv @ y
        eye_plus = QMatrix.identity(n) + x
        if eye_plus.is_invertible():
            return (QMatrix.identity(n) - x) @ eye_plus.inverse()
    raise RuntimeError("could not sample an isometry (singular I + x repeatedly)")


def jordan_type(n_mat: QMatrix) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix, parts descending.

    rank N^{k-1} - rank N^k counts blocks of size >= k, i.e. the conjugate
    partition; transpose it back.
    """
    assert n_mat.is_square()
    d = n_mat.rows
    if d == 0:
        return ()
    ranks = [d]
    power = QMatrix.identity(d)
    while ranks[-1] > 0:
        power = power @ n_mat
        ranks.append(power.rank())
        if len(ranks) > d + 1:
            raise ValueError("matrix is not nilpotent")
    conj = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for size in range(1, len(conj) + 1):
        count = conj[size - 1] - (conj[size] if size < len(conj) else 0)
        parts.extend([size] * count)
    return tuple(sorted(parts, reverse=True))


# ---------------------------------------------------------------------------
# Subspaces


class Subspace:
    """Subspace of Q^d stored as a reduced column-echelon basis matrix."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, columns: QMatrix | None = None):
        self.ambient = ambient
        if columns is None or columns.cols == 0:
            self.basis = QMatrix.zeros(ambient, 0)
            return
        assert columns.rows == ambient
        red, pivots = columns.transpose().rref()
        rows = [red.data[i] for i in range(len(pivots))]
        self.basis = QMatrix(rows, len(pivots), ambient).transpose() if pivots else QMatrix.zeros(ambient, 0)

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace(ambient, QMatrix.identity(ambient))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient})"

    def contains_vector(self, vec: Sequence) -> bool:
        col = QMatrix.column([Fraction(v) for v in vec])
        return self.basis.solve(col) is not None

    def contains(self, other: "Subspace") -> bool:
        assert self.ambient == other.ambient
        if other.dim == 0:
            return True
        return self.basis.solve(other.basis) is not None

    def sum(self, other: "Subspace") -> "Subspace":
        assert self.ambient == other.ambient
        return Subspace(self.ambient, QMatrix.hstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        assert self.ambient == other.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        stacked = QMatrix.hstack([self.basis, other.basis])
        ker = stacked.nullspace()
        coeff = ker.submatrix(range(self.dim), range(ker.cols))
        return Subspace(self.ambient, self.basis @ coeff)

    def annihilator_rows(self) -> QMatrix:
        """Matrix whose rows span {f : f(self) = 0} in the dual."""
        return self.basis.transpose().nullspace().transpose()

    def image_under(self, t: QMatrix) -> "Subspace":
        assert t.cols == self.ambient
        return Subspace(t.rows, t @ self.basis)

    def preimage_under(self, t: QMatrix) -> "Subspace":
        """{v : t v in self} where t maps Q^{t.cols} into this ambient space."""
        assert t.rows == self.ambient
        ann = self.annihilator_rows()
        if ann.rows == 0:
            return Subspace.full(t.cols)
        return Subspace(t.cols, (ann @ t).nullspace())

    def orthogonal_complement(self, form: Form) -> "Subspace":
        assert form.dim == self.ambient
        if self.dim == 0:
            return Subspace.full(self.ambient)
        return Subspace(self.ambient, (self.basis.transpose() @ form.gram).nullspace())


def kernel(t: QMatrix) -> Subspace:
    return Subspace(t.cols, t.nullspace())


def image(t: QMatrix) -> Subspace:
    return Subspace(t.rows, t @ QMatrix.identity(t.cols))


def solve_general(a: QMatrix, b: QMatrix) -> tuple[QMatrix, QMatrix] | None:
    """All solutions of a x = b (b a column): (particular, kernel basis) or None."""
    part = a.solve(b)
    if part is None:
        return None
    return part, a.nullspace()
