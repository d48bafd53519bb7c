"""Points of the framed representation space M(v, w) and their calculus.

A point is x = (x_h, p_i, q_i) with x_h: V_{o(h)} -> V_{i(h)}, p_i: W_i -> V_i,
q_i: V_i -> W_i.  The moment map is mu_i(x) = sum_{h: i(h)=i} eps(h) x_h x_hbar
- p_i q_i and the symplectic pairing is
omega(x, x') = sum_h tr(eps(h) x_h x'_hbar) + sum_i tr(p_i q'_i - p'_i q_i).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .linalg import QMatrix, Subspace, frac_from_str, frac_to_str, sample_matrix


@dataclass
class RepPoint:
    graph: Graph
    v: tuple[int, ...]
    w: tuple[int, ...]
    x: dict[int, QMatrix]  # arrow index -> matrix
    p: list[QMatrix]
    q: list[QMatrix]

    def __post_init__(self):
        self.v = tuple(self.v)
        self.w = tuple(self.w)
        g = self.graph
        assert len(self.v) == g.n and len(self.w) == g.n
        for h in g.arrows:
            assert self.x[h.index].shape == (self.v[h.end], self.v[h.start]), (
                h,
                self.x[h.index].shape,
            )
        for i in range(g.n):
            assert self.p[i].shape == (self.v[i], self.w[i])
            assert self.q[i].shape == (self.w[i], self.v[i])

    def __eq__(self, other):
        if not isinstance(other, RepPoint):
            return NotImplemented
        return (
            self.v == other.v
            and self.w == other.w
            and self.x == other.x
            and self.p == other.p
            and self.q == other.q
        )

    def copy(self) -> "RepPoint":
        return RepPoint(
            self.graph,
            self.v,
            self.w,
            {k: m.copy() for k, m in self.x.items()},
            [m.copy() for m in self.p],
            [m.copy() for m in self.q],
        )

    # -- serialization ---------------------------------------------------
    def to_dict(self) -> dict:
        def ser(m: QMatrix):
            return [[frac_to_str(e) for e in row] for row in m.data]

        return {
            "graph": self.graph.to_dict(),
            "v": list(self.v),
            "w": list(self.w),
            "x": {str(k): ser(m) for k, m in self.x.items()},
            "p": {str(i): ser(m) for i, m in enumerate(self.p)},
            "q": {str(i): ser(m) for i, m in enumerate(self.q)},
        }

    @staticmethod
    def from_dict(d: dict) -> "RepPoint":
        g = Graph.from_dict(d["graph"])
        v = tuple(d["v"])
        w = tuple(d["w"])

        def de(m, rows, cols):
            return QMatrix([[frac_from_str(e) for e in row] for row in m], rows, cols)

        def grab(table, key, rows, cols):
            raw = table.get(str(key))
            return de(raw, rows, cols) if raw is not None else QMatrix.zeros(rows, cols)

        x = {h.index: grab(d.get("x", {}), h.index, v[h.end], v[h.start]) for h in g.arrows}
        p = [grab(d.get("p", {}), i, v[i], w[i]) for i in range(g.n)]
        q = [grab(d.get("q", {}), i, w[i], v[i]) for i in range(g.n)]
        return RepPoint(g, v, w, x, p, q)


def zero_point(g: Graph, v, w) -> RepPoint:
    x = {h.index: QMatrix.zeros(v[h.end], v[h.start]) for h in g.arrows}
    p = [QMatrix.zeros(v[i], w[i]) for i in range(g.n)]
    q = [QMatrix.zeros(w[i], v[i]) for i in range(g.n)]
    return RepPoint(g, tuple(v), tuple(w), x, p, q)


def sample_point(g: Graph, v, w, rng: random.Random, num_bound: int = 3) -> RepPoint:
    x = {h.index: sample_matrix(rng, v[h.end], v[h.start], num_bound) for h in g.arrows}
    p = [sample_matrix(rng, v[i], w[i], num_bound) for i in range(g.n)]
    q = [sample_matrix(rng, w[i], v[i], num_bound) for i in range(g.n)]
    return RepPoint(g, tuple(v), tuple(w), x, p, q)


# ---------------------------------------------------------------------------
# Moment map and symplectic pairing


def moment_map(pt: RepPoint) -> list[QMatrix]:
    g = pt.graph
    out = []
    for i in range(g.n):
        acc = QMatrix.zeros(pt.v[i], pt.v[i])
        for h in g.arrows_into(i):
            acc = acc + (pt.x[h.index] @ pt.x[h.bar]).scale(h.eps)
        acc = acc - pt.p[i] @ pt.q[i]
        out.append(acc)
    return out


def in_lambda(pt: RepPoint, zeta_c) -> bool:
    mu = moment_map(pt)
    return all(
        mu[i] == QMatrix.identity(pt.v[i]).scale(Fraction(zeta_c[i])) for i in range(pt.graph.n)
    )


def symplectic_pair(pt1: RepPoint, pt2: RepPoint) -> Fraction:
    assert pt1.v == pt2.v and pt1.w == pt2.w
    g = pt1.graph
    total = Fraction(0)
    for h in g.arrows:
        total += Fraction(h.eps) * (pt1.x[h.index] @ pt2.x[h.bar]).trace()
    for i in range(g.n):
        total += (pt1.p[i] @ pt2.q[i]).trace() - (pt2.p[i] @ pt1.q[i]).trace()
    return total


# ---------------------------------------------------------------------------
# Group actions


@dataclass
class GroupElem:
    blocks: list[QMatrix]

    def __post_init__(self):
        for b in self.blocks:
            assert b.is_invertible(), "group blocks must be invertible"

    @staticmethod
    def identity(dims) -> "GroupElem":
        return GroupElem([QMatrix.identity(d) for d in dims])


def act_gv(g_elem: GroupElem, pt: RepPoint) -> RepPoint:
    g = pt.graph
    inv = [b.inverse() for b in g_elem.blocks]
    x = {h.index: g_elem.blocks[h.end] @ pt.x[h.index] @ inv[h.start] for h in g.arrows}
    p = [g_elem.blocks[i] @ pt.p[i] for i in range(g.n)]
    q = [pt.q[i] @ inv[i] for i in range(g.n)]
    return RepPoint(g, pt.v, pt.w, x, p, q)


def act_gw(f_elem: GroupElem, pt: RepPoint) -> RepPoint:
    g = pt.graph
    inv = [b.inverse() for b in f_elem.blocks]
    p = [pt.p[i] @ inv[i] for i in range(g.n)]
    q = [f_elem.blocks[i] @ pt.q[i] for i in range(g.n)]
    return RepPoint(g, pt.v, pt.w, dict(pt.x), p, q)


# ---------------------------------------------------------------------------
# Stability in the two uniform chambers


def is_stable_positive(pt: RepPoint) -> bool:
    """No nonzero x-invariant graded subspace inside ker q (chamber xi > 0)."""
    g = pt.graph
    spaces = [Subspace(pt.v[i], pt.q[i].nullspace()) for i in range(g.n)]
    while True:
        changed = False
        new_spaces = []
        for i in range(g.n):
            s = spaces[i]
            for h in g.arrows_out_of(i):
                s = s.intersect(spaces[h.end].preimage_under(pt.x[h.index]))
            if s.dim != spaces[i].dim:
                changed = True
            new_spaces.append(s)
        spaces = new_spaces
        if not changed:
            break
    return all(s.dim == 0 for s in spaces)


def is_stable_negative(pt: RepPoint) -> bool:
    """The x-saturation of im p is all of V (chamber xi < 0)."""
    g = pt.graph
    spaces = [Subspace(pt.v[i], pt.p[i]) for i in range(g.n)]
    while True:
        changed = False
        new_spaces = list(spaces)
        for h in g.arrows:
            img = spaces[h.start].image_under(pt.x[h.index])
            merged = new_spaces[h.end].sum(img)
            if merged.dim != new_spaces[h.end].dim:
                changed = True
            new_spaces[h.end] = merged
        spaces = new_spaces
        if not changed:
            break
    return all(spaces[i].dim == pt.v[i] for i in range(g.n))


# ---------------------------------------------------------------------------
# Orbit membership via explicit intertwiner


def _linear_system_for_intertwiner(pt1: RepPoint, pt2: RepPoint):
    """Rows of (A, b) with A vec(g) = b encoding g.pt1 = pt2.

    Unknowns are the entries of the blocks g_i (row-major), concatenated.
    Equations: g_{i(h)} x_h = x'_h g_{o(h)};  g_i p_i = p'_i;  q'_i g_i = q_i.
    """
    g = pt1.graph
    sizes = [pt1.v[i] * pt1.v[i] for i in range(g.n)]
    offsets = [sum(sizes[:i]) for i in range(g.n)]
    total = sum(sizes)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def gpos(i, r, c):
        return offsets[i] + r * pt1.v[i] + c

    def add_row(coeffs: dict[int, Fraction], b: Fraction):
        row = [Fraction(0)] * total
        for k, val in coeffs.items():
            row[k] += val
        rows.append(row)
        rhs.append(b)

    for h in g.arrows:
        i, j = h.end, h.start  # g_i x_h - x'_h g_j = 0
        x1, x2 = pt1.x[h.index], pt2.x[h.index]
        for r in range(pt1.v[i]):
            for c in range(pt1.v[j]):
                coeffs: dict[int, Fraction] = {}
                for k in range(pt1.v[i]):
                    if x1.data[k][c]:
                        coeffs[gpos(i, r, k)] = coeffs.get(gpos(i, r, k), Fraction(0)) + x1.data[k][c]
                for k in range(pt1.v[j]):
                    if x2.data[r][k]:
                        coeffs[gpos(j, k, c)] = coeffs.get(gpos(j, k, c), Fraction(0)) - x2.data[r][k]
                add_row(coeffs, Fraction(0))
    for i in range(g.n):
        p1, p2 = pt1.p[i], pt2.p[i]
        for r in range(pt1.v[i]):
            for c in range(pt1.w[i]):
                coeffs = {gpos(i, r, k): p1.data[k][c] for k in range(pt1.v[i]) if p1.data[k][c]}
                add_row(coeffs, p2.data[r][c])
        q1, q2 = pt1.q[i], pt2.q[i]
        for r in range(pt1.w[i]):
            for c in range(pt1.v[i]):
                coeffs = {gpos(i, k, c): q2.data[r][k] for k in range(pt1.v[i]) if q2.data[r][k]}
                add_row(coeffs, q1.data[r][c])
    return QMatrix(rows, len(rows), total), QMatrix.column(rhs), offsets


def _vec_to_blocks(vec: QMatrix, pt: RepPoint, offsets) -> list[QMatrix]:
    blocks = []
    for i in range(pt.graph.n):
        d = pt.v[i]
        block = QMatrix.zeros(d, d)
        for r in range(d):
            for c in range(d):
                block.data[r][c] = vec.data[offsets[i] + r * d + c][0]
        blocks.append(block)
    return blocks


def intertwiner(pt1: RepPoint, pt2: RepPoint, sweep_cap: int = 100) -> GroupElem | None:
    """An invertible g with g . pt1 = pt2, or None.

    Solves the affine linear system and sweeps small rational combinations of
    the solution space for an invertible representative (at most sweep_cap
    candidates).
    """
    assert pt1.v == pt2.v and pt1.w == pt2.w
    a, b, offsets = _linear_system_for_intertwiner(pt1, pt2)
    if a.rows == 0:
        part = QMatrix.zeros(a.cols, 1)
        null = QMatrix.identity(a.cols)
    else:
        part = a.solve(b)
        if part is None:
            return None
        null = a.nullspace()

    dim = null.cols
    candidates: list[list[Fraction]] = [[Fraction(0)] * dim]
    small = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(3), Fraction(1, 2)]
    if dim:
        if dim <= 2:
            grids = itertools.product([Fraction(0)] + small, repeat=dim)
            candidates += [list(t) for t in grids]
        else:
            for k in range(dim):
                for s in small:
                    cand = [Fraction(0)] * dim
                    cand[k] = s
                    candidates.append(cand)
            rng = random.Random(0)
            while len(candidates) < sweep_cap:
                candidates.append([Fraction(rng.randint(-3, 3)) for _ in range(dim)])
    for coeffs in candidates[:sweep_cap]:
        vec = part
        for k, cval in enumerate(coeffs):
            if cval:
                vec = vec + null.submatrix(range(null.rows), range(k, k + 1)).scale(cval)
        blocks = _vec_to_blocks(vec, pt1, offsets)
        if all(blk.is_invertible() for blk in blocks):
            g_elem = GroupElem(blocks)
            if act_gv(g_elem, pt1) == pt2:
                return g_elem
    return None


# ---------------------------------------------------------------------------
# Type-A flag map


def flag_map(pt: RepPoint) -> tuple[QMatrix, list[Subspace]]:
    """(q_1 p_1, [im q_1, im q_1 y_1, ..., im q_1 y_1...y_{n-1}]) for type A.

    Requires w supported at the first vertex.  y_k is the arrow from vertex
    k+1 to vertex k (0-based), i.e. the reversed arrow of edge k.
    """
    g = pt.graph
    n = g.n
    assert all(wi == 0 for wi in pt.w[1:]), "framing must be supported at the first vertex"
    x_mat = pt.q[0] @ pt.p[0]
    flag = []
    composite = pt.q[0]
    for k in range(n):
        flag.append(Subspace(pt.w[0], composite))
        if k < n - 1:
            y_k = pt.x[2 * k + 1]  # arrow (k+1) -> k
            composite = composite @ y_k
    return x_mat, flag
