"""Graphs without loops, Cartan matrices, Weyl actions, roots, automorphisms.

A graph is a finite vertex set together with an arrow set H closed under a
fixed-point-free involution h -> hbar reversing direction, and an orientation
function eps: H -> {+1, -1} with eps(h) + eps(hbar) = 0.  Each unordered edge
contributes one arrow pair.

Two actions of the Weyl group on Z^I are provided: the linear one on weights
(s_i xi)_j = xi_j - c_ji xi_i, and the affine one v -> s_i *_w v that changes
only entry i.  Both are exact over the integers / rationals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import QMatrix


@dataclass(frozen=True)
class Arrow:
    start: int
    end: int
    eps: int
    index: int
    bar: int  # index of the reversed arrow


class Graph:
    """Loop-free graph with arrow pairs and orientation signs."""

    def __init__(self, n_vertices: int, edges: Sequence[tuple[int, int]], orientation: Sequence[int] | None = None):
        if orientation is None:
            orientation = [1] * len(edges)
        assert len(orientation) == len(edges)
        self.n = n_vertices
        self.edges = [tuple(e) for e in edges]
        arrows: list[Arrow] = []
        for k, ((a, b), sign) in enumerate(zip(self.edges, orientation)):
            if a == b:
                raise ValueError("loops are not allowed")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError("edge endpoint out of range")
            if sign not in (1, -1):
                raise ValueError("orientation entries must be +1 or -1")
            arrows.append(Arrow(a, b, sign, 2 * k, 2 * k + 1))
            arrows.append(Arrow(b, a, -sign, 2 * k + 1, 2 * k))
        self.arrows = arrows
        self._cartan = None

    # -- structure ------------------------------------------------------
    def arrows_out_of(self, v: int) -> list[Arrow]:
        return [h for h in self.arrows if h.start == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [h for h in self.arrows if h.end == v]

    def reversed_arrow(self, h: Arrow) -> Arrow:
        return self.arrows[h.bar]

    def cartan(self) -> list[list[int]]:
        if self._cartan is None:
            c = [[2 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
            for h in self.arrows:
                c[h.start][h.end] -= 1
            self._cartan = c
        return self._cartan

    def cartan_qmatrix(self) -> QMatrix:
        return QMatrix(self.cartan())

    def is_dynkin(self) -> bool:
        """Positive-definiteness of the Cartan matrix (leading minors > 0)."""
        c = QMatrix(self.cartan())
        for k in range(1, self.n + 1):
            sub = c.submatrix(range(k), range(k))
            if _det(sub) <= 0:
                return False
        return True

    # -- serialization -----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "vertices": list(range(self.n)),
            "edges": [list(e) for e in self.edges],
            "orientation": [self.arrows[2 * k].eps for k in range(len(self.edges))],
        }

    @staticmethod
    def from_dict(d: dict) -> "Graph":
        vertices = d["vertices"]
        index = {v: k for k, v in enumerate(vertices)}
        edges = [(index[a], index[b]) for a, b in d["edges"]]
        orientation = d.get("orientation") or [1] * len(edges)
        return Graph(len(vertices), edges, orientation)


def _det(m: QMatrix) -> Fraction:
    red, pivots = m.rref()
    if len(pivots) < m.rows:
        return Fraction(0)
    # determinant up to the product of pivots used in scaling; recompute by LU-free expansion
    # for the small matrices here, fraction-free Gauss is simplest
    a = [row[:] for row in m.data]
    n = m.rows
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def type_a_graph(n: int) -> Graph:
    """Type A_n line graph on vertices 0..n-1 with eps(k -> k+1) = -1.

    The sign convention matches eps(h) = start - end on adjacent vertices.
    """
    return Graph(n, [(k, k + 1) for k in range(n - 1)], [-1] * (n - 1))


# ---------------------------------------------------------------------------
# Weyl actions


def weyl_reflect(g: Graph, i: int, xi: Sequence) -> tuple:
    """Linear action on weights: (s_i xi)_j = xi_j - c_ji xi_i."""
    c = g.cartan()
    return tuple(xi[j] - c[j][i] * xi[i] for j in range(g.n))


def root_reflect(g: Graph, i: int, gamma: Sequence) -> tuple:
    """Action in root coordinates: only entry i changes."""
    c = g.cartan()
    out = list(gamma)
    out[i] = gamma[i] - sum(c[i][j] * gamma[j] for j in range(g.n))
    return tuple(out)


def weyl_star(g: Graph, i: int, v: Sequence, w: Sequence) -> tuple:
    """Affine action: v'_i = v_i - sum_j c_ij v_j + w_i, other entries kept."""
    c = g.cartan()
    out = list(v)
    out[i] = v[i] - sum(c[i][j] * v[j] for j in range(g.n)) + w[i]
    return tuple(out)


def weyl_reflect_word(g: Graph, word: Sequence[int], xi: Sequence) -> tuple:
    out = tuple(xi)
    for i in word:
        out = weyl_reflect(g, i, out)
    return out


def root_reflect_word(g: Graph, word: Sequence[int], gamma: Sequence) -> tuple:
    out = tuple(gamma)
    for i in word:
        out = root_reflect(g, i, out)
    return out


def weyl_star_word(g: Graph, word: Sequence[int], v: Sequence, w: Sequence) -> tuple:
    """Left-to-right fold: the first letter acts first."""
    out = tuple(v)
    for i in word:
        out = weyl_star(g, i, out, w)
    return out


def is_dominant(xi: Sequence) -> bool:
    return all(x >= 0 for x in xi)


# ---------------------------------------------------------------------------
# Roots and genericity


def positive_roots_bounded(g: Graph, v: Sequence[int], cap: int = 64) -> set[tuple[int, ...]]:
    """All gamma != 0 with 0 <= gamma <= v and t(gamma) C gamma <= 2."""
    if sum(v) > cap:
        raise ValueError(f"root box too large (sum {sum(v)} > cap {cap})")
    c = g.cartan()
    roots = set()

    def norm(gamma):
        return sum(gamma[i] * c[i][j] * gamma[j] for i in range(g.n) for j in range(g.n))

    def rec(prefix):
        if len(prefix) == g.n:
            if any(prefix) and norm(prefix) <= 2:
                roots.add(tuple(prefix))
            return
        for k in range(v[len(prefix)] + 1):
            rec(prefix + [k])

    rec([])
    return roots


@dataclass(frozen=True)
class Parameter:
    """A pair (xi, zeta_c) of I-indexed integer and rational tuples."""

    xi: tuple
    zeta_c: tuple

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(self.xi))
        object.__setattr__(self, "zeta_c", tuple(Fraction(z) for z in self.zeta_c))
        assert len(self.xi) == len(self.zeta_c)


def is_generic(g: Graph, param: Parameter, v: Sequence[int], cap: int = 64) -> bool:
    roots = positive_roots_bounded(g, v, cap)
    if all(sum(x * gm for x, gm in zip(param.xi, gamma)) != 0 for gamma in roots):
        return True
    if all(sum(z * gm for z, gm in zip(param.zeta_c, gamma)) != 0 for gamma in roots):
        return True
    return False


# ---------------------------------------------------------------------------
# Weyl group enumeration (Dynkin case)


def _weight_matrix(g: Graph, i: int) -> tuple:
    c = g.cartan()
    n = g.n
    rows = []
    for j in range(n):
        row = [1 if j == k else 0 for k in range(n)]
        row[i] -= c[j][i]
        rows.append(tuple(row))
    return tuple(rows)


def _mat_mul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def enumerate_weyl(g: Graph, length_cap: int | None = None) -> dict[tuple, tuple[int, ...]]:
    """Map each group element (weight-action matrix) to a shortest word.

    Breadth-first search from the identity; requires a Dynkin graph unless a
    length cap bounds the search.
    """
    if length_cap is None:
        if not g.is_dynkin():
            raise ValueError("infinite Weyl group; supply length_cap")
        length_cap = 10 ** 9
    gens = [_weight_matrix(g, i) for i in range(g.n)]
    ident = tuple(tuple(1 if r == c else 0 for c in range(g.n)) for r in range(g.n))
    seen: dict[tuple, tuple[int, ...]] = {ident: ()}
    frontier = deque([ident])
    while frontier:
        m = frontier.popleft()
        word = seen[m]
        if len(word) >= length_cap:
            continue
        for i in range(g.n):
            nm = _mat_mul(gens[i], m)  # append letter i: acts after the word so far
            if nm not in seen:
                seen[nm] = word + (i,)
                frontier.append(nm)
    return seen


def longest_element(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced word for w0 and the involution theta with w0(alpha_i) = -alpha_theta(i)."""
    if not g.is_dynkin():
        raise ValueError("longest element requires a Dynkin graph")
    elements = enumerate_weyl(g)
    word = max(elements.values(), key=len)
    theta = []
    for i in range(g.n):
        e_i = tuple(1 if j == i else 0 for j in range(g.n))
        img = root_reflect_word(g, word, e_i)
        neg = tuple(-x for x in img)
        matches = [j for j in range(g.n) if neg == tuple(1 if k == j else 0 for k in range(g.n))]
        assert len(matches) == 1, "w0 does not send alpha_i to a negative simple root"
        theta.append(matches[0])
    return word, tuple(theta)


# ---------------------------------------------------------------------------
# Diagram automorphisms


@dataclass(frozen=True)
class DiagramAuto:
    """Graph automorphism with eps(a(h)) = c * eps(h) for a fixed sign c."""

    vertex_perm: tuple[int, ...]
    arrow_perm: tuple[int, ...]
    c: int

    def apply_vertex(self, i: int) -> int:
        return self.vertex_perm[i]

    def inverse_vertex(self, i: int) -> int:
        return self.vertex_perm.index(i)

    def apply_arrow_index(self, h: int) -> int:
        return self.arrow_perm[h]

    def inverse_arrow_index(self, h: int) -> int:
        return self.arrow_perm.index(h)

    def order(self) -> int:
        k = 1
        perm = self.vertex_perm
        cur = perm
        ident = tuple(range(len(perm)))
        while cur != ident:
            cur = tuple(perm[x] for x in cur)
            k += 1
        return k

    def apply_dimvec(self, vec: Sequence) -> tuple:
        """a(v)_i = v_{a^{-1}(i)}."""
        return tuple(vec[self.inverse_vertex(i)] for i in range(len(self.vertex_perm)))

    def inverse(self) -> "DiagramAuto":
        n = len(self.vertex_perm)
        vp = tuple(self.vertex_perm.index(i) for i in range(n))
        ap = tuple(self.arrow_perm.index(h) for h in range(len(self.arrow_perm)))
        return DiagramAuto(vp, ap, self.c)


def diagram_auto(g: Graph, vertex_perm: Sequence[int]) -> DiagramAuto:
    """Build the automorphism induced by a vertex permutation; validates signs.

    The arrow permutation is forced (simple edges); c is recomputed from
    eps(a(h)) = c * eps(h) and must be consistent across all arrows.
    """
    vp = tuple(vertex_perm)
    assert sorted(vp) == list(range(g.n)), "not a permutation"
    arrow_perm = []
    cs = set()
    for h in g.arrows:
        candidates = [
            h2 for h2 in g.arrows if h2.start == vp[h.start] and h2.end == vp[h.end]
        ]
        if len(candidates) != 1:
            raise ValueError("vertex permutation is not a graph automorphism (or multi-edge)")
        img = candidates[0]
        arrow_perm.append(img.index)
        cs.add(img.eps * h.eps)  # eps in {+-1} so this is eps(a(h))/eps(h)
    if len(cs) != 1:
        raise ValueError("orientation signs are not uniformly rescaled by the automorphism")
    return DiagramAuto(vp, tuple(arrow_perm), cs.pop())


def identity_auto(g: Graph) -> DiagramAuto:
    return DiagramAuto(tuple(range(g.n)), tuple(range(len(g.arrows))), 1)


def fixed_subgroup_scan(
    g: Graph, omega: Sequence[int], auto: DiagramAuto, length_cap: int | None = None
) -> list[tuple[int, ...]]:
    """All x in W with x omega = omega x and a(x) = x, as shortest words."""
    elements = enumerate_weyl(g, length_cap)
    m_omega = tuple(tuple(r) for r in _word_matrix(g, omega))
    perm = auto.vertex_perm
    out = []
    for mat, word in elements.items():
        if _mat_mul(mat, m_omega) != _mat_mul(m_omega, mat):
            continue
        conj = tuple(
            tuple(mat[perm.index(r)][perm.index(c)] for c in range(g.n)) for r in range(g.n)
        )
        if conj != mat:
            continue
        out.append(word)
    return sorted(out, key=lambda w: (len(w), w))


def _word_matrix(g: Graph, word: Sequence[int]) -> tuple:
    m = tuple(tuple(1 if r == c else 0 for c in range(g.n)) for r in range(g.n))
    for i in word:
        m = _mat_mul(_weight_matrix(g, i), m)
    return m


# ---------------------------------------------------------------------------
# Satake lookup (fixed-point subalgebras, diagrams without black vertices)

_SATAKE_NOTES = {
    # (family, parity or None, a_order) -> (k description template, Satake type)
    ("A", 0, 1): ("sl_{p} + gl_{p+1}", "AIII"),  # ell = 2p
    ("A", 1, 1): ("sl_{p} + gl_{p}", "AIII"),  # ell = 2p - 1
    ("A", None, 2): ("so_{ell+1}", "AI"),
    ("D", 1, 1): ("so_{ell-1} + so_{ell+1}", "DI"),  # ell odd
    ("D", 0, 1): ("so_{ell} + so_{ell}", "DI"),  # ell even
    ("D", 1, 2): ("so_{ell} + so_{ell}", "DI"),
    ("D", 0, 2): ("so_{ell-1} + so_{ell+1}", "DI"),
    ("E", 6, 1): ("sl_2 + sl_6", "EII"),
    ("E", 6, 2): ("sp_4", "EI"),
    ("E", 7, 1): ("sl_8", "EV"),
    ("E", 8, 1): ("so_16", "EVIII"),
}


def satake_lookup(family: str, ell: int, a_order: int) -> tuple[str, str]:
    """Fixed-point subalgebra and Satake type for (Gamma, |a|)."""
    if family == "A":
        if a_order == 1:
            template, typ = _SATAKE_NOTES[("A", ell % 2, 1)]
            p = ell // 2 if ell % 2 == 0 else (ell + 1) // 2
            return template.replace("{p}", str(p)).replace("{p+1}", str(p + 1)), typ
        if a_order == 2:
            template, typ = _SATAKE_NOTES[("A", None, 2)]
            return template.replace("{ell+1}", str(ell + 1)), typ
    if family == "D":
        key = ("D", ell % 2, a_order)
        if key in _SATAKE_NOTES:
            template, typ = _SATAKE_NOTES[key]
            out = (
                template.replace("{ell-1}", str(ell - 1))
                .replace("{ell+1}", str(ell + 1))
                .replace("{ell}", str(ell))
            )
            return out, typ
    if family == "E":
        key = ("E", ell, a_order)
        if key in _SATAKE_NOTES:
            return _SATAKE_NOTES[key]
    raise KeyError(f"no entry for ({family}_{ell}, |a|={a_order})")
