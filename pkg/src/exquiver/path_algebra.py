"""Finite evaluation tables of the path model attached to (w, zeta_c).

A table pi' assigns to every composable arrow sequence f = (h_1, ..., h_s)
(h_1 applied first) the matrix q_{i(h_s)} x_{h_s} ... x_{h_1} p_{o(h_1)} in
Hom(W_{o(f)}, W_{i(f)}), and to every lazy path [i] the matrix q_i p_i.  The
defining relations splice theta_{i,zeta} = sum_{i(h)=i} eps(h) h hbar
- zeta^(i) [i] into products at each junction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import DiagramAuto, Graph, weyl_reflect, weyl_reflect_word
from .linalg import Form, QMatrix, right_adjoint
from .points import GroupElem, RepPoint, moment_map


@dataclass(frozen=True)
class Path:
    arrows: tuple[int, ...] = ()
    vertex: int | None = None  # set exactly for lazy paths

    @staticmethod
    def lazy(i: int) -> "Path":
        return Path((), i)

    @staticmethod
    def of(arrows) -> "Path":
        arrows = tuple(arrows)
        assert arrows
        return Path(arrows, None)

    def is_lazy(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)


def path_source(g: Graph, f: Path) -> int:
    return f.vertex if f.is_lazy() else g.arrows[f.arrows[0]].start


def path_target(g: Graph, f: Path) -> int:
    return f.vertex if f.is_lazy() else g.arrows[f.arrows[-1]].end


def path_valid(g: Graph, f: Path) -> bool:
    if f.is_lazy():
        return f.vertex is not None and 0 <= f.vertex < g.n
    if f.vertex is not None:
        return False
    for k in range(len(f.arrows) - 1):
        if g.arrows[f.arrows[k]].end != g.arrows[f.arrows[k + 1]].start:
            return False
    return True


def path_sign(g: Graph, f: Path) -> int:
    sign = 1
    for a in f.arrows:
        sign *= g.arrows[a].eps
    return sign


def reverse_path(g: Graph, f: Path) -> Path:
    if f.is_lazy():
        return f
    return Path.of(tuple(g.arrows[a].bar for a in reversed(f.arrows)))


def concat_paths(g: Graph, *parts: Path) -> Path:
    arrows: list[int] = []
    at = None
    for part in parts:
        if at is not None:
            assert path_source(g, part) == at
        arrows.extend(part.arrows)
        at = path_target(g, part)
    if arrows:
        return Path.of(arrows)
    return Path.lazy(parts[0].vertex)


def enumerate_paths(g: Graph, depth: int) -> list[Path]:
    out = [Path.lazy(i) for i in range(g.n)]
    frontier = [(h.index,) for h in g.arrows]
    while frontier and len(frontier[0]) <= depth:
        out.extend(Path.of(t) for t in frontier)
        if len(frontier[0]) == depth:
            break
        frontier = [
            t + (h.index,)
            for t in frontier
            for h in g.arrows_out_of(g.arrows[t[-1]].end)
        ]
    return out


def theta_element(g: Graph, i: int, zeta_c) -> list[tuple[Fraction, Path]]:
    """theta_{i, zeta} as coefficient/path pairs; each loop leaves i via hbar."""
    terms = [
        (Fraction(h.eps), Path.of((h.bar, h.index)))
        for h in g.arrows_into(i)
    ]
    terms.append((-Fraction(zeta_c[i]), Path.lazy(i)))
    return terms


@dataclass
class PathEval:
    graph: Graph
    w: tuple[int, ...]
    zeta_c: tuple[Fraction, ...]
    depth: int
    table: dict[Path, QMatrix]

    def __post_init__(self):
        self.w = tuple(self.w)
        self.zeta_c = tuple(Fraction(z) for z in self.zeta_c)

    def value(self, f: Path) -> QMatrix:
        return self.table[f]

    def __eq__(self, other):
        if not isinstance(other, PathEval):
            return NotImplemented
        return (
            self.w == other.w
            and self.zeta_c == other.zeta_c
            and self.table == other.table
        )


def default_depth(v) -> int:
    return 2 * sum(v) + 2


def eval_from_point(pt: RepPoint, depth: int | None = None, zeta_c=None) -> PathEval:
    """Immerse a moment-fibre point into a path table of the given depth."""
    g = pt.graph
    if depth is None:
        depth = default_depth(pt.v)
    mu = moment_map(pt)
    derived = []
    for i in range(g.n):
        value = mu[i].data[0][0] if pt.v[i] else Fraction(0)
        if mu[i] != QMatrix.identity(pt.v[i]).scale(value):
            raise ValueError("moment map is not scalar: point not in any fibre")
        derived.append(value)
    if zeta_c is None:
        zeta_c = derived
    else:
        for i in range(g.n):
            if pt.v[i] and Fraction(zeta_c[i]) != derived[i]:
                raise ValueError("declared parameter disagrees with the moment map")
    table: dict[Path, QMatrix] = {}
    for f in enumerate_paths(g, depth):
        if f.is_lazy():
            table[f] = pt.q[f.vertex] @ pt.p[f.vertex]
        else:
            acc = pt.p[path_source(g, f)]
            for a in f.arrows:
                acc = pt.x[a] @ acc
            table[f] = pt.q[path_target(g, f)] @ acc
    pe = PathEval(g, pt.w, tuple(Fraction(z) for z in zeta_c), depth, table)
    check_relations(pe)
    return pe


def check_relations(pe: PathEval, raise_on_fail: bool = True) -> bool:
    """pi'(f) pi'(f') = pi'(f . theta . f') for all checkable junctions."""
    g = pe.graph
    paths = list(pe.table)
    by_source: dict[int, list[Path]] = {}
    for f in paths:
        by_source.setdefault(path_source(g, f), []).append(f)
    for first in paths:  # applied first
        junction = path_target(g, first)
        inserts = theta_element(g, junction, pe.zeta_c)
        for second in by_source.get(junction, []):
            if len(first) + len(second) + 2 > pe.depth:
                continue
            lhs = pe.table[second] @ pe.table[first]
            rhs = QMatrix.zeros(lhs.rows, lhs.cols)
            for coeff, mid in inserts:
                spliced = concat_paths(g, first, mid, second)
                rhs = rhs + pe.table[spliced].scale(coeff)
            if lhs != rhs:
                if raise_on_fail:
                    raise ValueError(
                        f"defining relation fails at junction {junction}: {first} * {second}"
                    )
                return False
    return True


def tau0(pe: PathEval, forms_w: tuple[Form, ...]) -> PathEval:
    """f -> -eps(f) pi'(fbar)*, landing over -zeta_c."""
    g = pe.graph
    table = {}
    for f, _val in pe.table.items():
        rev = pe.table[reverse_path(g, f)]
        adj = right_adjoint(rev, forms_w[path_target(g, f)], forms_w[path_source(g, f)])
        table[f] = adj.scale(-path_sign(g, f))
    return PathEval(g, pe.w, tuple(-z for z in pe.zeta_c), pe.depth, table)


def theta_a(pe: PathEval, auto: DiagramAuto) -> PathEval:
    """Relabel along a diagram automorphism, with the eps(f) sign when c = -1."""
    g = pe.graph

    def push(f: Path) -> Path:
        if f.is_lazy():
            return Path.lazy(auto.apply_vertex(f.vertex))
        return Path.of(tuple(auto.apply_arrow_index(a) for a in f.arrows))

    table = {}
    for f in pe.table:
        val = pe.table[push(f)]
        table[f] = val if auto.c == 1 else val.scale(path_sign(g, f))
    w_new = tuple(pe.w[auto.apply_vertex(i)] for i in range(g.n))
    zeta_new = tuple(pe.zeta_c[auto.apply_vertex(i)] for i in range(g.n))
    return PathEval(g, w_new, zeta_new, pe.depth, table)


def lusztig_reflect(pe: PathEval, i: int) -> PathEval:
    """Reflection at vertex i directly on tables.

    Only immediate returns through i contribute: positions k with
    i(h_k) = i and h_{k+1} = hbar_k get the factor -eps(h_k) zeta^(i) with the
    pair dropped; the lazy value at i is shifted by zeta^(i).
    """
    g = pe.graph
    shift = pe.zeta_c[i]
    table = {}
    for f, val in pe.table.items():
        if f.is_lazy():
            table[f] = val + QMatrix.identity(pe.w[i]).scale(shift) if f.vertex == i else val
            continue
        arrows = f.arrows
        bounces = [
            k
            for k in range(len(arrows) - 1)
            if g.arrows[arrows[k]].end == i and arrows[k + 1] == g.arrows[arrows[k]].bar
        ]
        acc = QMatrix.zeros(val.rows, val.cols)
        for r in range(len(bounces) + 1):
            for chosen in itertools.combinations(bounces, r):
                coeff = Fraction(1)
                dropped = set()
                for k in chosen:
                    coeff *= -g.arrows[arrows[k]].eps * shift
                    dropped.update((k, k + 1))
                kept = tuple(a for idx, a in enumerate(arrows) if idx not in dropped)
                key = Path.of(kept) if kept else Path.lazy(path_source(g, f))
                acc = acc + pe.table[key].scale(coeff)
        table[f] = acc
    return PathEval(g, pe.w, weyl_reflect(g, i, pe.zeta_c), pe.depth, table)


def lusztig_reflect_word(pe: PathEval, word) -> PathEval:
    for i in word:
        pe = lusztig_reflect(pe, i)
    return pe


def gw_action(ge: GroupElem, pe: PathEval) -> PathEval:
    g = pe.graph
    inv = [b.inverse() for b in ge.blocks]
    table = {
        f: ge.blocks[path_target(g, f)] @ val @ inv[path_source(g, f)]
        for f, val in pe.table.items()
    }
    return PathEval(g, pe.w, pe.zeta_c, pe.depth, table)


def sigma0(pe: PathEval, omega, auto: DiagramAuto, forms_w: tuple[Form, ...]) -> PathEval:
    """sigma_0 = S_omega o Theta_a o tau_0."""
    return lusztig_reflect_word(theta_a(tau0(pe, forms_w), auto), omega)


def sigma0_compatibility(pe: PathEval, omega, auto: DiagramAuto) -> list[str]:
    g = pe.graph
    failures = []
    w_moved = tuple(pe.w[auto.apply_vertex(i)] for i in range(g.n))
    if w_moved != pe.w:
        failures.append("framing: a^{-1}(w) != w")
    zeta = tuple(-pe.zeta_c[auto.apply_vertex(i)] for i in range(g.n))
    if weyl_reflect_word(g, omega, zeta) != pe.zeta_c:
        failures.append("parameter: -omega(a^{-1}(zeta)) != zeta")
    return failures


def is_sigma0_fixed(pe: PathEval, omega, auto: DiagramAuto, forms_w) -> bool:
    failures = sigma0_compatibility(pe, omega, auto)
    if failures:
        raise ValueError("; ".join(failures))
    return sigma0(pe, omega, auto, forms_w) == pe
