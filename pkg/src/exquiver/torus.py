"""Fixed-point combinatorics for one-parameter framing tori.

Splitting the framing into a fixed block plus weight +-1 partner blocks cuts
the fixed locus into pieces indexed by dimension vectors: the middle piece
must be self-mirrored under (diagram automorphism) . (longest star action),
and each partner block contributes a vector together with its mirror.  The
rank-2 chamber fan records which walls a cocharacter path crosses and whether
each crossing is of reflection type K (a coordinate wall) or R (a difference
or sum wall).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graphs import DiagramAuto, Graph, weyl_star_word


@dataclass(frozen=True)
class ModelDecomp:
    v1: tuple[int, ...]
    v2: tuple[int, ...]


def _mirror(g: Graph, a: DiagramAuto, word, vec, frame) -> tuple[int, ...]:
    return a.apply_dimvec(weyl_star_word(g, word, vec, frame))


def _box(v):
    return itertools.product(*(range(x + 1) for x in v))


def _check_blocks(g: Graph, a: DiagramAuto, w1, blocks):
    n = g.n
    named = [("w1", tuple(w1))] + [(f"w{i + 2}", tuple(b)) for i, b in enumerate(blocks)]
    for name, vec in named:
        if len(vec) != n or any(x < 0 for x in vec):
            raise ValueError(f"{name} must have {n} nonnegative entries")
    if a.apply_dimvec(tuple(w1)) != tuple(w1):
        raise ValueError("w1 is not stable under the diagram automorphism")
    w = tuple(w1[i] + 2 * sum(b[i] for b in blocks) for i in range(n))
    if a.apply_dimvec(w) != w:
        raise ValueError("w is not stable under the diagram automorphism")


def enumerate_models(g: Graph, a: DiagramAuto, omega_word, v, w1, w2) -> list[ModelDecomp]:
    """All (v1, v2) with v1 self-mirrored over w1 and v1 + v2 + mirror(v2) = v.

    Plain box scan with 0 <= v1, v2 <= v entrywise; mirrors with a negative
    entry are discarded since they bound no bundle.
    """
    _check_blocks(g, a, w1, (w2,))
    v = tuple(v)
    out = []
    for v1 in _box(v):
        if _mirror(g, a, omega_word, v1, w1) != v1:
            continue
        for v2 in _box(v):
            v3 = _mirror(g, a, omega_word, v2, w2)
            if any(x < 0 for x in v3):
                continue
            if tuple(v1[i] + v2[i] + v3[i] for i in range(g.n)) == v:
                out.append(ModelDecomp(v1, v2))
    return out


def enumerate_models_multi(
    g: Graph, a: DiagramAuto, omega_word, v, w1, blocks: Sequence
) -> list[tuple[tuple[int, ...], ...]]:
    """Tuples (v1, v2, ..., vm), one entry per partner block, summing to v."""
    blocks = tuple(tuple(b) for b in blocks)
    _check_blocks(g, a, w1, blocks)
    v = tuple(v)
    n = g.n
    out = []
    for v1 in _box(v):
        if _mirror(g, a, omega_word, v1, w1) != v1:
            continue
        for choice in itertools.product(tuple(_box(v)), repeat=len(blocks)):
            total = list(v1)
            ok = True
            for vec, frame in zip(choice, blocks):
                mir = _mirror(g, a, omega_word, vec, frame)
                if any(x < 0 for x in mir):
                    ok = False
                    break
                for i in range(n):
                    total[i] += vec[i] + mir[i]
            if ok and tuple(total) == v:
                out.append((v1,) + choice)
    return out


# ---------------------------------------------------------------------------
# Rank-2 cocharacter chambers


@dataclass(frozen=True)
class Wall:
    name: str
    kind: str  # "K" for a coordinate wall, "R" for a sum/difference wall
    normal: tuple[int, int]

    def side(self, point) -> int:
        s = self.normal[0] * point[0] + self.normal[1] * point[1]
        return (s > 0) - (s < 0)


@dataclass(frozen=True)
class Chamber:
    signs: tuple[int, ...]  # one sign per wall, in fan order
    representative: tuple[int, int]


@dataclass(frozen=True)
class ChamberFan:
    walls: tuple[Wall, ...]
    chambers: tuple[Chamber, ...]  # counterclockwise

    def opposite(self, k: int) -> int:
        return (k + len(self.chambers) // 2) % len(self.chambers)

    def crossings(self, start: int, end: int) -> list[Wall]:
        """Walls met walking counterclockwise from chamber start to end."""
        out = []
        k = start
        while k != end:
            nxt = (k + 1) % len(self.chambers)
            diff = [
                wall
                for wall, s1, s2 in zip(
                    self.walls, self.chambers[k].signs, self.chambers[nxt].signs
                )
                if s1 != s2
            ]
            assert len(diff) == 1, "consecutive chambers must share all walls but one"
            out.append(diff[0])
            k = nxt
        return out


def rank2_chambers() -> ChamberFan:
    """The four walls a1, a2, a1 - a2, a1 + a2 and the eight sectors between."""
    walls = (
        Wall("a1", "K", (1, 0)),
        Wall("a2", "K", (0, 1)),
        Wall("a1-a2", "R", (1, -1)),
        Wall("a1+a2", "R", (1, 1)),
    )
    reps = [(2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1), (-1, -2), (1, -2), (2, -1)]
    chambers = tuple(Chamber(tuple(w.side(r) for w in walls), r) for r in reps)
    assert len({c.signs for c in chambers}) == len(chambers)
    return ChamberFan(walls, chambers)
