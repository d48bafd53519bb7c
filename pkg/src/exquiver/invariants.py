"""Trace and framed-composite invariants and their isometry checks.

The two generator families are traces around cycles, trace(x_{h_s}... x_{h_1}),
and linear functionals of framed composites q_{i(h_s)} x_{h_s} ... x_{h_1}
p_{o(h_1)}.  Both are unchanged under any simultaneous change of basis, so the
isometry content only appears on involution-fixed points: there the reverse
arrows and the q's are determined by the forms, and check_invariance evaluates
the generators through that reconstruction, which moves exactly when the
sampled blocks fail to be isometries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .involutions import InvolutionConfig, standard_config, tau, tau_hat
from .linalg import QMatrix, right_adjoint, sample_isometry
from .path_algebra import Path, enumerate_paths, path_source, path_target, path_valid
from .points import GroupElem, RepPoint, act_gv


def trace_cycle(pt: RepPoint, cycle: Path) -> Fraction:
    """trace(x_{h_s} ... x_{h_1}) around a closed composable arrow sequence."""
    g = pt.graph
    if not path_valid(g, cycle):
        raise ValueError("arrows do not compose")
    if path_source(g, cycle) != path_target(g, cycle):
        raise ValueError("sequence is not closed")
    i = path_source(g, cycle)
    acc = QMatrix.identity(pt.v[i])
    for a in cycle.arrows:
        acc = pt.x[a] @ acc
    return acc.trace()


def framed_composite(pt: RepPoint, path: Path) -> QMatrix:
    """q_{i(h_s)} x_{h_s} ... x_{h_1} p_{o(h_1)} as a map W_src -> W_tgt."""
    g = pt.graph
    if not path_valid(g, path):
        raise ValueError("arrows do not compose")
    src, tgt = path_source(g, path), path_target(g, path)
    acc = pt.p[src]
    for a in path.arrows:
        acc = pt.x[a] @ acc
    return pt.q[tgt] @ acc


def chi_path(pt: RepPoint, path: Path, chi: QMatrix) -> Fraction:
    """chi applied to the framed composite; chi is a (w_src x w_tgt) pairing.

    chi = identity recovers the trace; chi an elementary matrix picks out a
    single entry of the composite.
    """
    comp = framed_composite(pt, path)
    if chi.shape != (comp.cols, comp.rows):
        raise ValueError("pairing shape does not match the composite")
    return (chi @ comp).trace()


# ---------------------------------------------------------------------------
# Reduced coordinates on involution-fixed points


def alternating_config(graph, v, w, mode: str = "tau", flip: bool = False) -> InvolutionConfig:
    """Forms with signs alternating across every edge and opposite on W.

    Vertices are 2-coloured by breadth-first parity; delta_v is +1 on one
    colour class and -1 on the other (flip swaps them), and delta_w = -delta_v
    vertexwise.  Raises when the graph has an odd cycle or a -1 vertex has
    odd dimension.
    """
    colour = [None] * graph.n
    for root in range(graph.n):
        if colour[root] is not None:
            continue
        colour[root] = 0
        queue = [root]
        while queue:
            i = queue.pop()
            for h in graph.arrows_out_of(i):
                j = h.end
                if colour[j] is None:
                    colour[j] = 1 - colour[i]
                    queue.append(j)
                elif colour[j] == colour[i]:
                    raise ValueError("graph has an odd cycle; no alternating signs")
    base = -1 if flip else +1
    delta_v = tuple(base if c == 0 else -base for c in colour)
    delta_w = tuple(-d for d in delta_v)
    return standard_config(v, w, delta_v, delta_w, mode)


def reform_fixed(pt: RepPoint, cfg: InvolutionConfig) -> RepPoint:
    """Rebuild a point from its reduced coordinates (forward x's and p).

    Reverse-arrow entries and q are recomputed via the form adjoints exactly
    as the fixed-point equations prescribe; on involution-fixed points this
    is the identity map.
    """
    g = pt.graph
    x = {}
    for h in g.arrows:
        if h.index < h.bar:
            x[h.index] = pt.x[h.index]
    for h in g.arrows:
        if h.index > h.bar:
            partner = g.arrows[h.bar]
            adj = right_adjoint(
                pt.x[h.bar], cfg.forms_v[partner.start], cfg.forms_v[partner.end]
            )
            x[h.index] = adj.scale(h.eps) if cfg.mode == "tau" else adj
    q = [right_adjoint(pt.p[i], cfg.forms_w[i], cfg.forms_v[i]) for i in range(g.n)]
    return RepPoint(g, pt.v, pt.w, x, [m.copy() for m in pt.p], q)


def symmetrize_fixed(pt: RepPoint, cfg: InvolutionConfig) -> RepPoint:
    """The involution-fixed average (pt + invol(pt))/2.

    Requires the square of the involution to be the identity on points, which
    holds for tau with edge-alternating delta_v, delta_w = -delta_v and for
    tau_hat with uniform signs.
    """
    other = tau(pt, cfg) if cfg.mode == "tau" else tau_hat(pt, cfg)
    half = Fraction(1, 2)
    x = {k: (pt.x[k] + other.x[k]).scale(half) for k in pt.x}
    p = [(a + b).scale(half) for a, b in zip(pt.p, other.p)]
    q = [(a + b).scale(half) for a, b in zip(pt.q, other.q)]
    return RepPoint(pt.graph, pt.v, pt.w, x, p, q)


# ---------------------------------------------------------------------------
# Invariance check


def generator_family(pt: RepPoint, max_len: int = 3) -> tuple[list[Path], list[Path]]:
    """(cycles, framed paths) up to max_len arrows; framed paths skip 0-dim W ends."""
    g = pt.graph
    cycles, paths = [], []
    for f in enumerate_paths(g, max_len):
        src, tgt = path_source(g, f), path_target(g, f)
        if not f.is_lazy() and src == tgt:
            cycles.append(f)
        if pt.w[src] and pt.w[tgt]:
            paths.append(f)
    return cycles, paths


@dataclass
class InvarianceReport:
    seed: int
    num_samples: int
    num_cycles: int
    num_paths: int
    involution_fixed: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.involution_fixed and not self.violations


def _compare(pt, moved, cycles, paths, base_tr, base_comp, label, violations):
    for c, val in zip(cycles, base_tr):
        if trace_cycle(moved, c) != val:
            violations.append(f"{label}: trace changed on cycle {c.arrows}")
    for f, mat in zip(paths, base_comp):
        if framed_composite(moved, f) != mat:
            name = f.arrows if f.arrows else (f.vertex,)
            violations.append(f"{label}: framed composite changed on path {name}")


def check_invariance(
    pt: RepPoint,
    num_samples: int = 20,
    seed: int = 0,
    cfg: InvolutionConfig | None = None,
    max_len: int = 3,
) -> InvarianceReport:
    """Sample isometry blocks per vertex and verify all generators are unchanged.

    The sampled action moves the reduced coordinates and reconstructs the
    point through the forms (reform_fixed); for genuine isometries this
    agrees with the plain change-of-basis action, so on involution-fixed
    input every generator must keep its exact value.  Violations are listed
    in the report rather than raised.
    """
    g = pt.graph
    if cfg is None:
        cfg = alternating_config(g, pt.v, pt.w)
    fixed_img = tau(pt, cfg) if cfg.mode == "tau" else tau_hat(pt, cfg)
    cycles, paths = generator_family(pt, max_len)
    base_tr = [trace_cycle(pt, c) for c in cycles]
    base_comp = [framed_composite(pt, f) for f in paths]
    report = InvarianceReport(seed, num_samples, len(cycles), len(paths), fixed_img == pt)
    rng = random.Random(seed)
    for s in range(num_samples):
        blocks = [sample_isometry(cfg.forms_v[i], rng) for i in range(g.n)]
        moved = reform_fixed(act_gv(GroupElem(blocks), pt), cfg)
        _compare(pt, moved, cycles, paths, base_tr, base_comp, f"sample {s}", report.violations)
    return report


def negative_control(
    pt: RepPoint, cfg: InvolutionConfig | None = None, max_len: int = 3
) -> bool:
    """True iff a deliberate non-isometry moves some generator value.

    Scales one basis vector at the first vertex of positive dimension by 2 --
    invertible, but not an isometry of any of the standard forms -- and
    reports whether any trace or framed composite changes through the
    reduced-coordinate reconstruction.  A False return means the fixture is
    too degenerate to certify anything.
    """
    g = pt.graph
    if cfg is None:
        cfg = alternating_config(g, pt.v, pt.w)
    target = next((i for i in range(g.n) if pt.v[i]), None)
    if target is None:
        return False
    blocks = [QMatrix.identity(pt.v[i]) for i in range(g.n)]
    stretched = QMatrix.identity(pt.v[target])
    stretched.data[0][0] = Fraction(2)
    blocks[target] = stretched
    moved = reform_fixed(act_gv(GroupElem(blocks), pt), cfg)
    cycles, paths = generator_family(pt, max_len)
    base_tr = [trace_cycle(pt, c) for c in cycles]
    base_comp = [framed_composite(pt, f) for f in paths]
    violations: list[str] = []
    _compare(pt, moved, cycles, paths, base_tr, base_comp, "control", violations)
    return bool(violations)
