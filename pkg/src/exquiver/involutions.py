"""Transpose-type automorphisms of M(v, w).

tau sends (x_h, p, q) to (eps(h) x*_{hbar}, -q*, p*); tau_hat drops the signs.
Adjoints are taken with respect to chosen nondegenerate forms on the V_i and
W_i.  The diagram map acts by relabelling with the sign eps(h)^{(1-c)/2}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DiagramAuto
from .linalg import Form, QMatrix, Subspace, right_adjoint, standard_form
from .points import RepPoint


@dataclass(frozen=True)
class InvolutionConfig:
    forms_v: tuple[Form, ...]
    forms_w: tuple[Form, ...]
    mode: str = "tau"  # "tau" | "tau_hat"

    def check_shapes(self, pt: RepPoint):
        assert len(self.forms_v) == pt.graph.n and len(self.forms_w) == pt.graph.n
        for i in range(pt.graph.n):
            assert self.forms_v[i].gram.rows == pt.v[i]
            assert self.forms_w[i].gram.rows == pt.w[i]


def standard_config(v, w, delta_v=1, delta_w=1, mode: str = "tau") -> InvolutionConfig:
    """Identity / split-symplectic forms per vertex; deltas may be per-vertex."""
    n = len(v)
    dv = list(delta_v) if not isinstance(delta_v, int) else [delta_v] * n
    dw = list(delta_w) if not isinstance(delta_w, int) else [delta_w] * n
    return InvolutionConfig(
        tuple(standard_form(v[i], dv[i]) for i in range(n)),
        tuple(standard_form(w[i], dw[i]) for i in range(n)),
        mode,
    )


def _adjoints(pt: RepPoint, cfg: InvolutionConfig):
    """x*_{hbar} re-indexed by h, plus p_i* and q_i*."""
    g = pt.graph
    x_star = {}
    for h in g.arrows:
        hbar = g.arrows[h.bar]
        x_star[h.index] = right_adjoint(
            pt.x[h.bar], cfg.forms_v[hbar.start], cfg.forms_v[hbar.end]
        )
    p_star = [right_adjoint(pt.p[i], cfg.forms_w[i], cfg.forms_v[i]) for i in range(g.n)]
    q_star = [right_adjoint(pt.q[i], cfg.forms_v[i], cfg.forms_w[i]) for i in range(g.n)]
    return x_star, p_star, q_star


def tau(pt: RepPoint, cfg: InvolutionConfig) -> RepPoint:
    assert cfg.mode == "tau"
    cfg.check_shapes(pt)
    x_star, p_star, q_star = _adjoints(pt, cfg)
    x = {h.index: x_star[h.index].scale(h.eps) for h in pt.graph.arrows}
    p = [m.scale(-1) for m in q_star]
    return RepPoint(pt.graph, pt.v, pt.w, x, p, p_star)


def tau_hat(pt: RepPoint, cfg: InvolutionConfig) -> RepPoint:
    assert cfg.mode == "tau_hat"
    cfg.check_shapes(pt)
    x_star, p_star, q_star = _adjoints(pt, cfg)
    return RepPoint(pt.graph, pt.v, pt.w, x_star, q_star, p_star)


def diagram_apply(auto: DiagramAuto, pt: RepPoint) -> RepPoint:
    """Relabel a point along a diagram automorphism.

    Output lives on (a(v), a(w)); an arrow entry picks up the sign eps(h)
    exactly when the automorphism reverses orientations (c = -1).
    """
    g = pt.graph
    v = auto.apply_dimvec(pt.v)
    w = auto.apply_dimvec(pt.w)
    x = {}
    for h in g.arrows:
        src = pt.x[auto.inverse_arrow_index(h.index)]
        x[h.index] = src if auto.c == 1 else src.scale(h.eps)
    p = [pt.p[auto.inverse_vertex(i)] for i in range(g.n)]
    q = [pt.q[auto.inverse_vertex(i)] for i in range(g.n)]
    return RepPoint(g, v, w, x, p, q)


def flag_sigma1(
    x: QMatrix, flag: list[Subspace], form_w: Form, mode: str = "sigma"
) -> tuple[QMatrix, list[Subspace]]:
    """(x, F) -> (-x*, F-perp) on n-step flags in W; mode sigma_hat keeps +x*.

    Input must satisfy x(F_k) <= F_{k+1} with F_0 = W and F_{n+1} = 0; the
    output then satisfies it too, with the perp flag read in reversed order.
    """
    n_amb = form_w.gram.rows
    assert x.shape == (n_amb, n_amb)
    chain = [Subspace.full(n_amb)] + list(flag) + [Subspace.zero(n_amb)]
    for k in range(len(chain) - 1):
        if not chain[k + 1].contains(chain[k].image_under(x)):
            raise ValueError("flag is not preserved by x")
    x_adj = right_adjoint(x, form_w, form_w)
    if mode == "sigma":
        x_adj = x_adj.scale(-1)
    else:
        assert mode == "sigma_hat"
    perp = [f.orthogonal_complement(form_w) for f in reversed(flag)]
    return x_adj, perp
