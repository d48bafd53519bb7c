import random
from fractions import Fraction

import pytest

from exquiver.graphs import Graph, type_a_graph
from exquiver.linalg import QMatrix, Subspace
from exquiver.points import (
    GroupElem,
    RepPoint,
    act_gv,
    act_gw,
    flag_map,
    in_lambda,
    intertwiner,
    is_stable_negative,
    is_stable_positive,
    moment_map,
    sample_point,
    symplectic_pair,
    zero_point,
)


def a1_point():
    """w=2, v=1, p=(1 0), q=(0 1)^t; a nilpotent-flag workhorse."""
    g = type_a_graph(1)
    return RepPoint(
        g,
        (1,),
        (2,),
        {},
        [QMatrix([[1, 0]])],
        [QMatrix([[0], [1]])],
    )


def a2_mu0_point():
    """A_2 with composite y1 x1 nonzero and everything else zero."""
    g = type_a_graph(2)
    x = {0: QMatrix([[2], [0]]), 1: QMatrix([[1, 1]])}
    return RepPoint(
        g,
        (1, 2),
        (0, 0),
        x,
        [QMatrix.zeros(1, 0), QMatrix.zeros(2, 0)],
        [QMatrix.zeros(0, 1), QMatrix.zeros(0, 2)],
    )


def test_moment_map_zero_point():
    g = type_a_graph(2)
    pt = zero_point(g, (2, 1), (1, 1))
    assert all(m.is_zero() for m in moment_map(pt))


def test_moment_map_a1():
    mu = moment_map(a1_point())
    assert mu[0] == QMatrix.zeros(1, 1)


def test_moment_map_a2_composite():
    # at the tail vertex the only incoming arrow is y1 (eps +1), so
    # mu_1 = y1 x1; at the head it is -x1 y1.
    pt = a2_mu0_point()
    mu = moment_map(pt)
    y1x1 = pt.x[1] @ pt.x[0]
    x1y1 = pt.x[0] @ pt.x[1]
    assert mu[0] == y1x1
    assert mu[1] == x1y1.scale(-1)
    assert not mu[0].is_zero()


def test_in_lambda():
    g = type_a_graph(2)
    assert in_lambda(zero_point(g, (2, 1), (1, 1)), (0, 0))
    pt = a1_point()
    assert in_lambda(pt, (0,))
    assert not in_lambda(pt, (1,))


def test_symplectic_self_and_antisymmetry():
    g = type_a_graph(2)
    rng = random.Random(7)
    for _ in range(10):
        pt1 = sample_point(g, (2, 1), (1, 2), rng)
        pt2 = sample_point(g, (2, 1), (1, 2), rng)
        assert symplectic_pair(pt1, pt1) == 0
        assert symplectic_pair(pt1, pt2) == -symplectic_pair(pt2, pt1)


def test_symplectic_bilinear():
    g = type_a_graph(1)
    rng = random.Random(3)
    pt1 = sample_point(g, (2,), (2,), rng)
    pt2 = sample_point(g, (2,), (2,), rng)
    summed = RepPoint(
        g,
        pt1.v,
        pt1.w,
        {k: pt1.x[k] + pt2.x[k] for k in pt1.x},
        [a + b for a, b in zip(pt1.p, pt2.p)],
        [a + b for a, b in zip(pt1.q, pt2.q)],
    )
    probe = sample_point(g, (2,), (2,), rng)
    assert symplectic_pair(summed, probe) == symplectic_pair(pt1, probe) + symplectic_pair(
        pt2, probe
    )


def sample_group(g, dims, rng):
    blocks = []
    for d in dims:
        while True:
            m = QMatrix([[Fraction(rng.randint(-3, 3)) for _ in range(d)] for _ in range(d)], d, d)
            if m.is_invertible():
                blocks.append(m)
                break
    return GroupElem(blocks)


def test_action_identity_and_equivariance():
    g = type_a_graph(2)
    rng = random.Random(11)
    pt = sample_point(g, (2, 1), (1, 1), rng)
    assert act_gv(GroupElem.identity(pt.v), pt) == pt
    assert act_gw(GroupElem.identity(pt.w), pt) == pt
    for _ in range(5):
        ge = sample_group(g, pt.v, rng)
        mu = moment_map(pt)
        mu_after = moment_map(act_gv(ge, pt))
        for i in range(g.n):
            assert mu_after[i] == ge.blocks[i] @ mu[i] @ ge.blocks[i].inverse()


def test_actions_commute():
    g = type_a_graph(2)
    rng = random.Random(13)
    pt = sample_point(g, (2, 1), (2, 1), rng)
    ge = sample_group(g, pt.v, rng)
    fe = sample_group(g, pt.w, rng)
    assert act_gw(fe, act_gv(ge, pt)) == act_gv(ge, act_gw(fe, pt))


def test_stable_positive_a1():
    assert is_stable_positive(a1_point())
    g = type_a_graph(1)
    pt = zero_point(g, (1,), (2,))
    assert not is_stable_positive(pt)


def brute_force_stable_small(pt):
    """For v=(1,1): enumerate the four graded coordinate subspaces directly."""
    g = pt.graph
    verdict = True
    for keep0 in (0, 1):
        for keep1 in (0, 1):
            if keep0 == 0 and keep1 == 0:
                continue
            dims = (keep0, keep1)
            # subspace S_i = V_i if keep_i else 0
            inv = True
            for h in g.arrows:
                if dims[h.start] == 1 and dims[h.end] == 0 and not pt.x[h.index].is_zero():
                    inv = False
            in_ker = all(dims[i] == 0 or pt.q[i].is_zero() for i in range(g.n))
            if inv and in_ker:
                verdict = False
    return verdict


def test_stable_positive_a2_cross_check():
    g = type_a_graph(2)
    rng = random.Random(5)
    for _ in range(20):
        x = {
            0: QMatrix([[rng.randint(0, 1)]]),
            1: QMatrix([[rng.randint(0, 1)]]),
        }
        q0 = QMatrix([[rng.randint(0, 1)], [rng.randint(0, 1)]])
        pt = RepPoint(
            g,
            (1, 1),
            (2, 0),
            x,
            [QMatrix.zeros(1, 2), QMatrix.zeros(1, 0)],
            [q0, QMatrix.zeros(0, 1)],
        )
        assert is_stable_positive(pt) == brute_force_stable_small(pt)


def test_stable_negative():
    g = type_a_graph(1)
    pt = RepPoint(g, (1,), (2,), {}, [QMatrix([[1, 0]])], [QMatrix.zeros(2, 1)])
    assert is_stable_negative(pt)
    assert not is_stable_negative(zero_point(g, (1,), (2,)))

    g2 = type_a_graph(2)
    # im p only hits the first vertex; the arrow x1 carries it to the second.
    pt2 = RepPoint(
        g2,
        (1, 1),
        (1, 0),
        {0: QMatrix([[1]]), 1: QMatrix([[0]])},
        [QMatrix([[1]]), QMatrix.zeros(1, 0)],
        [QMatrix.zeros(1, 1), QMatrix.zeros(0, 1)],
    )
    assert is_stable_negative(pt2)
    pt3 = pt2.copy()
    pt3.x[0] = QMatrix([[0]])
    assert not is_stable_negative(pt3)


def test_intertwiner_identity_and_round_trip():
    g = type_a_graph(2)
    rng = random.Random(17)
    pt = sample_point(g, (2, 1), (1, 1), rng)
    found = intertwiner(pt, pt)
    assert found is not None
    assert act_gv(found, pt) == pt
    for _ in range(3):
        ge = sample_group(g, pt.v, rng)
        moved = act_gv(ge, pt)
        back = intertwiner(pt, moved)
        assert back is not None
        assert act_gv(back, pt) == moved


def test_intertwiner_obstruction():
    g = type_a_graph(1)
    pt1 = a1_point()
    # q p here is idempotent rather than nilpotent, so no g can relate them
    pt2 = RepPoint(g, (1,), (2,), {}, [QMatrix([[1, 0]])], [QMatrix([[1], [0]])])
    assert intertwiner(pt1, pt2) is None


def test_flag_map_zero_dims():
    g = type_a_graph(1)
    pt = zero_point(g, (0,), (2,))
    x_mat, flag = flag_map(pt)
    assert x_mat == QMatrix.zeros(2, 2)
    assert flag == [Subspace.zero(2)]


def test_flag_map_a1():
    x_mat, flag = flag_map(a1_point())
    assert x_mat == QMatrix([[0, 0], [1, 0]])
    assert flag == [Subspace(2, QMatrix([[0], [1]]))]


def stable_a2_flag_point():
    g = type_a_graph(2)
    x = {0: QMatrix([[0, 1]]), 1: QMatrix([[1], [0]])}
    p = [QMatrix([[0, 1], [0, 0]]), QMatrix.zeros(1, 0)]
    q = [QMatrix.identity(2), QMatrix.zeros(0, 1)]
    return RepPoint(g, (2, 1), (2, 0), x, p, q)


def test_flag_map_containment_and_dims():
    pt = stable_a2_flag_point()
    assert in_lambda(pt, (0, 0))
    assert is_stable_positive(pt)
    x_mat, flag = flag_map(pt)
    assert [f.dim for f in flag] == list(pt.v)
    for k in range(len(flag)):
        nxt = flag[k + 1] if k + 1 < len(flag) else Subspace.zero(pt.w[0])
        assert nxt.contains(flag[k].image_under(x_mat))


def test_flag_map_gw_equivariant():
    pt = stable_a2_flag_point()
    rng = random.Random(23)
    fe = sample_group(pt.graph, pt.w, rng)
    x1, flag1 = flag_map(pt)
    x2, flag2 = flag_map(act_gw(fe, pt))
    f0 = fe.blocks[0]
    assert x2 == f0 @ x1 @ f0.inverse()
    assert flag2 == [s.image_under(f0) for s in flag1]


def test_json_round_trip():
    g = type_a_graph(2)
    rng = random.Random(29)
    pt = sample_point(g, (2, 1), (1, 2), rng)
    again = RepPoint.from_dict(pt.to_dict())
    assert again == pt
    assert again.graph.to_dict() == g.to_dict()


def test_from_dict_defaults_missing_blocks_to_zero():
    g = type_a_graph(1)
    d = {"graph": g.to_dict(), "v": [1], "w": [2], "x": {}, "p": {}, "q": {"0": [["1/2"], ["0"]]}}
    pt = RepPoint.from_dict(d)
    assert pt.p[0].is_zero()
    assert pt.q[0] == QMatrix([[Fraction(1, 2)], [Fraction(0)]])
