from fractions import Fraction

import pytest

from exquiver.graphs import Parameter, diagram_auto, identity_auto, type_a_graph
from exquiver.involutions import diagram_apply, standard_config, tau
from exquiver.linalg import QMatrix
from exquiver.path_algebra import (
    Path,
    check_relations,
    enumerate_paths,
    eval_from_point,
    gw_action,
    is_sigma0_fixed,
    lusztig_reflect,
    lusztig_reflect_word,
    path_sign,
    path_source,
    path_target,
    reverse_path,
    sigma0,
    tau0,
    theta_a,
    theta_element,
)
from exquiver.points import GroupElem, RepPoint, act_gw, zero_point
from exquiver.reflection import reflect_point


def a2_lambda_point(zeta_c=(1, 1), s=2, t=1):
    g = type_a_graph(2)
    p0q0 = Fraction(t * s) - Fraction(zeta_c[0])
    p1q1 = Fraction(-t * s) - Fraction(zeta_c[1])
    return RepPoint(
        g,
        (1, 1),
        (1, 1),
        {0: QMatrix([[s]]), 1: QMatrix([[t]])},
        [QMatrix([[1]]), QMatrix([[1]])],
        [QMatrix([[p0q0]]), QMatrix([[p1q1]])],
    )


def a1_symplectic_point():
    g = type_a_graph(1)
    return RepPoint(g, (1,), (2,), {}, [QMatrix([[1, 0]])], [QMatrix([[0], [1]])])


def test_enumerate_paths_endpoints_and_signs():
    g = type_a_graph(2)
    paths = enumerate_paths(g, 3)
    lazies = [f for f in paths if f.is_lazy()]
    assert len(lazies) == 2
    for f in paths:
        if not f.is_lazy():
            assert path_source(g, f) == g.arrows[f.arrows[0]].start
            rev = reverse_path(g, f)
            assert path_source(g, rev) == path_target(g, f)
            assert path_sign(g, rev) == path_sign(g, f) * (-1) ** len(f)
    # alternating walks on two vertices: exactly two per positive length
    assert len(paths) == 2 + 2 * 3


def test_a1_table_has_only_lazy_entries():
    pt = zero_point(type_a_graph(1), (1,), (3,))
    pe = eval_from_point(pt)
    assert set(pe.table) == {Path.lazy(0)}
    assert pe.table[Path.lazy(0)].is_zero()


def test_a2_values_are_framed_products():
    pt = a2_lambda_point()
    pe = eval_from_point(pt, depth=4)
    assert pe.table[Path.lazy(0)] == pt.q[0] @ pt.p[0]
    assert pe.table[Path.of((0,))] == pt.q[1] @ pt.x[0] @ pt.p[0]
    assert pe.table[Path.of((0, 1))] == pt.q[0] @ pt.x[1] @ pt.x[0] @ pt.p[0]
    assert pe.zeta_c == (Fraction(1), Fraction(1))


def test_eval_rejects_non_scalar_moment_map():
    g = type_a_graph(1)
    pt = RepPoint(
        g, (2,), (2,), {}, [QMatrix.identity(2)], [QMatrix([[1, 0], [0, 2]])]
    )
    with pytest.raises(ValueError):
        eval_from_point(pt)


def test_eval_rejects_mismatched_parameter():
    pt = a2_lambda_point(zeta_c=(1, 1))
    with pytest.raises(ValueError):
        eval_from_point(pt, zeta_c=(1, 2))


def test_relations_fail_on_tampered_table():
    pe = eval_from_point(a2_lambda_point(), depth=6)
    bad = pe.table[Path.of((0, 1))]
    pe.table[Path.of((0, 1))] = bad + QMatrix.identity(1)
    assert not check_relations(pe, raise_on_fail=False)


def test_tau0_twice_with_alternating_deltas():
    g = type_a_graph(2)
    pt = RepPoint(
        g,
        (1, 1),
        (1, 2),
        {0: QMatrix([[2]]), 1: QMatrix([[1]])},
        [QMatrix([[1]]), QMatrix([[-3, 5]])],
        [QMatrix([[1]]), QMatrix([[1], [0]])],
    )
    pe = eval_from_point(pt, depth=6)
    cfg = standard_config(pt.v, pt.w, delta_w=(1, -1))
    back = tau0(tau0(pe, cfg.forms_w), cfg.forms_w)
    assert back == pe
    check_relations(tau0(pe, cfg.forms_w))


def test_tau0_matches_point_involution():
    pt = a2_lambda_point()
    cfg = standard_config(pt.v, pt.w)
    assert tau0(eval_from_point(pt, depth=6), cfg.forms_w) == eval_from_point(
        tau(pt, cfg), depth=6
    )


def test_theta_identity_auto_is_identity():
    pe = eval_from_point(a2_lambda_point(), depth=4)
    assert theta_a(pe, identity_auto(pe.graph)) == pe


def test_theta_matches_point_relabel():
    g = type_a_graph(2)
    flip = diagram_auto(g, (1, 0))
    pt = a2_lambda_point()
    assert theta_a(eval_from_point(pt, depth=6), flip) == eval_from_point(
        diagram_apply(flip, pt), depth=6
    )
    check_relations(theta_a(eval_from_point(pt, depth=6), flip))


def test_theta_transport_of_relation_element():
    g = type_a_graph(2)
    flip = diagram_auto(g, (1, 0))
    zeta = (Fraction(2), Fraction(5))
    for i in (0, 1):
        mapped = []
        for coeff, f in theta_element(g, i, zeta):
            if f.is_lazy():
                mapped.append((coeff, Path.lazy(flip.inverse_vertex(f.vertex))))
            else:
                img = Path.of(tuple(flip.inverse_arrow_index(a) for a in f.arrows))
                sign = path_sign(g, img) if flip.c == -1 else 1
                mapped.append((coeff * sign, img))
        relabelled = tuple(zeta[flip.apply_vertex(j)] for j in range(g.n))
        target = theta_element(g, flip.inverse_vertex(i), relabelled)
        assert sorted(mapped, key=str) == sorted(target, key=str)


def test_reflect_zero_parameter_is_identity():
    pe = eval_from_point(a2_lambda_point(zeta_c=(0, 3)), depth=6)
    assert lusztig_reflect(pe, 0) == pe


def test_reflect_shifts_lazy_value():
    pe = eval_from_point(a2_lambda_point(), depth=6)
    out = lusztig_reflect(pe, 1)
    assert out.table[Path.lazy(1)] == pe.table[Path.lazy(1)] + QMatrix.identity(1)
    assert out.table[Path.lazy(0)] == pe.table[Path.lazy(0)]
    assert out.zeta_c == (Fraction(2), Fraction(-1))


def test_reflect_matches_point_reflection():
    # the table of a reflected point is the reflected table
    pt = a2_lambda_point(zeta_c=(1, 1))
    param = Parameter((1, 1), (1, 1))
    for i in (0, 1):
        res = reflect_point(pt, i, param)
        direct = eval_from_point(res.point, depth=6)
        assert direct == lusztig_reflect(eval_from_point(pt, depth=6), i)


def test_reflect_square_and_braid_on_tables():
    pe = eval_from_point(a2_lambda_point(), depth=6)
    for i in (0, 1):
        assert lusztig_reflect(lusztig_reflect(pe, i), i) == pe
    assert lusztig_reflect_word(pe, (0, 1, 0)) == lusztig_reflect_word(pe, (1, 0, 1))
    check_relations(lusztig_reflect_word(pe, (0, 1, 0)))


def test_gw_action_commutes_with_eval():
    pt = a2_lambda_point()
    ge = GroupElem([QMatrix([[3]]), QMatrix([[-2]])])
    assert gw_action(ge, eval_from_point(pt, depth=6)) == eval_from_point(
        act_gw(ge, pt), depth=6
    )


def test_sigma0_fixed_a1_symplectic():
    pt = a1_symplectic_point()
    pe = eval_from_point(pt)
    cfg = standard_config(pt.v, pt.w, delta_w=-1)
    assert is_sigma0_fixed(pe, (), identity_auto(pe.graph), cfg.forms_w)
    plain = standard_config(pt.v, pt.w, delta_w=1)
    assert not is_sigma0_fixed(pe, (), identity_auto(pe.graph), plain.forms_w)


def test_sigma0_compatibility_guard():
    pe = eval_from_point(a2_lambda_point(zeta_c=(1, 2), s=1, t=3))
    cfg = standard_config((1, 1), (1, 1))
    with pytest.raises(ValueError):
        is_sigma0_fixed(pe, (0, 1, 0), identity_auto(pe.graph), cfg.forms_w)


def test_sigma0_preserves_relations():
    g = type_a_graph(2)
    flip = diagram_auto(g, (1, 0))
    pt = a2_lambda_point(zeta_c=(1, 1))
    pe = eval_from_point(pt, depth=6)
    out = sigma0(pe, (0, 1, 0), flip, standard_config(pt.v, pt.w).forms_w)
    check_relations(out)
    assert out.zeta_c == pe.zeta_c
    assert out.w == pe.w
