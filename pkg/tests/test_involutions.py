import random
from fractions import Fraction

import pytest

from exquiver.graphs import diagram_auto, identity_auto, type_a_graph
from exquiver.involutions import (
    InvolutionConfig,
    diagram_apply,
    flag_sigma1,
    standard_config,
    tau,
    tau_hat,
)
from exquiver.linalg import Form, QMatrix, Subspace, right_adjoint, standard_form
from exquiver.points import (
    GroupElem,
    RepPoint,
    act_gv,
    intertwiner,
    moment_map,
    sample_point,
    symplectic_pair,
    zero_point,
)


def a1_fixed_point():
    g = type_a_graph(1)
    return RepPoint(g, (1,), (2,), {}, [QMatrix([[1, 0]])], [QMatrix([[0], [1]])])


def test_tau_zero_point():
    g = type_a_graph(2)
    pt = zero_point(g, (2, 1), (2, 2))
    cfg = standard_config(pt.v, pt.w)
    assert tau(pt, cfg) == pt


def test_tau_a1_fixed():
    pt = a1_fixed_point()
    cfg = standard_config(pt.v, pt.w, delta_v=1, delta_w=-1)
    assert tau(pt, cfg) == pt


def test_tau_moment_map_sign():
    g = type_a_graph(2)
    rng = random.Random(41)
    pt = sample_point(g, (2, 2), (2, 2), rng)
    cfg = standard_config(pt.v, pt.w, delta_v=1, delta_w=-1)
    mu = moment_map(pt)
    mu_t = moment_map(tau(pt, cfg))
    for i in range(g.n):
        assert mu_t[i] == right_adjoint(mu[i], cfg.forms_v[i], cfg.forms_v[i]).scale(-1)


def test_tau_hat_moment_map_sign():
    g = type_a_graph(2)
    rng = random.Random(43)
    pt = sample_point(g, (2, 1), (1, 2), rng)
    cfg = standard_config(pt.v, pt.w, mode="tau_hat")
    mu = moment_map(pt)
    mu_t = moment_map(tau_hat(pt, cfg))
    for i in range(g.n):
        assert mu_t[i] == right_adjoint(mu[i], cfg.forms_v[i], cfg.forms_v[i])


def test_tau_fourth_power_is_identity():
    g = type_a_graph(2)
    rng = random.Random(47)
    pt = sample_point(g, (2, 1), (2, 2), rng)
    cfg = standard_config(pt.v, pt.w, delta_v=1, delta_w=-1)
    out = pt
    for _ in range(4):
        out = tau(out, cfg)
    assert out == pt


def test_tau_squared_orbit_alternating_delta_w():
    # single vertex in the even part of the bipartition: delta_w = -1 makes
    # tau an orbit-level involution
    pt = a1_fixed_point()
    moved = act_gv(GroupElem([QMatrix([[Fraction(3, 2)]])]), pt)
    cfg = standard_config(pt.v, pt.w, delta_v=1, delta_w=-1)
    twice = tau(tau(moved, cfg), cfg)
    assert intertwiner(moved, twice) is not None


def test_tau_hat_squared_exact_uniform_plus():
    g = type_a_graph(2)
    rng = random.Random(59)
    pt = sample_point(g, (2, 1), (1, 2), rng)
    cfg = standard_config(pt.v, pt.w, mode="tau_hat")
    assert tau_hat(tau_hat(pt, cfg), cfg) == pt


def test_tau_hat_squared_orbit_uniform_minus():
    g = type_a_graph(1)
    rng = random.Random(61)
    pt = sample_point(g, (2,), (2,), rng)
    cfg = standard_config(pt.v, pt.w, delta_w=-1, mode="tau_hat")
    twice = tau_hat(tau_hat(pt, cfg), cfg)
    assert intertwiner(pt, twice) is not None


def test_tau_hat_antisymplectic():
    g = type_a_graph(2)
    rng = random.Random(67)
    cfg = standard_config((2, 1), (1, 2), mode="tau_hat")
    for _ in range(5):
        pt1 = sample_point(g, (2, 1), (1, 2), rng)
        pt2 = sample_point(g, (2, 1), (1, 2), rng)
        assert symplectic_pair(tau_hat(pt1, cfg), tau_hat(pt2, cfg)) == -symplectic_pair(pt1, pt2)


def test_tau_form_choice_immaterial():
    # congruent V-forms give G_v-equivalent outputs
    g = type_a_graph(2)
    rng = random.Random(71)
    pt = sample_point(g, (2, 1), (1, 1), rng)
    cfg1 = standard_config(pt.v, pt.w)
    g0 = QMatrix([[1, 1], [0, 1]])
    g1 = QMatrix([[2]])
    forms_v = (
        Form(g0.transpose() @ g0, 1),
        Form(g1.transpose() @ g1, 1),
    )
    cfg2 = InvolutionConfig(forms_v, cfg1.forms_w, "tau")
    out1 = tau(pt, cfg1)
    out2 = tau(pt, cfg2)
    assert intertwiner(out1, out2) is not None


def test_diagram_apply_identity():
    g = type_a_graph(3)
    rng = random.Random(73)
    pt = sample_point(g, (1, 2, 1), (1, 0, 1), rng)
    assert diagram_apply(identity_auto(g), pt) == pt


def test_diagram_apply_flip_and_mu():
    g = type_a_graph(3)
    auto = diagram_auto(g, (2, 1, 0))
    rng = random.Random(79)
    pt = sample_point(g, (1, 2, 1), (1, 0, 2), rng)
    out = diagram_apply(auto, pt)
    assert out.v == (1, 2, 1)
    assert out.w == (2, 0, 1)
    mu = moment_map(pt)
    mu_out = moment_map(out)
    for i in range(g.n):
        assert mu_out[i] == mu[auto.inverse_vertex(i)]


def test_diagram_apply_involutive_when_c_positive():
    # vertex swap on the doubled segment keeps orientations, so c = +1
    g = type_a_graph(2)
    try:
        auto = diagram_auto(g, (1, 0))
    except ValueError:
        pytest.skip("flip not an automorphism here")
    rng = random.Random(83)
    pt = sample_point(g, (2, 2), (1, 1), rng)
    if auto.c == 1:
        assert diagram_apply(auto, diagram_apply(auto, pt)) == pt
    else:
        twice = diagram_apply(auto, diagram_apply(auto, pt))
        flipped = {h.index: pt.x[h.index].scale(-1) for h in g.arrows}
        assert twice == RepPoint(g, pt.v, pt.w, flipped, pt.p, pt.q) or twice == pt


def test_diagram_apply_gv_equivariance():
    g = type_a_graph(3)
    auto = diagram_auto(g, (2, 1, 0))
    rng = random.Random(89)
    pt = sample_point(g, (1, 2, 1), (1, 0, 1), rng)
    blocks = [QMatrix([[1]]), QMatrix([[1, 1], [0, 1]]), QMatrix([[-2]])]
    ge = GroupElem(blocks)
    moved = diagram_apply(auto, act_gv(ge, pt))
    relabeled = GroupElem([blocks[auto.inverse_vertex(i)] for i in range(g.n)])
    assert moved == act_gv(relabeled, diagram_apply(auto, pt))


def test_flag_sigma1_zero_x():
    form = standard_form(2, -1)
    flag = [Subspace(2, QMatrix([[0], [1]]))]
    x_out, perp = flag_sigma1(QMatrix.zeros(2, 2), flag, form)
    assert x_out.is_zero()
    assert perp == [flag[0].orthogonal_complement(form)]


def test_flag_sigma1_sp2_fixed_pair():
    form = standard_form(2, -1)
    x = QMatrix([[0, 0], [1, 0]])
    flag = [Subspace(2, QMatrix([[0], [1]]))]
    x_out, perp = flag_sigma1(x, flag, form)
    assert x_out == x
    assert perp == flag


def test_flag_sigma1_involutive():
    form = standard_form(2, 1)
    x = QMatrix([[0, 0], [1, 0]])
    flag = [Subspace(2, QMatrix([[0], [1]]))]
    for mode in ("sigma", "sigma_hat"):
        x1, f1 = flag_sigma1(x, flag, form, mode)
        x2, f2 = flag_sigma1(x1, f1, form, mode)
        assert x2 == x
        assert f2 == flag


def test_flag_sigma1_rejects_bad_flag():
    form = standard_form(2, 1)
    x = QMatrix([[0, 1], [0, 0]])
    flag = [Subspace(2, QMatrix([[0], [1]]))]  # x does not kill span e2
    with pytest.raises(ValueError):
        flag_sigma1(x, flag, form)
