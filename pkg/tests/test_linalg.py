import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exquiver.linalg import (
    Form,
    QMatrix,
    Subspace,
    classify_membership,
    frac_from_str,
    frac_to_str,
    image,
    jordan_type,
    kernel,
    left_adjoint,
    right_adjoint,
    sample_isometry,
    sample_matrix,
    standard_form,
)

entries = st.integers(min_value=-4, max_value=4)


def mat_strategy(rows, cols):
    return st.lists(
        st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(QMatrix)


def test_frac_roundtrip():
    assert frac_from_str("3/7") == Fraction(3, 7)
    assert frac_to_str(Fraction(-2, 4)) == "-1/2"
    assert frac_to_str(Fraction(5)) == "5"


def test_matmul_and_inverse():
    a = QMatrix([[1, 2], [3, 4]])
    assert a @ a.inverse() == QMatrix.identity(2)
    assert a.inverse() @ a == QMatrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        QMatrix([[1, 2], [2, 4]]).inverse()


def test_zero_dim_shapes():
    a = QMatrix.zeros(0, 3)
    b = QMatrix.zeros(3, 2)
    assert (a @ b).shape == (0, 2)
    assert QMatrix.identity(0).is_invertible()
    assert a.rank() == 0
    assert QMatrix.zeros(2, 0).nullspace().shape == (0, 0)


def test_rref_rank_nullspace():
    m = QMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    ns = m.nullspace()
    assert ns.cols == 1
    assert (m @ ns).is_zero()


def test_solve():
    a = QMatrix([[1, 1], [0, 1]])
    b = QMatrix.column([3, 2])
    x = a.solve(b)
    assert a @ x == b
    inconsistent = QMatrix([[1, 1], [1, 1]]).solve(QMatrix.column([0, 1]))
    assert inconsistent is None


# -- adjoints ---------------------------------------------------------------


def test_right_adjoint_identity_any_form():
    for g in (QMatrix.identity(2), QMatrix([[2, 1], [1, 1]])):
        form = Form(g)
        assert right_adjoint(QMatrix.identity(2), form, form) == QMatrix.identity(2)


def test_right_adjoint_symplectic_example():
    # frozen: T=[[1,2],[3,4]] with Gram [[0,1],[-1,0]] on both sides
    form = Form(QMatrix([[0, 1], [-1, 0]]), -1)
    t = QMatrix([[1, 2], [3, 4]])
    star = right_adjoint(t, form, form)
    assert star == QMatrix([[4, -2], [-3, 1]])
    # defining property on all basis pairs
    for e in ([1, 0], [0, 1]):
        for f in ([1, 0], [0, 1]):
            assert form.pair(t.apply(e), f) == form.pair(e, star.apply(f))


@settings(max_examples=40)
@given(mat_strategy(2, 3))
def test_double_adjoint_sign(t):
    src = standard_form(3, +1)
    dst = standard_form(2, -1)
    star = right_adjoint(t, src, dst)
    double = right_adjoint(star, dst, src)
    assert double == t.scale(+1 * -1)


@settings(max_examples=40)
@given(mat_strategy(2, 2), mat_strategy(2, 2))
def test_adjoint_contravariance(a, b):
    form = Form(QMatrix([[1, 1], [1, 2]]), +1)
    lhs = right_adjoint(a @ b, form, form)
    rhs = right_adjoint(b, form, form) @ right_adjoint(a, form, form)
    assert lhs == rhs


@settings(max_examples=40)
@given(mat_strategy(2, 2))
def test_left_right_round_trips(t):
    src = standard_form(2, -1)
    dst = standard_form(2, +1)
    star = right_adjoint(t, src, dst)
    assert left_adjoint(star, dst, src) == t
    assert right_adjoint(left_adjoint(t, src, dst), dst, src) == t


def test_left_adjoint_symmetric_forms_coincide():
    form = Form(QMatrix([[2, 0], [0, 3]]), +1)
    t = QMatrix([[1, 5], [-2, 7]])
    assert left_adjoint(t, form, form) == right_adjoint(t, form, form)


def test_classify_membership():
    form = standard_form(2, -1)
    assert classify_membership(QMatrix.zeros(2, 2), form) == {
        "lie_isometry",
        "symmetric_space",
    }
    sym = QMatrix([[1, 2], [2, 5]])
    member = form.gram.inverse() @ sym
    assert "lie_isometry" in classify_membership(member, form)
    assert classify_membership(QMatrix([[1, 2], [3, 4]]), form) == {"neither"}


# -- jordan type -------------------------------------------------------------


def test_jordan_type_examples():
    assert jordan_type(QMatrix.zeros(3, 3)) == (1, 1, 1)
    j2 = QMatrix([[0, 1], [0, 0]])
    assert jordan_type(j2) == (2,)
    blk = QMatrix.zeros(5, 5)
    blk.data[0][1] = Fraction(1)
    blk.data[2][3] = Fraction(1)
    assert jordan_type(blk) == (2, 2, 1)


def test_jordan_type_conjugation_invariant():
    rng = random.Random(7)
    n = QMatrix.zeros(4, 4)
    n.data[0][1] = n.data[1][2] = Fraction(1)
    for _ in range(5):
        while True:
            g = sample_matrix(rng, 4, 4)
            if g.is_invertible():
                break
        assert jordan_type(g @ n @ g.inverse()) == jordan_type(n)


def test_jordan_type_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        jordan_type(QMatrix.identity(2))


# -- subspaces ----------------------------------------------------------------


def test_subspace_canonical_equality():
    s1 = Subspace(3, QMatrix([[1, 1], [0, 2], [0, 0]]))
    s2 = Subspace(3, QMatrix([[2, 1], [2, 1], [0, 0]]))
    assert s1 == s2 or s1 != s2  # comparable
    a = Subspace(3, QMatrix([[1, 0], [0, 1], [0, 0]]))
    b = Subspace(3, QMatrix([[1, 1], [1, -1], [0, 0]]))
    assert a == b


def test_subspace_ops():
    e1 = Subspace(3, QMatrix.column([1, 0, 0]))
    e2 = Subspace(3, QMatrix.column([0, 1, 0]))
    assert e1.sum(e2).dim == 2
    assert e1.intersect(e2).dim == 0
    assert e1.sum(e2).contains(e1)
    assert not e1.contains(e2)
    t = QMatrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert e1.preimage_under(t) == Subspace(3, QMatrix.identity(3))
    assert kernel(t).dim == 2
    assert image(t) == e1


def test_orthogonal_complement_examples():
    form = Form(QMatrix([[0, 1], [-1, 0]]), -1)
    full = Subspace.full(2)
    assert full.orthogonal_complement(form).dim == 0
    e1 = Subspace(2, QMatrix.column([1, 0]))
    assert e1.orthogonal_complement(form) == e1  # isotropic line
    assert Subspace.zero(2).orthogonal_complement(form) == full


@settings(max_examples=30)
@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=2, max_size=2))
def test_complement_involution_and_dims(cols):
    form = standard_form(4, +1)
    s = Subspace(4, QMatrix(cols).transpose())
    comp = s.orthogonal_complement(form)
    assert s.dim + comp.dim == 4
    assert comp.orthogonal_complement(form) == s


# -- isometries ----------------------------------------------------------------


@pytest.mark.parametrize("delta,dim", [(+1, 3), (-1, 2), (-1, 4), (+1, 1)])
def test_sample_isometry_exact(delta, dim):
    form = standard_form(dim, delta)
    for seed in range(5):
        g = sample_isometry(form, seed)
        assert g @ right_adjoint(g, form, form) == QMatrix.identity(dim)


def test_isometry_product_closure():
    form = standard_form(2, -1)
    g1 = sample_isometry(form, 1)
    g2 = sample_isometry(form, 2)
    gh = g1 @ g2
    assert gh @ right_adjoint(gh, form, form) == QMatrix.identity(2)


def test_sample_isometry_nonstandard_gram():
    form = Form(QMatrix([[2, 1], [1, 1]]), +1)
    g = sample_isometry(form, 11)
    assert g @ right_adjoint(g, form, form) == QMatrix.identity(2)
