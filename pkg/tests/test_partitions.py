"""Transpose, Kostka counts, and the rectangle moves on flag labels."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exquiver.embedding import tilde_form
from exquiver.linalg import standard_form
from exquiver.partitions import (
    classical_type,
    column_removal,
    dominates,
    flag_jumps,
    kostka,
    normalize,
    rect_symmetry,
    row_addition,
    transpose,
)

TWO_ROW_V = (1, 2, 2, 3, 2, 1)
TWO_ROW_W = (0, 1, 0, 1, 0, 0)

PARTITIONS_OF_6 = [
    (6,),
    (5, 1),
    (4, 2),
    (4, 1, 1),
    (3, 3),
    (3, 2, 1),
    (3, 1, 1, 1),
    (2, 2, 2),
    (2, 2, 1, 1),
    (2, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1),
]

parts_lists = st.lists(st.integers(min_value=0, max_value=6), max_size=6)


def test_transpose_frozen_values():
    assert transpose((3, 2)) == (2, 2, 1)
    assert transpose((2, 2, 1)) == (3, 2)
    assert transpose(()) == ()
    assert transpose((1, 1, 1)) == (3,)


@given(parts_lists)
def test_transpose_is_an_involution(parts):
    p = normalize(parts)
    assert transpose(transpose(p)) == p


@given(parts_lists)
def test_transpose_preserves_size(parts):
    p = normalize(parts)
    assert sum(transpose(p)) == sum(p)


def test_kostka_frozen_values():
    assert kostka((2, 1), (2, 1)) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((2, 1, 1), (1, 1, 1, 1)) == 3
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((4, 2), (6,)) == 0
    assert kostka((), ()) == 1


def test_kostka_size_mismatch_counts_nothing():
    assert kostka((2, 1), (2, 2)) == 0
    assert kostka((3,), ()) == 0


def test_kostka_self_content_unique():
    for lam in PARTITIONS_OF_6:
        assert kostka(lam, lam) == 1


def test_kostka_positive_exactly_on_dominated_content():
    for lam in PARTITIONS_OF_6:
        for mu in PARTITIONS_OF_6:
            assert (kostka(lam, mu) > 0) == dominates(lam, mu)


def test_kostka_refuses_oversized_shapes():
    with pytest.raises(ValueError, match="cap"):
        kostka((21,), (21,))


def test_flag_jumps_values():
    assert flag_jumps((0, 0), (1, 1)) == (2, 1, 0)
    assert flag_jumps(TWO_ROW_V, TWO_ROW_W) == (1, 1, 1, 0, 1, 1, 1)
    with pytest.raises(ValueError):
        flag_jumps((0, 3), (0, 1))


def test_rect_symmetry_two_row_example():
    rec = rect_symmetry(TWO_ROW_V, TWO_ROW_W)
    assert rec.mu_prime == (6,) and rec.lam == (4, 2)
    assert rec.mu_hat_prime == (7, 1) and rec.lam_hat == (5, 3)
    assert rec.identity_ok


def test_rect_symmetry_palindrome_and_empty():
    rec = rect_symmetry((0, 0), (1, 1))
    assert rec.mu_prime == rec.mu_hat_prime == (2, 1)
    assert rec.lam == rec.lam_hat == (2, 1)
    assert rec.identity_ok
    rec0 = rect_symmetry((0, 0, 0), (0, 0, 0))
    assert rec0.mu_prime == rec0.lam == () == rec0.mu_hat_prime == rec0.lam_hat
    assert rec0.identity_ok


def _complement(p, width, length):
    padded = list(p) + [0] * (length - len(p))
    return tuple(x for x in sorted((width - y for y in padded), reverse=True) if x)


@pytest.mark.parametrize("n", [2, 3])
def test_rect_symmetry_is_the_rectangle_complement(n):
    for v in itertools.product(range(3), repeat=n):
        for w in itertools.product(range(3), repeat=n):
            try:
                rec = rect_symmetry(v, w)
            except ValueError:
                continue
            assert rec.identity_ok
            width, length = n + 1, sum(w)
            assert rec.mu_hat_prime == _complement(rec.mu_prime, width, length)
            assert rec.lam_hat == _complement(rec.lam, width, length)
            assert len(rec.mu_prime) <= length and len(rec.lam) <= length
            assert all(x <= width for x in rec.mu_prime + rec.lam)


def test_column_removal_example():
    rec = column_removal((0, 0), (1, 1))
    assert rec.mu_prime == (3, 2)
    assert rec.lam == (3, 2)
    assert rec.inverse_ok


def test_column_removal_degenerate():
    rec = column_removal((0, 0), (0, 0))
    assert rec.mu_prime == () == rec.lam
    assert rec.inverse_ok


def test_column_removal_inverse_sweep():
    for n in (2, 3):
        for v in itertools.product(range(3), repeat=n):
            for w in itertools.product(range(3), repeat=n):
                try:
                    jumps = flag_jumps(v, w)
                except ValueError:
                    continue
                rec = column_removal(v, w)
                assert rec.inverse_ok == (max(jumps) <= sum(w))


def test_row_addition_moves():
    base = rect_symmetry(TWO_ROW_V, TWO_ROW_W)
    rec0 = row_addition(TWO_ROW_V, TWO_ROW_W, 0)
    assert (rec0.mu_prime, rec0.lam) == (base.mu_prime, base.lam)
    rec1 = row_addition(TWO_ROW_V, TWO_ROW_W, 1)
    assert rec1.mu_prime == (7, 6) and rec1.lam == (7, 4, 2)
    for a in range(3):
        rec = row_addition((0, 0), (1, 1), a)
        assert rec.mu_prime[a:] == (2, 1) and rec.mu_prime[:a] == (3,) * a
        assert rec.lam[a:] == (2, 1) and rec.lam[:a] == (3,) * a


def test_classical_type_patterns():
    assert classical_type((1, -1, 1)) == "orthogonal"
    assert classical_type((-1, 1, -1)) == "symplectic"
    assert classical_type((-1,)) == "symplectic"
    with pytest.raises(ValueError):
        classical_type((1, 1))
    with pytest.raises(ValueError):
        classical_type(())
    with pytest.raises(ValueError):
        classical_type((1, 0, 1))


def test_classical_type_matches_the_enlarged_form_sign():
    forms_v = (standard_form(1, 1), standard_form(1, 1))
    ortho_w = (standard_form(1, 1), standard_form(2, -1))
    sympl_w = (standard_form(2, -1), standard_form(1, 1))
    assert classical_type((1, -1)) == "orthogonal"
    assert tilde_form(forms_v, ortho_w, "angle")[0].delta == 1
    assert classical_type((-1, 1)) == "symplectic"
    assert tilde_form(forms_v, sympl_w, "angle")[0].delta == -1
