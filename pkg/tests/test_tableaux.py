import pytest
from hypothesis import given, settings, strategies as st

from skewdet.polynomial import MPoly
from skewdet.shapes import SkewShape, connected_skew_shapes
from skewdet.tableaux import (
    complete_homogeneous,
    count_syt_aitken,
    count_syt_bruteforce,
    enumerate_ssyt,
    is_ssyt,
    schur_direct,
    schur_jacobi_trudi,
    tableau_monomial,
)


def test_is_ssyt():
    boxes = {(1, 1), (1, 2), (2, 1)}
    assert is_ssyt(boxes, {(1, 1): 1, (1, 2): 1, (2, 1): 2})
    assert not is_ssyt(boxes, {(1, 1): 1, (1, 2): 1, (2, 1): 1})  # column tie
    assert not is_ssyt(boxes, {(1, 1): 2, (1, 2): 1, (2, 1): 3})  # row decrease
    assert not is_ssyt(boxes, {(1, 1): 1, (1, 2): 1})  # missing box


def test_enumerate_ssyt_counts():
    assert len(list(enumerate_ssyt({(1, 1)}, 3))) == 3
    assert len(list(enumerate_ssyt({(1, 1), (2, 1)}, 2))) == 1
    assert len(list(enumerate_ssyt({(1, 1), (1, 2)}, 2))) == 3
    assert len(list(enumerate_ssyt(SkewShape((2, 2)), 2))) == 1
    assert list(enumerate_ssyt(set(), 3)) == [{}]
    for filling in enumerate_ssyt(SkewShape((3, 2)), 3):
        assert is_ssyt(SkewShape((3, 2)).boxes, filling)


def test_schur_small_closed_forms():
    x, y = MPoly.var(2, 1), MPoly.var(2, 2)
    assert schur_direct(SkewShape((1, 1)), 2) == x * y
    assert schur_direct(SkewShape((2,)), 2) == x**2 + x * y + y**2
    assert schur_direct(SkewShape((2, 1)), 2) == x**2 * y + x * y**2
    assert schur_direct(SkewShape((2, 2)), 2) == x**2 * y**2


def test_schur_translation_invariance():
    hook = {(1, 2), (2, 1), (2, 2)}
    moved = {(s + 4, t + 9) for s, t in hook}
    assert schur_direct(hook, 3) == schur_direct(moved, 3)


def test_complete_homogeneous():
    assert complete_homogeneous(0, 2) == MPoly.const(2, 1)
    assert complete_homogeneous(-1, 2).is_zero()
    x, y = MPoly.var(2, 1), MPoly.var(2, 2)
    assert complete_homogeneous(2, 2) == x**2 + x * y + y**2
    # h_k equals the one-row Schur polynomial
    for k in (1, 2, 3, 4):
        assert complete_homogeneous(k, 3) == schur_direct(SkewShape((k,)), 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_jacobi_trudi_matches_direct(n):
    for shape in connected_skew_shapes(n):
        for nvars in (2, 3):
            assert schur_jacobi_trudi(shape, nvars) == schur_direct(shape, nvars)


def test_schur_is_symmetric():
    p = schur_direct(SkewShape((3, 2), (1,)), 3)
    swapped = MPoly(3, {(e[1], e[0], e[2]): c for e, c in p.terms.items()})
    assert p == swapped
    swapped = MPoly(3, {(e[0], e[2], e[1]): c for e, c in p.terms.items()})
    assert p == swapped


def test_syt_counts_known_values():
    assert count_syt_bruteforce(SkewShape((2, 1))) == 2
    assert count_syt_bruteforce(SkewShape((2, 2))) == 2
    assert count_syt_bruteforce(SkewShape((3, 2, 1))) == 16
    assert count_syt_bruteforce(SkewShape((2, 2), (1,))) == 2
    assert count_syt_bruteforce(set()) == 1
    assert count_syt_bruteforce(SkewShape((3, 3, 3))) == 42


def test_aitken_matches_brute_small():
    for n in range(1, 7):
        for shape in connected_skew_shapes(n):
            assert count_syt_aitken(shape) == count_syt_bruteforce(shape)


def test_aitken_large_shape_consistency():
    shape = SkewShape((6, 6, 6, 4), (3, 1))
    value = count_syt_aitken(shape)
    assert value == count_syt_bruteforce(shape)
    assert value > 0


def test_syt_count_is_all_ones_coefficient():
    shape = SkewShape((3, 2), (1,))
    n = shape.size
    p = schur_direct(shape, n)
    assert p.coefficient((1,) * n) == count_syt_bruteforce(shape)


def test_tableau_monomial_rejects_large_entries():
    with pytest.raises(ValueError):
        tableau_monomial({(1, 1): 4}, 3)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 5))
def test_schur_homogeneous_of_size_degree(n):
    for shape in connected_skew_shapes(n):
        p = schur_direct(shape, 2)
        if not p.is_zero():
            assert p.is_homogeneous()
            assert p.degree() == n
        break
