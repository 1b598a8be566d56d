import pytest
from hypothesis import given, settings, strategies as st

from wonderful_strata.demazure import (
    bruhat_cells_meet, bruhat_cells_meet_forms, coset_decompose, coset_max,
    coset_min, demazure, double_coset_extremes, tri_left, tri_right,
)

from conftest import system


def test_products_on_a2(A2):
    s0, s1, e, w0 = A2.s(0), A2.s(1), A2.identity(), A2.longest()
    assert demazure(s0 * s1, s1 * s0) == w0
    assert demazure(s0, s0) == s0
    assert tri_left(s0, s0) == e
    assert tri_right(s0, s0) == e
    assert tri_left(s0, s0 * s1) == s1
    assert tri_right(s0 * s1, s1) == s0
    for y in A2:
        assert demazure(e, y) == y == demazure(y, e)
        assert tri_left(e, y) == y and tri_right(e, y) == e
        assert demazure(w0, y) == w0 == demazure(y, w0)


def test_mixed_systems_rejected(A2, B2):
    with pytest.raises(ValueError):
        demazure(A2.s(0), B2.s(0))


def test_double_coset_examples(A2):
    s0, s1, w0 = A2.s(0), A2.s(1), A2.longest()
    for x in A2:
        assert double_coset_extremes(x, [], []) == (x, x)
        assert double_coset_extremes(x, [0, 1], [0, 1]) == (A2.identity(), w0)
    assert double_coset_extremes(w0, [1], [0]) == (s0 * s1, w0)


def test_coset_decompose_examples(A2):
    s0, s1, e, w0 = A2.s(0), A2.s(1), A2.identity(), A2.longest()
    assert coset_decompose(e, [0]).minimal_part == e
    d = coset_decompose(w0, [0])
    assert (d.minimal_part, d.parabolic_part) == (s0 * s1, s0)
    d = coset_decompose(s0, [0])
    assert (d.minimal_part, d.parabolic_part) == (e, s0)


def test_coset_side_checked(A2):
    with pytest.raises(ValueError):
        coset_min(A2.s(0), [0], "up")
    with pytest.raises(ValueError):
        coset_max(A2.s(0), [0], "down")


def test_cells_meet_forms_agree(A2):
    for x in A2:
        for y in A2:
            for u in A2:
                for v in A2:
                    a, b = bruhat_cells_meet_forms(x, y, u, v)
                    assert a == b
                    assert bruhat_cells_meet(x, y, u, v, check=True) == a


idx = st.integers(min_value=0, max_value=47)


@settings(max_examples=150, deadline=None)
@given(idx, idx, idx)
def test_monoid_laws_b3(a, b, c):
    W = system("B3")
    x, y, z = W.elements[a], W.elements[b], W.elements[c]
    assert demazure(demazure(x, y), z) == demazure(x, demazure(y, z))
    assert tri_left(demazure(x, y), z) == tri_left(x, tri_left(y, z))
    assert tri_right(z, demazure(x, y)) == tri_right(tri_right(z, x), y)
    xy = demazure(x, y)
    assert x.bruhat_le(xy) and y.bruhat_le(xy)
    assert xy.length <= x.length + y.length
    # inverses swap the two sides
    assert demazure(x, y).inverse() == demazure(y.inverse(), x.inverse())
    assert tri_left(x, y).inverse() == tri_right(y.inverse(), x.inverse())


@settings(max_examples=100, deadline=None)
@given(idx, st.sets(st.integers(min_value=0, max_value=2)))
def test_coset_extremes_b3(a, J):
    W = system("B3")
    x = W.elements[a]
    lo, hi = coset_min(x, J), coset_max(x, J)
    coset = {x * u for u in W.parabolic(J)}
    assert lo in coset and hi in coset
    assert all(lo.bruhat_le(z) and z.bruhat_le(hi) for z in coset)
    d = coset_decompose(x, J)
    assert d.product() == x and d.minimal_part == lo
