"""Labeled spaces, linear maps, bilinear maps."""

import pytest
from hypothesis import given, strategies as st

from altext.errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, LabelClash
from altext.fields import PrimeField, QQ
from altext.spaces import (
    BilinearMap,
    LinearFunctional,
    LinearMap,
    Space,
    direct_sum_space,
    space,
    vadd,
    vscale,
    vsub,
    vunit,
    vzero,
)

F5 = PrimeField(5)


def test_space_validation():
    assert space(3).labels == ("e0", "e1", "e2")
    assert space(0).dim == 0
    with pytest.raises(LabelClash):
        Space(2, ("a", "a"))
    with pytest.raises(DimensionMismatch):
        Space(2, ("a",))


def test_direct_sum_keeps_disjoint_labels():
    s = direct_sum_space(space(2, "e"), space(1, "u"))
    assert s.labels == ("e0", "e1", "u0")


def test_direct_sum_prefixes_on_collision():
    s = direct_sum_space(space(1, "e"), space(1, "e"))
    assert s.labels == ("A.e0", "V.e0")


vec3 = st.tuples(*[st.integers(min_value=0, max_value=4)] * 3)


@given(vec3, vec3)
def test_vector_helpers_mod5(u, v):
    assert vadd(F5, u, v) == tuple((a + b) % 5 for a, b in zip(u, v))
    assert vsub(F5, u, v) == tuple((a - b) % 5 for a, b in zip(u, v))
    assert vscale(F5, 2, u) == tuple((2 * a) % 5 for a in u)
    assert vadd(F5, u, vzero(F5, 3)) == u


def test_linear_map_apply_and_compose():
    src = space(2)
    dst = space(2, "f")
    m = LinearMap.from_rows(F5, src, dst, [(1, 2), (3, 4)])
    # column convention: on_basis(i) is the image of e_i
    assert m.on_basis(0) == (1, 3)
    assert m.apply((1, 1)) == (3, 2)
    ident = LinearMap.identity(F5, src)
    assert m.compose(ident).matrix == m.matrix


def test_linear_map_shape_checks():
    with pytest.raises(DimensionMismatch):
        LinearMap.from_rows(F5, space(2), space(2), [(1, 2)])
    m = LinearMap.zero(F5, space(2), space(3))
    with pytest.raises(DimensionMismatch):
        m.apply((1, 1, 1))


def test_bilinear_from_entries_and_apply():
    sp = space(2)
    bm = BilinearMap.from_entries(F5, sp, sp, sp, [(0, 0, 0, 1), (0, 1, 1, 2)])
    assert bm.on_basis(0, 0) == (1, 0)
    assert bm.on_basis(0, 1) == (0, 2)
    assert bm.apply((1, 1), (1, 1)) == (1, 2)
    with pytest.raises(IndexOutOfRange):
        BilinearMap.from_entries(F5, sp, sp, sp, [(0, 0, 5, 1)])


def test_bilinear_entries_round_trip():
    sp = space(2)
    entries = [(0, 0, 1, 3), (1, 1, 0, 4)]
    bm = BilinearMap.from_entries(F5, sp, sp, sp, entries)
    rebuilt = BilinearMap.from_entries(F5, sp, sp, sp, bm.entries())
    assert rebuilt.tensor == bm.tensor
    assert sorted(bm.entries()) == sorted(entries)


def test_bilinear_add_and_zero():
    sp = space(2)
    bm = BilinearMap.from_entries(F5, sp, sp, sp, [(0, 0, 0, 2)])
    z = BilinearMap.zero(F5, sp, sp, sp)
    assert z.is_zero()
    assert bm.add(z).tensor == bm.tensor
    assert bm.add(bm).on_basis(0, 0) == (4, 0)


def test_bilinear_from_function_matches_entries():
    sp = space(2)
    bm = BilinearMap.from_function(
        F5, sp, sp, sp, lambda i, j: vunit(F5, 2, (i + j) % 2))
    for i in range(2):
        for j in range(2):
            assert bm.on_basis(i, j) == vunit(F5, 2, (i + j) % 2)


def test_field_mismatch_between_maps():
    sp = space(1)
    a = BilinearMap.zero(F5, sp, sp, sp)
    b = BilinearMap.zero(QQ, sp, sp, sp)
    with pytest.raises(FieldMismatch):
        a.add(b)


def test_functional_apply():
    phi = LinearFunctional(F5, space(3), (1, 2, 3))
    assert phi.apply((1, 1, 1)) == 1
    assert phi.apply(vunit(F5, 3, 2)) == 3
