"""Deformation maps and complement classification for matched pairs."""

import json

import pytest

from altext.complements import (
    DeformationMap,
    deformation_classes,
    deformations_equivalent,
    deformed_isomorphic,
    enumerate_deformations,
    factorization_index,
    graph_closed,
    is_deformation,
    r_deform,
)
from altext.core import is_alternative
from altext.errors import BudgetExceeded, NotADeformation
from altext.spaces import LinearMap

from conftest import fixture_text


def golden():
    return json.loads(fixture_text("goldens/deformations.json"))


@pytest.fixture(params=["mp_11_f5", "mp_21_f3"])
def pair(request, gen):
    return request.param, getattr(gen, request.param)()


def test_enumeration_matches_goldens(pair):
    name, mp = pair
    want = golden()[name]
    maps = enumerate_deformations(mp)
    assert len(maps) == want["maps"]
    got = [[[mp.field.format(x) for x in row] for row in r.matrix]
           for r in maps]
    assert got == want["map_matrices"]


def test_zero_map_is_always_a_deformation(pair):
    _, mp = pair
    zero = LinearMap.zero(mp.field, mp.b.space, mp.a.space)
    assert is_deformation(mp, zero).ok
    maps = enumerate_deformations(mp)
    assert any(r.matrix == zero.matrix for r in maps)
    # r = 0 deforms nothing
    assert r_deform(mp, zero).mul.tensor == mp.b.mul.tensor


def test_every_deformation_closes_and_deforms(pair):
    _, mp = pair
    for r in enumerate_deformations(mp):
        assert graph_closed(mp, r).ok
        assert is_alternative(r_deform(mp, r)).ok
        # the graph complement has dim B by construction
        assert r.src.dim == mp.b.space.dim


def test_identity_and_closure_agree_everywhere(pair):
    """graph closure in E and the deformation identity are the same test."""
    _, mp = pair
    from altext.unified import _all_matrices

    f = mp.field
    n, m = mp.a.space.dim, mp.b.space.dim
    for mat in _all_matrices(f, n, m):
        r = LinearMap(f, mp.b.space, mp.a.space, mat)
        assert is_deformation(mp, r).ok == graph_closed(mp, r).ok


def test_classes_match_goldens(pair):
    name, mp = pair
    want = golden()[name]
    classes = deformation_classes(mp)
    assert [len(c) for c in classes] == want["class_sizes"]
    assert factorization_index(mp) == want["index"]


def test_partition_matches_isomorphism_search(pair):
    """sigma-equivalence must induce the same partition as a blind
    isomorphism search between the deformed products."""
    _, mp = pair
    maps = enumerate_deformations(mp)
    for i, r in enumerate(maps):
        for rp in maps[:i]:
            eq = deformations_equivalent(mp, r, rp) is not None
            iso = deformed_isomorphic(mp, r, rp) is not None
            assert eq == iso


def test_equivalence_witness_is_an_isomorphism(pair):
    _, mp = pair
    maps = enumerate_deformations(mp)
    r, rp = maps[0], maps[-1]
    sig = deformations_equivalent(mp, r, rp)
    if sig is not None:
        br, brp = r_deform(mp, r), r_deform(mp, rp)
        for i in range(mp.b.space.dim):
            for j in range(mp.b.space.dim):
                assert sig.apply(br.mul.on_basis(i, j)) == brp.mul.apply(
                    sig.on_basis(i), sig.on_basis(j))


def test_deformation_map_constructor_rejects_invalid(gen):
    mp = gen.mp_21_f3()
    bad = LinearMap.from_rows(mp.field, mp.b.space, mp.a.space, [(1,), (1,)])
    if not is_deformation(mp, bad).ok:
        with pytest.raises(NotADeformation):
            DeformationMap(mp, bad)
    good = LinearMap.zero(mp.field, mp.b.space, mp.a.space)
    assert DeformationMap(mp, good).r is good


def test_budget_guard(gen):
    mp = gen.mp_21_f3()
    with pytest.raises(BudgetExceeded):
        enumerate_deformations(mp, budget=3)
