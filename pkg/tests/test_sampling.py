"""Seeded samplers: determinism and advertised validity."""

from random import Random

from hypothesis import given, settings, strategies as st

from altext.bimodules import is_bimodule
from altext.core import is_alternative, is_pre_alternative
from altext.fields import PrimeField
from altext.linsolve import is_invertible
from altext.sampling import (
    alternative_pool,
    bimodule_candidates,
    mixed_datums,
    mixed_pre_datums,
    pre_pool,
    random_alternative,
    random_invertible,
    valid_bimodule,
    valid_datum,
    valid_pre_datum,
)
from altext.unified import check_datum

F5 = PrimeField(5)
F7 = PrimeField(7)

seeds = st.integers(min_value=0, max_value=10**9)


def test_pool_members_are_alternative():
    for dim in range(5):
        for a in alternative_pool(F5, dim):
            assert a.dim == dim
            assert is_alternative(a).ok


def test_pre_pool_members_are_pre_alternative():
    for dim in range(3):
        for p in pre_pool(F5, dim):
            assert is_pre_alternative(p).ok


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_random_alternative_is_alternative(seed):
    a = random_alternative(F7, Random(seed), 3)
    assert is_alternative(a).ok


@given(seeds)
@settings(max_examples=20)
def test_random_invertible_is_invertible(seed):
    mat = random_invertible(F5, Random(seed), 3)
    assert is_invertible(F5, mat)


@given(seeds)
@settings(max_examples=10, deadline=None)
def test_equal_seeds_equal_output(seed):
    a1 = random_alternative(F5, Random(seed), 2)
    a2 = random_alternative(F5, Random(seed), 2)
    assert a1.mul.tensor == a2.mul.tensor
    d1 = valid_datum(a1, 2, Random(seed))
    d2 = valid_datum(a2, 2, Random(seed))
    assert d1.key() == d2.key()


@given(seeds)
@settings(max_examples=10, deadline=None)
def test_valid_samplers_deliver(seed):
    rng = Random(seed)
    a = random_alternative(F5, rng, 2)
    assert is_bimodule(valid_bimodule(a, 2, rng)).ok
    assert check_datum(valid_datum(a, 2, rng)).ok


def test_mixed_datums_are_mixed():
    rng = Random(123)
    datums = mixed_datums(F5, 2, 2, rng, 30)
    assert len(datums) == 30
    verdicts = {check_datum(d).ok for d in datums}
    assert verdicts == {True, False}


def test_mixed_pre_datums_are_mixed():
    rng = Random(123)
    datums = mixed_pre_datums(F5, 2, 1, rng, 30)
    assert len(datums) == 30
    from altext.preunified import check_pre_datum

    verdicts = {check_pre_datum(d).ok for d in datums}
    assert verdicts == {True, False}


def test_bimodule_candidates_cover_both_verdicts():
    rng = Random(7)
    a = random_alternative(F5, rng, 2)
    cands = bimodule_candidates(a, 2, rng, 40)
    assert len(cands) == 40
    verdicts = {is_bimodule(b).ok for b in cands}
    assert verdicts == {True, False}


def test_valid_pre_datum_delivers():
    for seed in range(5):
        rng = Random(seed)
        pa = pre_pool(F5, 2)[seed % len(pre_pool(F5, 2))]
        if not is_pre_alternative(pa).ok:
            continue
        d = valid_pre_datum(pa, 1, rng)
        from altext.preunified import check_pre_datum

        assert check_pre_datum(d).ok
