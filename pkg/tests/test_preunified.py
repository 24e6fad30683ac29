"""Pre-extending datums and the collapse to the alternative world."""

from random import Random

from hypothesis import given, settings, strategies as st

from altext.core import alt_of, is_alternative, is_pre_alternative
from altext.preunified import (
    check_pre_datum,
    collapse_datum,
    pre_unified_product,
    zero_pre_datum,
)
from altext.fields import PrimeField
from altext.sampling import (
    mixed_pre_datums,
    pre_pool,
    random_pre_datum,
    valid_pre_datum,
)
from altext.spaces import space
from altext.unified import unified_product

F5 = PrimeField(5)


def test_zero_pre_datum_of_valid_base_is_valid():
    for pa in pre_pool(F5, 2):
        d = zero_pre_datum(pa, space(1, "u"))
        assert check_pre_datum(d).ok == is_pre_alternative(pa).ok


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=20, deadline=None)
def test_valid_pre_sampler_and_alt_of(seed):
    rng = Random(seed)
    pa = pre_pool(F5, 2)[rng.randrange(len(pre_pool(F5, 2)))]
    d = valid_pre_datum(pa, 1, rng)
    e = pre_unified_product(d)
    assert is_pre_alternative(e).ok
    # a valid pre-structure always shadows an alternative algebra
    assert is_alternative(alt_of(e)).ok


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=20, deadline=None)
def test_collapse_identity_entrywise(seed):
    rng = Random(seed)
    for d in mixed_pre_datums(F5, 2, 1, rng, 4):
        lhs = alt_of(pre_unified_product(d))
        rhs = unified_product(collapse_datum(d))
        assert lhs.mul.tensor == rhs.mul.tensor
        assert lhs.space.labels == rhs.space.labels


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=15, deadline=None)
def test_pre_oracle_concordant_with_conditions(seed):
    rng = Random(seed)
    for d in mixed_pre_datums(F5, 1, 1, rng, 6):
        rep = check_pre_datum(d)
        parse_ok = all(r.status != "Fail" for r in rep.conditions.values())
        assert rep.oracle.ok == parse_ok


def test_pre_condition_table_ids():
    pa = pre_pool(F5, 1)[0]
    d = zero_pre_datum(pa, space(1, "u"))
    rep = check_pre_datum(d)
    assert set(rep.conditions) == {f"PD{i}" for i in range(1, 49)}


def test_valid_pre_implies_collapse_valid():
    rng = Random(17)
    count = 0
    for d in mixed_pre_datums(F5, 2, 1, rng, 40):
        if check_pre_datum(d).ok:
            count += 1
            assert is_alternative(unified_product(collapse_datum(d))).ok
    assert count > 0


def test_random_pre_datum_shapes():
    pa = pre_pool(F5, 2)[0]
    d = random_pre_datum(pa, 2, Random(0))
    assert len(d.maps()) == 12
    e = pre_unified_product(d)
    assert e.space.dim == 4
