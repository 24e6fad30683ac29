"""Codimension one extensions described by flag datums.

A flag datum is two functionals, two endomorphisms, a vector, and a
scalar; the staged enumeration solves the linear layer before touching
the quadratic one and must agree with the raw scan exactly.
"""

import json

import pytest

from altext.core import Algebra, is_alternative
from altext.errors import BudgetExceeded, DimensionMismatch
from altext.fields import PrimeField
from altext.flags import (
    FlagDatum,
    check_flag,
    check_pre_flag,
    characters,
    enumerate_flags,
    flag_from_datum,
    flag_space_size,
    flag_to_datum,
    pre_flag_to_datum,
)
from altext.sampling import pre_pool
from altext.spaces import BilinearMap, LinearFunctional, LinearMap, space
from altext.unified import zero_datum

from conftest import fixture_text

F3 = PrimeField(3)
F5 = PrimeField(5)


def golden():
    return json.loads(fixture_text("goldens/flags.json"))


def zero_flag(a):
    f = a.field
    z = LinearFunctional(f, a.space, (f.zero(),) * a.dim)
    zm = LinearMap.zero(f, a.space, a.space)
    return FlagDatum(a, z, z, zm, zm, (f.zero(),) * a.dim, f.zero())


def test_flag_datum_round_trip(gen):
    a = gen.t2_algebra(F5)
    lam = LinearFunctional(F5, a.space, (1, 0))
    mu = LinearFunctional(F5, a.space, (1, 0))
    dm = LinearMap.from_rows(F5, a.space, a.space, [(0, 0), (1, 0)])
    f = FlagDatum(a, lam, mu, dm, dm, (0, 2), 3)
    d = flag_to_datum(f)
    assert d.ext.dim == 1
    f2 = flag_from_datum(d)
    assert f2.key() == f.key()


def test_flag_from_datum_needs_line(gen):
    a = gen.t2_algebra(F5)
    d = zero_datum(a, space(2, "u"))
    with pytest.raises(DimensionMismatch):
        flag_from_datum(d)


def test_flag_to_datum_slots(gen):
    a = gen.idempotent_line(F5)
    lam = LinearFunctional(F5, a.space, (2,))
    mu = LinearFunctional(F5, a.space, (3,))
    dm = LinearMap.from_rows(F5, a.space, a.space, [(4,)])
    f = FlagDatum(a, lam, mu, dm, dm, (1,), 2)
    d = flag_to_datum(f)
    assert d.act_l.on_basis(0, 0) == (2,)     # x.u = lam(x) u
    assert d.act_r.on_basis(0, 0) == (3,)     # u.x = mu(x) u
    assert d.coact_l.on_basis(0, 0) == (4,)   # T(x)
    assert d.coact_r.on_basis(0, 0) == (4,)   # D(x)
    assert d.vmul.on_basis(0, 0) == (2,)      # k0 u
    assert d.cocycle.on_basis(0, 0) == (1,)   # x0


def test_characters_of_idempotent_line():
    for fld in (F3, F5):
        sp = space(1)
        a = Algebra(sp, BilinearMap.from_entries(fld, sp, sp, sp,
                                                 [(0, 0, 0, 1)]))
        vals = sorted(c.coeffs[0] for c in characters(a))
        assert vals == [0, 1]


def test_characters_require_multiplicativity(gen):
    a = gen.t2_algebra(F3)
    # on dual numbers: c0^2 = c0 and the nil part forces c1 = c0 c1 twice
    for lam in characters(a):
        c0, c1 = lam.coeffs
        assert (c0 * c0) % 3 == c0
        assert (c0 * c1 * 2) % 3 == c1


def test_space_size(gen):
    assert flag_space_size(gen.idempotent_line(F3)) == 3**6
    assert flag_space_size(gen.t2_algebra(F3)) == 3**15


def test_counts_match_goldens_dim0(gen):
    want = golden()["dim0_f5"]
    res = enumerate_flags(gen.zero_algebra(F5, 0))
    assert res.count == want["valid"] == 5
    assert len(res.equiv_reps) == want["equiv"]
    assert len(res.cohom_reps) == want["cohom"]
    assert res.method == want["method"]


def test_counts_and_keys_match_goldens_dim1(gen):
    want = golden()["dim1_f3_idempotent"]
    res = enumerate_flags(gen.idempotent_line(F3))
    assert res.count == want["valid"]
    assert len(res.equiv_reps) == want["equiv"]
    assert len(res.cohom_reps) == want["cohom"]
    got = [[list(part) if isinstance(part, tuple) else part
            for part in f.key()] for f in res.valid]
    assert got == want["keys"]


def test_raw_and_staged_agree_dim1(gen):
    a = gen.idempotent_line(F3)
    raw = enumerate_flags(a, method="raw")
    staged = enumerate_flags(a, method="staged")
    assert raw.method == "raw" and staged.method == "staged"
    assert [f.key() for f in raw.valid] == [f.key() for f in staged.valid]
    assert len(raw.equiv_reps) == len(staged.equiv_reps)
    assert len(raw.cohom_reps) == len(staged.cohom_reps)


def test_staged_matches_golden_dim2(gen):
    want = golden()["dim2_f3_dual_numbers"]
    res = enumerate_flags(gen.t2_algebra(F3))
    assert res.method == "staged"
    assert res.count == want["valid"]
    assert len(res.equiv_reps) == want["equiv"]
    assert len(res.cohom_reps) == want["cohom"]


def test_every_emitted_flag_passes_oracle(gen):
    res = enumerate_flags(gen.idempotent_line(F3))
    for f in res.valid:
        rep = check_flag(f)
        assert rep.ok
        assert rep.conditions["C6"].status == "SkippedAmbiguous"
        assert rep.conditions["C7"].status == "SkippedAmbiguous"


def test_condition_ids_and_skip_policy(gen):
    rep = check_flag(zero_flag(gen.t2_algebra(F5)))
    assert set(rep.conditions) == {f"C{i}" for i in range(1, 14)}
    for cid in ("C6", "C7"):
        assert rep.conditions[cid].status == "SkippedAmbiguous"
        assert rep.conditions[cid].note


def test_non_alternative_base_has_no_flags():
    sp = space(2)
    # e0 e0 = e1, e0 e1 = e0 is not alternative over F3
    mul = BilinearMap.from_entries(F3, sp, sp, sp,
                                   [(0, 0, 1, 1), (0, 1, 0, 1)])
    a = Algebra(sp, mul)
    assert not is_alternative(a).ok
    assert enumerate_flags(a, method="staged").count == 0


def test_budget_guard(gen):
    with pytest.raises(BudgetExceeded):
        enumerate_flags(gen.idempotent_line(F3), budget=10, method="raw")


def test_rational_base_rejected():
    from altext.cayley import octonions
    from altext.errors import AltextError

    with pytest.raises(AltextError):
        enumerate_flags(octonions())


def test_flags_equal_classify_extensions(gen):
    """Two disjoint enumeration paths must land on the same classification."""
    from altext.unified import classify_extensions

    a = gen.idempotent_line(F5)
    res = enumerate_flags(a)
    cls = classify_extensions(a, 1)
    assert res.count == cls.raw_count
    assert len(res.equiv_reps) == cls.h2_a
    assert len(res.cohom_reps) == cls.h2


def test_pre_flag_golden_rows(gen):
    want = json.loads(fixture_text("goldens/preflag.json"))
    assert gen.preflag_goldens() == want


def test_pre_flag_conditions(gen):
    pa = pre_pool(F5, 1)[0]
    sp = pa.space
    zf = LinearFunctional(F5, sp, (0,))
    zm = LinearMap.zero(F5, sp, sp)
    from altext.flags import PreFlagDatum

    f = PreFlagDatum(pa, zf, zf, zf, zf, zm, zm, zm, zm, (0,), (0,), 0, 0)
    rep = check_pre_flag(f)
    assert set(rep.conditions) == {f"P{i}" for i in range(1, 12)}
    for cid in ("P3", "P4", "P5", "P6"):
        assert rep.conditions[cid].status == "SkippedAmbiguous"
    d = pre_flag_to_datum(f)
    assert d.ext.dim == 1
