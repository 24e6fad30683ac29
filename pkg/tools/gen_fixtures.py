"""Regenerate everything under fixtures/ deterministically.

Document fixtures are canonical serializations of constructed objects;
JSON goldens are recorded outputs of exhaustive runs (counts, class sizes,
key lists).  Tests rebuild all of these and compare byte for byte, so any
behavioural drift shows up as a fixture diff.

Structures over F3 exist only in code: the document layer enforces the
characteristic hypothesis and refuses to parse them, so their recorded
runs live in JSON goldens rather than document files.
"""

from __future__ import annotations

import json
import os
import sys
from random import Random

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from altext.cayley import cayley_dickson_algebra, octonions, sedenions
from altext.complements import deformation_classes, enumerate_deformations
from altext.core import Algebra
from altext.documents import dumps
from altext.fields import PrimeField
from altext.flags import PreFlagDatum, check_pre_flag, characters, enumerate_flags
from altext.products import CrossedSystem, MatchedPair
from altext.sampling import pre_pool, valid_datum
from altext.spaces import BilinearMap, LinearFunctional, LinearMap, space
from altext.core import alt_of
from altext.unified import classify_extensions, extract_datum

F3 = PrimeField(3)
F5 = PrimeField(5)

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def zero_algebra(field, dim: int, prefix: str = "e") -> Algebra:
    sp = space(dim, prefix)
    return Algebra(sp, BilinearMap.zero(field, sp, sp, sp))


def by_entries(field, dim: int, entries, prefix: str = "e") -> Algebra:
    sp = space(dim, prefix)
    return Algebra(sp, BilinearMap.from_entries(field, sp, sp, sp, entries))


def t2_algebra(field) -> Algebra:
    return by_entries(field, 2, [(0, 0, 0, field.one()), (0, 1, 1, field.one()),
                                 (1, 0, 1, field.one())])


def idempotent_line(field) -> Algebra:
    return by_entries(field, 1, [(0, 0, 0, field.one())])


def mp_11_f5() -> MatchedPair:
    a = idempotent_line(F5)
    spb = space(1, "f")
    b = Algebra(spb, BilinearMap.from_entries(F5, spb, spb, spb, [(0, 0, 0, 1)]))
    z = BilinearMap.zero
    return MatchedPair(a, b, z(F5, a.space, spb, spb), z(F5, spb, a.space, spb),
                       z(F5, a.space, spb, a.space), z(F5, spb, a.space, a.space))


def mp_21_f3() -> MatchedPair:
    """Lex-first valid pair over F3 whose complements split into two
    classes: unital dual numbers acting on a null line by f <| e0 = f."""
    a = t2_algebra(F3)
    spb = space(1, "f")
    b = Algebra(spb, BilinearMap.zero(F3, spb, spb, spb))
    z = BilinearMap.zero
    act_r = BilinearMap.from_entries(F3, spb, a.space, spb, [(0, 0, 0, 1)])
    return MatchedPair(a, b, z(F3, a.space, spb, spb), act_r,
                       z(F3, a.space, spb, a.space), z(F3, spb, a.space, a.space))


def crossed_21_f5() -> CrossedSystem:
    """Null line squaring into a zero plane: nonzero cocycle, all else zero."""
    a = zero_algebra(F5, 2)
    spb = space(1, "w")
    b = Algebra(spb, BilinearMap.zero(F5, spb, spb, spb))
    z = BilinearMap.zero
    cocycle = BilinearMap.from_entries(F5, spb, spb, a.space, [(0, 0, 0, 1)])
    return CrossedSystem(a, b, z(F5, a.space, spb, a.space),
                         z(F5, spb, a.space, a.space), cocycle)


def flag_goldens() -> dict:
    def record(res, keys=False):
        body = {"valid": res.count, "equiv": len(res.equiv_reps),
                "cohom": len(res.cohom_reps), "method": res.method}
        if keys:
            body["keys"] = [[list(part) if isinstance(part, tuple) else part
                             for part in f.key()] for f in res.valid]
        return body

    return {
        "dim0_f5": record(enumerate_flags(zero_algebra(F5, 0))),
        "dim1_f3_idempotent": record(
            enumerate_flags(idempotent_line(F3)), keys=True),
        "dim2_f3_dual_numbers": record(enumerate_flags(t2_algebra(F3))),
        "dim2_f5_dual_numbers": record(enumerate_flags(t2_algebra(F5))),
    }


def classify_goldens() -> dict:
    zero = classify_extensions(zero_algebra(F5, 0), 1)
    idem = classify_extensions(idempotent_line(F5), 1)
    return {
        "zero_f5_v1": {"raw_valid": zero.raw_count, "h2_a": zero.h2_a,
                       "h2": zero.h2},
        "idempotent_f5_v1": {"raw_valid": idem.raw_count, "h2_a": idem.h2_a,
                             "h2": idem.h2},
    }


def deformation_goldens() -> dict:
    out = {}
    for name, mp in (("mp_11_f5", mp_11_f5()), ("mp_21_f3", mp_21_f3())):
        maps = enumerate_deformations(mp)
        classes = deformation_classes(mp)
        out[name] = {
            "maps": len(maps),
            "index": len(classes),
            "class_sizes": [len(c) for c in classes],
            "map_matrices": [[[mp.field.format(x) for x in row]
                              for row in r.matrix] for r in maps],
        }
    return out


def preflag_goldens() -> dict:
    """Oracle verdicts for the one-character pre-flags on 1-dim pre-algebras."""
    rows = []
    sp1 = space(1, "e")
    for pa in pre_pool(F5, 1):
        succ_c = pa.lmul.on_basis(0, 0)[0]
        prec_c = pa.rmul.on_basis(0, 0)[0]
        for lam in characters(alt_of(pa)):
            zf = LinearFunctional(F5, sp1, (0,))
            zm = LinearMap.zero(F5, sp1, sp1)
            f = PreFlagDatum(pa, zf, lam, zf, zf, zm, zm, zm, zm,
                             (0,), (0,), 0, 0)
            rows.append({"succ": succ_c, "prec": prec_c,
                         "lam_gt": lam.coeffs[0],
                         "oracle": "Pass" if check_pre_flag(f).oracle.ok else "Fail"})
    return {"dim1_f5_lambda_gt_character": rows}


def write(name: str, text: str) -> None:
    path = os.path.join(FIXDIR, name)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {os.path.relpath(path)}")


def jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def main() -> None:
    write("octonions.alg", dumps(octonions()))
    write("sedenions.alg", dumps(sedenions()))
    write("quaternions.alg", dumps(cayley_dickson_algebra(2)))

    d, _ = extract_datum(octonions(), tuple(range(4)))
    write("octonion_datum.ext", dumps(d))

    write("zero2_f5.alg", dumps(zero_algebra(F5, 2)))
    write("zero0_f5.alg", dumps(zero_algebra(F5, 0)))
    write("idempotent_f5.alg", dumps(idempotent_line(F5)))
    write("dual_numbers_f5.alg", dumps(t2_algebra(F5)))

    write("mp_11_f5.mp", dumps(mp_11_f5()))
    write("crossed_21_f5.mp", dumps(crossed_21_f5()))

    rng = Random(20260814)
    write("valid_datum_22_f5.ext", dumps(valid_datum(t2_algebra(F5), 2, rng)))
    mp = mp_11_f5()
    write("r_zero_11_f5.linmap",
          dumps(LinearMap.zero(F5, mp.b.space, mp.a.space)))

    write("goldens/flags.json", jdump(flag_goldens()))
    write("goldens/classify.json", jdump(classify_goldens()))
    write("goldens/deformations.json", jdump(deformation_goldens()))
    write("goldens/preflag.json", jdump(preflag_goldens()))


if __name__ == "__main__":
    main()
