"""Command line interface.

One verb per construction: check, unified (build/extract), classify,
complements, flag.  Exit codes: 0 pass/success, 1 fail with a printed
witness, 2 input error, 3 budget exceeded.  All output is deterministic;
--json swaps the text report for a canonical report/v1 JSON object.
Condition lists never affect exit codes; oracle/condition disagreements go
to a side file next to the input, only when there are any.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .bimodules import Bimodule, bimodule_report, semidirect
from .complements import deformation_classes, enumerate_deformations, is_deformation
from .core import Algebra, PreAlgebra, is_alternative, is_pre_alternative
from .documents import dumps, load_path
from .fields import PrimeField
from .flags import FlagDatum, PreFlagDatum, check_flag, check_pre_flag, enumerate_flags
from .preunified import PreExtendingDatum, check_pre_datum
from .products import CrossedSystem, MatchedPair, check_crossed, check_matched
from .spaces import LinearMap
from .unified import ExtendingDatum, check_datum, classify_extensions, extract_datum, unified_product

DEFAULT_CLASSIFY_BUDGET = 2_000_000


def _enc_scalars(field, vec):
    return [field.format(x) for x in vec]


def _enc_witness(w, field):
    if w is None:
        return None
    return {
        "kind": w.kind,
        "args": list(w.args),
        "defect": _enc_scalars(field, w.defect) if w.defect is not None else None,
    }


def _enc_cond(res, field):
    body = {"status": res.status}
    if res.note:
        body["note"] = res.note
    if res.witness is not None:
        body["witness"] = list(res.witness)
    return body


def _discrepancies(report, field):
    """Oracle verdict vs the conjunction of parseable printed conditions."""
    if report.concordant:
        return []
    if report.oracle.ok:
        return [{
            "condition": cid,
            "condition_status": "Fail",
            "oracle": "Pass",
            "witness": list(report.conditions[cid].witness or ()),
        } for cid in report.failures()]
    return [{
        "condition": None,
        "condition_status": "all parseable Pass",
        "oracle": "Fail",
        "witness": _enc_witness(report.oracle.witness, field),
    }]


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _side_file(path: str, disc: list) -> None:
    if disc:
        with open(path + ".discrepancies.json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(disc, sort_keys=True, indent=2) + "\n")


def _witness_line(w, field) -> str:
    defect = ""
    if w.defect is not None:
        defect = " defect=(" + ", ".join(field.format(x) for x in w.defect) + ")"
    return f"witness: kind={w.kind} args={tuple(w.args)}{defect}"


def _report_cmd(args, command: str, field, oracle, conditions=None) -> int:
    conditions = conditions or {}
    disc = []
    if conditions:
        from .conditions import OracleReport
        rep = OracleReport(oracle=oracle, conditions=conditions)
        disc = _discrepancies(rep, field)
    payload = {
        "schema": "report/v1",
        "command": command,
        "oracle": {"status": "Pass" if oracle.ok else "Fail",
                   "witness": _enc_witness(oracle.witness, field)},
        "conditions": {cid: _enc_cond(res, field)
                       for cid, res in conditions.items()},
        "discrepancies": disc,
    }
    lines = [f"command: {command}", f"oracle: {'Pass' if oracle.ok else 'Fail'}"]
    if not oracle.ok:
        lines.append(_witness_line(oracle.witness, field))
    for cid in sorted(conditions, key=_cond_key):
        lines.append(f"{cid}: {conditions[cid]}")
    if conditions:
        lines.append(f"discrepancies: {len(disc)}")
    _emit(payload, args.json, lines)
    _side_file(args.infile, disc)
    return 0 if oracle.ok else 1


def _cond_key(cid: str):
    head = cid.rstrip("0123456789")
    return (head, int(cid[len(head):] or 0))


def _expect(doc: Document, cls, what: str):
    if not isinstance(doc.obj, cls):
        raise errors.SchemaError("schema", f"expected a {what} document, got {doc.schema!r}")
    return doc.obj


# ---------------------------------------------------------------------------
# check


def _cmd_check(args) -> int:
    doc = load_path(args.infile)
    kind = args.kind
    if kind == "alternative":
        a = _expect(doc, Algebra, "algebra")
        return _report_cmd(args, "check alternative", a.field, is_alternative(a))
    if kind == "prealternative":
        a = _expect(doc, PreAlgebra, "prealgebra")
        return _report_cmd(args, "check prealternative", a.field,
                           is_pre_alternative(a))
    if kind == "bimodule":
        d = _expect(doc, ExtendingDatum, "datum")
        b = Bimodule(d.alg, d.ext, d.act_l, d.act_r)
        return _report_cmd(args, "check bimodule", d.field,
                           is_alternative(semidirect(b)), bimodule_report(b))
    if kind == "datum":
        d = _expect(doc, ExtendingDatum, "datum")
        rep = check_datum(d)
        return _report_cmd(args, "check datum", d.field, rep.oracle, rep.conditions)
    if kind == "predatum":
        d = _expect(doc, PreExtendingDatum, "predatum")
        rep = check_pre_datum(d)
        return _report_cmd(args, "check predatum", d.field, rep.oracle, rep.conditions)
    if kind == "matched":
        mp = _expect(doc, MatchedPair, "matchedpair")
        rep = check_matched(mp)
        return _report_cmd(args, "check matched", mp.a.field, rep.oracle, rep.conditions)
    if kind == "crossed":
        cs = _expect(doc, CrossedSystem, "crossed")
        rep = check_crossed(cs)
        return _report_cmd(args, "check crossed", cs.a.field, rep.oracle, rep.conditions)
    if kind == "deformation":
        mp = _expect(doc, MatchedPair, "matchedpair")
        rdoc = load_path(args.mapfile)
        r = _expect(rdoc, LinearMap, "linmap")
        return _report_cmd(args, "check deformation", mp.a.field,
                           is_deformation(mp, r))
    if kind == "flag":
        f = _expect(doc, FlagDatum, "flag")
        rep = check_flag(f)
        return _report_cmd(args, "check flag", f.field, rep.oracle, rep.conditions)
    if kind == "preflag":
        f = _expect(doc, PreFlagDatum, "preflag")
        rep = check_pre_flag(f)
        return _report_cmd(args, "check preflag", f.field, rep.oracle, rep.conditions)
    raise errors.SchemaError("kind", f"unknown check kind {kind!r}")


# ---------------------------------------------------------------------------
# unified build / extract


def _cmd_unified(args) -> int:
    if args.action == "build":
        alg = _expect(load_path(args.algfile), Algebra, "algebra")
        d = _expect(load_path(args.infile), ExtendingDatum, "datum")
        if dumps(d.alg) != dumps(alg):
            raise errors.SchemaError(
                "alg", "datum is not over the given base algebra")
        e = unified_product(d)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(e))
        sys.stdout.write(f"wrote {args.out}\n")
        return 0
    e = _expect(load_path(args.infile), Algebra, "algebra")
    sub = _parse_sub(args.sub)
    d, order = extract_datum(e, sub)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dumps(d))
    sys.stdout.write(f"wrote {args.out} (basis order {order})\n")
    return 0


def _parse_sub(spec: str) -> tuple:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return tuple(range(int(lo), int(hi)))
    return tuple(int(x) for x in spec.split(",") if x != "")


# ---------------------------------------------------------------------------
# classify / complements / flag enumerate


def _require_fp(field):
    if not isinstance(field, PrimeField):
        raise errors.FieldMismatch("enumeration requires a prime field")


def _cmd_classify(args) -> int:
    a = _expect(load_path(args.infile), Algebra, "algebra")
    _require_fp(a.field)
    p, n, m = a.field.p, a.space.dim, args.vdim
    feasible = (p == 5 and n <= 2 and m == 1) or (p == 3 and n <= 2 and m in (1, 2))
    if not feasible:
        raise errors.SchemaError(
            "vdim", f"classification at dims ({n},{m}) over F{p} is not supported; "
            "supported: dim A <= 2 with vdim 1 over F5, vdim 1..2 over F3")
    budget = args.budget if args.budget is not None else DEFAULT_CLASSIFY_BUDGET
    res = classify_extensions(a, m, budget=budget, threads=args.threads)
    payload = {
        "schema": "report/v1",
        "command": "classify extensions",
        "raw_valid": res.raw_count,
        "h2_a": res.h2_a,
        "h2": res.h2,
        "equiv_reps": [json.loads(dumps(d)) for d in res.equiv_reps],
        "cohom_reps": [json.loads(dumps(d)) for d in res.cohom_reps],
    }
    _emit(payload, args.json, [
        f"raw_valid: {res.raw_count}",
        f"equiv_classes: {res.h2_a}",
        f"cohom_classes: {res.h2}",
    ])
    return 0


def _cmd_complements(args) -> int:
    mp = _expect(load_path(args.infile), MatchedPair, "matchedpair")
    _require_fp(mp.a.field)
    maps = enumerate_deformations(mp, budget=args.budget)
    classes = deformation_classes(mp, budget=args.budget)
    payload = {
        "schema": "report/v1",
        "command": f"complements {args.action}",
        "maps": [json.loads(dumps(r)) for r in maps],
        "count": len(maps),
        "factorization_index": len(classes),
    }
    if args.action == "enumerate":
        fld = mp.a.field
        lines = [f"maps: {len(maps)}"]
        for r in maps:
            ents = [f"({i},{j})={fld.format(v)}"
                    for i, row in enumerate(r.matrix)
                    for j, v in enumerate(row) if v != fld.zero()]
            lines.append("  " + (" ".join(ents) if ents else "zero"))
    else:
        lines = [f"factorization_index: {len(classes)}"]
    _emit(payload, args.json, lines)
    return 0


def _cmd_flag(args) -> int:
    a = _expect(load_path(args.infile), Algebra, "algebra")
    _require_fp(a.field)
    res = enumerate_flags(a, budget=args.budget, threads=args.threads)
    payload = {
        "schema": "report/v1",
        "command": "flag enumerate",
        "method": res.method,
        "count": res.count,
        "equiv_classes": len(res.equiv_reps),
        "cohom_classes": len(res.cohom_reps),
        "valid": [json.loads(dumps(f)) for f in res.valid],
    }
    lines = [f"valid: {res.count}"]
    if not args.count:
        lines += [f"equiv_classes: {len(res.equiv_reps)}",
                  f"cohom_classes: {len(res.cohom_reps)}",
                  f"method: {res.method}"]
    _emit(payload, args.json, lines)
    return 0


# ---------------------------------------------------------------------------


def _add_common(parser, budget=True):
    parser.add_argument("--json", action="store_true",
                        help="emit a canonical report/v1 JSON object")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for sampling commands (reports are "
                             "byte-identical for equal seeds)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap for long enumerations")
    if budget:
        parser.add_argument("--budget", type=int, default=None,
                            help="candidate-count ceiling; exceeding it exits 3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="altext",
        description="Exact extending structures of alternative algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    chk = sub.add_parser("check", help="verify a structure against its oracle")
    chk.add_argument("kind", choices=[
        "alternative", "prealternative", "bimodule", "datum", "predatum",
        "matched", "crossed", "deformation", "flag", "preflag"])
    chk.add_argument("infile")
    chk.add_argument("mapfile", nargs="?",
                     help="linmap document (check deformation only)")
    _add_common(chk)
    chk.set_defaults(fn=_cmd_check)

    uni = sub.add_parser("unified", help="build or split a unified product")
    uni.add_argument("action", choices=["build", "extract"])
    uni.add_argument("algfile", nargs="?",
                     help="base algebra document (build only)")
    uni.add_argument("infile", help="datum document (build) or ambient algebra (extract)")
    uni.add_argument("-o", "--out", required=True)
    uni.add_argument("--sub", default=None,
                     help="subalgebra basis indices, 'lo..hi' half open or comma list")
    _add_common(uni)
    uni.set_defaults(fn=_cmd_unified)

    cls = sub.add_parser("classify", help="classify extensions of an algebra")
    cls.add_argument("what", choices=["extensions"])
    cls.add_argument("infile")
    cls.add_argument("--vdim", type=int, required=True)
    _add_common(cls)
    cls.set_defaults(fn=_cmd_classify)

    com = sub.add_parser("complements", help="deformation maps of a matched pair")
    com.add_argument("action", choices=["enumerate", "index"])
    com.add_argument("infile")
    _add_common(com)
    com.set_defaults(fn=_cmd_complements)

    flg = sub.add_parser("flag", help="enumerate codimension-1 structures")
    flg.add_argument("action", choices=["enumerate"])
    flg.add_argument("infile")
    flg.add_argument("--count", action="store_true", help="print the count only")
    _add_common(flg)
    flg.set_defaults(fn=_cmd_flag)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "command", None) == "unified":
        if args.action == "build" and args.algfile is None:
            ap.error("unified build needs ALGFILE and DATUMFILE")
        if args.action == "extract" and args.sub is None:
            ap.error("unified extract needs --sub")
    if getattr(args, "command", None) == "check" and args.kind == "deformation":
        if args.mapfile is None:
            ap.error("check deformation needs a linmap document")
    try:
        return args.fn(args)
    except errors.BudgetExceeded as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return 3
    except errors.NotASubalgebra as exc:
        sys.stdout.write(f"Fail: not a subalgebra, witness pair {exc.pair}\n")
        return 1
    except errors.NotADeformation as exc:
        sys.stdout.write(f"Fail: not a deformation map, witness {exc.witness}\n")
        return 1
    except errors.AltextError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
