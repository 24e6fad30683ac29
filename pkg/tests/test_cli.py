"""Command line interface: exit codes, reports, determinism, side files."""

import json
import os

from altext.cli import main
from altext.core import Algebra
from altext.documents import dumps
from altext.fields import PrimeField
from altext.spaces import BilinearMap, space
from altext.unified import zero_datum

from conftest import fixture_path, fixture_text

F5 = PrimeField(5)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_alternative_pass(capsys):
    code, out, err = run(capsys, "check", "alternative",
                         fixture_path("octonions.alg"))
    assert code == 0
    assert "oracle: Pass" in out
    assert err == ""


def test_check_alternative_fail_with_witness(capsys):
    code, out, _ = run(capsys, "check", "alternative",
                       fixture_path("sedenions.alg"))
    assert code == 1
    assert "oracle: Fail" in out
    assert "kind=right-alternative" in out
    assert "args=(1, 2, 12)" in out


def test_json_report_schema(capsys):
    code, out, _ = run(capsys, "check", "datum",
                       fixture_path("valid_datum_22_f5.ext"), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "report/v1"
    assert rep["command"] == "check datum"
    assert rep["oracle"]["status"] == "Pass"
    assert set(rep["conditions"]) == {f"A{i}" for i in range(1, 20)}
    assert rep["discrepancies"] == []


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "check", "alternative", "/nonexistent.alg")
    assert code == 2
    assert "error" in err


def test_wrong_schema_is_input_error(capsys):
    code, _, err = run(capsys, "check", "alternative",
                       fixture_path("valid_datum_22_f5.ext"))
    assert code == 2
    assert "error" in err


def test_budget_exhaustion_is_exit_3(capsys):
    code, _, err = run(capsys, "classify", "extensions",
                       fixture_path("dual_numbers_f5.alg"),
                       "--vdim", "1", "--budget", "100")
    assert code == 3
    assert "budget exceeded" in err


def test_classify_guard_rejects_infeasible(capsys):
    code, _, err = run(capsys, "classify", "extensions",
                       fixture_path("octonions.alg"), "--vdim", "1")
    assert code == 2


def test_reports_are_deterministic(capsys):
    args = ("check", "matched", fixture_path("mp_11_f5.mp"), "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_unified_build_extract_round_trip(tmp_path, capsys):
    built = tmp_path / "E.alg"
    code, out, _ = run(capsys, "unified", "build",
                       fixture_path("dual_numbers_f5.alg"),
                       fixture_path("valid_datum_22_f5.ext"),
                       "-o", str(built))
    assert code == 0
    assert "wrote" in out

    back = tmp_path / "roundtrip.ext"
    code, out, _ = run(capsys, "unified", "extract", str(built),
                       "-o", str(back), "--sub", "0..2")
    assert code == 0
    assert back.read_text() == fixture_text("valid_datum_22_f5.ext")


def test_unified_build_checks_base_algebra(tmp_path, capsys):
    code, _, err = run(capsys, "unified", "build",
                       fixture_path("idempotent_f5.alg"),
                       fixture_path("valid_datum_22_f5.ext"),
                       "-o", str(tmp_path / "x.alg"))
    assert code == 2
    assert "not over the given base algebra" in err


def test_extract_non_subalgebra_fails_with_witness(tmp_path, capsys):
    code, out, _ = run(capsys, "unified", "extract",
                       fixture_path("octonions.alg"),
                       "-o", str(tmp_path / "x.ext"), "--sub", "1,2")
    assert code == 1
    assert "not a subalgebra" in out


def test_flag_enumerate_count(capsys):
    code, out, _ = run(capsys, "flag", "enumerate",
                       fixture_path("zero0_f5.alg"), "--count")
    assert code == 0
    assert out.strip() == "valid: 5"


def test_flag_enumerate_json(capsys):
    code, out, _ = run(capsys, "flag", "enumerate",
                       fixture_path("idempotent_f5.alg"), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["count"] == 60
    assert rep["equiv_classes"] == 7
    assert rep["cohom_classes"] == 12


def test_classify_json_matches_golden(capsys):
    code, out, _ = run(capsys, "classify", "extensions",
                       fixture_path("idempotent_f5.alg"), "--vdim", "1", "--json")
    assert code == 0
    rep = json.loads(out)
    golden = json.loads(fixture_text("goldens/classify.json"))["idempotent_f5_v1"]
    assert rep["raw_valid"] == golden["raw_valid"]
    assert rep["h2_a"] == golden["h2_a"]
    assert rep["h2"] == golden["h2"]


def test_complements_match_golden(capsys):
    code, out, _ = run(capsys, "complements", "enumerate",
                       fixture_path("mp_11_f5.mp"), "--json")
    assert code == 0
    rep = json.loads(out)
    golden = json.loads(fixture_text("goldens/deformations.json"))["mp_11_f5"]
    assert rep["count"] == golden["maps"]
    assert rep["factorization_index"] == golden["index"]


def test_check_deformation(capsys):
    code, out, _ = run(capsys, "check", "deformation",
                       fixture_path("mp_11_f5.mp"),
                       fixture_path("r_zero_11_f5.linmap"))
    assert code == 0


def test_threads_do_not_change_output(capsys):
    args = ("classify", "extensions",
            fixture_path("idempotent_f5.alg"), "--vdim", "1", "--json")
    _, out1, _ = run(capsys, *args, "--threads", "1")
    _, out2, _ = run(capsys, *args, "--threads", "2")
    assert out1 == out2


def test_no_side_file_when_concordant(tmp_path, capsys):
    target = tmp_path / "datum.ext"
    target.write_text(fixture_text("valid_datum_22_f5.ext"))
    code, _, _ = run(capsys, "check", "datum", str(target))
    assert code == 0
    assert not os.path.exists(str(target) + ".discrepancies.json")


def test_side_file_written_when_oracle_disagrees(tmp_path, capsys):
    # zero actions are a perfectly fine bimodule over a base that is not
    # alternative; the semidirect oracle rejects the whole thing, B1..B4
    # all pass, and that disagreement must land in the side file
    sp = space(2)
    mul = BilinearMap.from_entries(F5, sp, sp, sp,
                                   [(0, 0, 1, 1), (0, 1, 0, 1)])
    bad = Algebra(sp, mul)
    target = tmp_path / "bad.ext"
    target.write_text(dumps(zero_datum(bad, space(1, "u"))))
    code, out, _ = run(capsys, "check", "bimodule", str(target))
    assert code == 1
    side = str(target) + ".discrepancies.json"
    assert os.path.exists(side)
    disc = json.loads(open(side).read())
    assert disc[0]["oracle"] == "Fail"
    assert disc[0]["condition_status"] == "all parseable Pass"


def test_check_preflag_document(tmp_path, capsys):
    from altext.flags import PreFlagDatum
    from altext.sampling import pre_pool
    from altext.spaces import LinearFunctional, LinearMap

    pa = pre_pool(F5, 1)[1]
    zf = LinearFunctional(F5, pa.space, (0,))
    zm = LinearMap.zero(F5, pa.space, pa.space)
    f = PreFlagDatum(pa, zf, zf, zf, zf, zm, zm, zm, zm, (0,), (0,), 0, 0)
    target = tmp_path / "f.flag"
    target.write_text(dumps(f))
    code, out, _ = run(capsys, "check", "preflag", str(target))
    assert code == 0
