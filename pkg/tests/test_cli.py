import json
import subprocess
import sys

import pytest

from ringlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "M2(Z3)")
    assert code == 0
    lines = {l.split()[0]: l.split()[1] for l in out.splitlines()[1:]}
    assert lines["GSWNC"] == "true" and lines["GSNC"] == "false" and lines["SWNC"] == "false"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "classify", "M3(Z2)")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1
    assert doc["predicates"]["GSWNC"]["verdict"] is False
    assert doc["axioms"] == {"ok": True, "mode": "exhaustive"}
    # flags are accepted after the verb too
    code, out, _ = run(capsys, "classify", "Z4", "--format", "json", "--seed", "7")
    assert json.loads(out)["predicates"]["UU"]["verdict"] is True


def test_decompose(capsys):
    code, out, _ = run(capsys, "--format", "json", "decompose", "Z4", "3")
    doc = json.loads(out)["decompositions"]
    assert doc["strongly-weakly-nil-clean"]["sign"] == "+"
    assert doc["strongly-weakly-nil-clean"]["idempotent"]["index"] == 1
    assert doc["strongly-weakly-nil-clean"]["nilpotent"]["index"] == 2
    code, out, _ = run(capsys, "decompose", "GF(2,2)", "2")
    assert code == 0 and "strongly-weakly-nil-clean" in out and "none" in out
    code, out, _ = run(capsys, "decompose", "M3(Z2)", "[[1,1,0],[1,0,0],[0,0,0]]")
    assert code == 0 and "u=" in out


def test_subsets(capsys):
    code, out, _ = run(capsys, "--format", "json", "subsets", "Z12")
    doc = json.loads(out)["subsets"]
    assert [m["index"] for m in doc["jacobson_radical"]["members"]] == [0, 6]
    assert doc["units"]["count"] == 4 and not doc["units"]["elided"]
    code, out, _ = run(capsys, "--format", "json", "subsets", "M2(Z4)")
    doc = json.loads(out)["subsets"]
    assert doc["units"]["elided"] and len(doc["units"]["members"]) == 64


def test_catalog(capsys):
    code, out, _ = run(capsys, "--format", "json", "catalog")
    entries = json.loads(out)["entries"]
    assert code == 0 and {"label": "M2(Z8)", "kind": "ring", "size": 4096} in entries
    assert any(e["kind"] == "group-ring" for e in entries)


def test_verify_selected(capsys):
    code, out, _ = run(capsys, "verify", "Prop-2.11", "--check", "Thm-2.25")
    assert code == 0 and "2 passed, 0 failed, 0 vacuous" in out
    code, out, _ = run(capsys, "--format", "json", "verify", "Example-2.24")
    assert code == 0 and json.loads(out)["summary"]["FAIL"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "M2(Z2"],
        ["--max-size", "10", "classify", "Z12"],
        ["verify", "Prop-9.9"],
        ["decompose", "Z4", "9"],
        ["decompose", "M2(Z2)", "[1,2"],
        ["classify", "GF(6,1)"],
        ["frobnicate"],
        ["--max-size", "0", "classify", "Z2"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err


def test_parse_error_shows_caret(capsys):
    _, _, err = run(capsys, "classify", "M2(Z2")
    assert "position 5" in err and "^" in err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "ringlab", "--format", "json", "classify", "Z2 x Z3"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["predicates"]["GSNC"]["verdict"] is False


def test_failed_check_exits_1(capsys):
    from ringlab.harness.checks import REGISTRY, Instance, check

    @check("Test-fails", "never holds")
    def _never(cat):
        yield Instance(("Z2",), False)

    try:
        code, out, _ = run(capsys, "verify", "Test-fails")
    finally:
        del REGISTRY["Test-fails"]
    assert code == 1 and "FAIL Test-fails: Z2" in out
