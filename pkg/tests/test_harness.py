import json

import pytest

from ringlab.errors import UnknownCheckError
from ringlab.harness import (
    REGISTRY,
    SCHEMA_VERSION,
    Catalog,
    CheckResult,
    Instance,
    canonical_json,
    default_catalog,
    render,
    report,
    resolve_ids,
    run_all,
    run_check,
)
from ringlab.harness.checks import check, location_of


def test_registry_ids_and_locations():
    assert len(REGISTRY) > 60
    for cid, chk in REGISTRY.items():
        assert chk.statement and chk.location
        assert not chk.statement.lower().startswith("see ")
    assert location_of("Prop-2.13(i)(=>)") == "Proposition 2.13"
    assert location_of("Cor-2.7(<=)") == "Corollary 2.7"
    assert location_of("Thm-2.25") == "Theorem 2.25"


def test_resolve_ids():
    assert resolve_ids("all") == list(REGISTRY)
    assert resolve_ids(None) == list(REGISTRY)
    assert resolve_ids(["Prop-2.11"]) == ["Prop-2.11"]
    assert resolve_ids("prop-2.6") == ["Prop-2.6(=>)", "Prop-2.6(<=)"]
    assert resolve_ids("Prop-2.13") == [c for c in REGISTRY if c.startswith("Prop-2.13(")]
    # registry order, duplicates dropped
    assert resolve_ids(["Thm-2.25", "Prop-2.11", "Prop-2.11"]) == ["Prop-2.11", "Thm-2.25"]
    with pytest.raises(UnknownCheckError):
        resolve_ids(["Prop-9.99"])
    with pytest.raises(UnknownCheckError):
        run_check("Prop-9.99")


def test_status_rules():
    a = CheckResult("X", "X", "s", False, [])
    b = CheckResult("Y", "Y", "s", False, [Instance(("Z2",), True)])
    c = CheckResult("W", "W", "s", False, [Instance(("Z2",), True), Instance(("Z3",), False)])
    assert (a.status, b.status, c.status) == ("VACUOUS", "PASS", "FAIL")
    assert c.failures == [c.instances[1]]
    doc = report([a, b, c])
    assert doc["summary"] == {"PASS": 1, "FAIL": 1, "VACUOUS": 1}
    assert report([]) == {"schema_version": SCHEMA_VERSION, "summary": {"PASS": 0, "FAIL": 0, "VACUOUS": 0}, "checks": []}


def test_vacuous_when_no_instance_applies():
    cat = Catalog(("Z2", "Z3"), ())
    res = run_check("Thm-3.3", cat)
    assert res.status == "VACUOUS" and res.applicable == 0


def test_exceptions_become_failures():
    @check("Test-raises", "always raises")
    def _boom(cat):
        raise RuntimeError("boom")
        yield  # pragma: no cover

    try:
        res = run_check("Test-raises", Catalog(("Z2",), ()))
        assert res.status == "FAIL"
        assert res.instances[0].labels == ("<error>",) and "boom" in res.instances[0].note
    finally:
        del REGISTRY["Test-raises"]


def test_literal_group_ring_statement_needs_nontrivial_group():
    # With G trivial the statement about 2-groups reduces to one about R alone,
    # and Z6 is a counterexample: Z6 is GSWNC, 2 is not a unit and not nilpotent.
    cat = Catalog(("Z2",), (("Z6", "C1"),))
    res = run_check("Thm-3.3", cat)
    assert res.status == "FAIL"
    assert res.failures[0].labels == ("GR(Z6, C1)",)


def test_report_records_and_rendering():
    results = run_all(ids=["Prop-2.11", "Thm-2.25"])
    doc = json.loads(render(results, "json"))
    assert doc["schema_version"] == SCHEMA_VERSION
    rec = doc["checks"][0]
    assert list(rec) == ["id", "location", "statement", "status", "bounded", "applicable", "instances", "wall_time"]
    assert rec["applicable"] == len(default_catalog())
    text = render(results, "table")
    assert "Prop-2.11" in text and text.splitlines()[-1] == "2 passed, 0 failed, 0 vacuous"
    with pytest.raises(ValueError):
        render(results, "xml")


def test_canonical_json_is_stable():
    first = canonical_json(run_all(ids=["Lemma-2.2", "Cor-2.17", "Example-3.4"]))
    second = canonical_json(run_all(ids=["Lemma-2.2", "Cor-2.17", "Example-3.4"]))
    assert first == second
    assert "wall_time" not in first


def test_fresh_catalog_gives_same_report():
    ids = ["Prop-2.5", "Cor-2.50(=>)", "Lemma-3.2"]
    fresh = Catalog(default_catalog().ring_labels, default_catalog().pairs)
    assert canonical_json(run_all(fresh, ids)) == canonical_json(run_all(ids=ids))


def test_catalog_contents():
    cat = default_catalog()
    assert "M2(Z8)" in cat and "GR(Z2, Q8)" in cat and "m2(z8)" in cat
    assert len(cat.labels) == len(set(cat.labels))
    with pytest.raises(ValueError):
        Catalog(("Z2", "z2"), ())
