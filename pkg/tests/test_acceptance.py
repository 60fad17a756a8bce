"""The eleven acceptance criteria, one test each.

Every test is tagged with its criterion number; the terminal summary prints
one PASS/FAIL line per criterion.  Time budgets are checked on freshly built
rings so earlier tests cannot warm the caches.
"""

import json
import time

import pytest

from ringlab.classifiers import (
    classify,
    gswnc_by_criterion,
    gswnc_by_search,
    is_gsnc,
    is_gswnc,
    is_snc_ring,
    is_swnc_ring,
    swnc_decompose,
)
from ringlab.cli import main
from ringlab.expressions import Builder
from ringlab.groups import augmentation_ideal, augmentation_quotient
from ringlab.harness import Catalog, canonical_json, default_catalog, run_all, run_check
from ringlab.harness.checks import branches
from ringlab.isomorphism import is_isomorphic
from ringlab.subsets import idempotents, is_nil_ideal, nil_set, units

from oracles import TableRing, matmul_mod

A = [[1, 1, 0], [1, 0, 0], [0, 0, 0]]


def fresh(expr):
    return Builder()(expr)


def passed(check_id, cat=None):
    res = run_check(check_id, cat)
    assert res.status == "PASS", (check_id, res.status, [i.labels for i in res.failures])
    return res


@pytest.mark.acceptance(1, "M2(Z2): GSWNC, not SWNC, U + Id + Nil covers all 16 elements")
def test_criterion_01():
    start = time.perf_counter()
    R = fresh("M2(Z2)")
    rep = classify(R)
    assert rep["GSWNC"].holds and not rep["SWNC"].holds
    assert len(set(units(R)) | set(idempotents(R)) | set(nil_set(R))) == 16 == R.size
    assert time.perf_counter() - start < 1


@pytest.mark.acceptance(2, "M3(Z2) is not GSWNC; A = [[1,1,0],[1,0,0],[0,0,0]] fails both A+A^2 and A-A^2")
def test_criterion_02():
    start = time.perf_counter()
    R = fresh("M3(Z2)")
    assert not is_gswnc(R)
    a = R.from_coords(A)
    assert a not in units(R) and swnc_decompose(R, a) is None
    # independent arithmetic on plain lists
    A2 = matmul_mod(A, A, 2)
    for sign in (1, -1):
        B = [[(A[i][j] + sign * A2[i][j]) % 2 for j in range(3)] for i in range(3)]
        P = B
        for _ in range(8):
            P = matmul_mod(P, B, 2)
        assert any(any(row) for row in P)
    res = passed("Thm-2.25", Catalog(("M3(Z2)",), ()))
    assert res.instances[0].witnesses[0]["coords"] == A
    assert time.perf_counter() - start < 1


@pytest.mark.acceptance(3, "GSWNC but not GSNC: M2(Z3), Z3 x Z3, Z2 x Z3; GSWNC: M2(Z4), M2(Z8)")
def test_criterion_03():
    for expr in ("M2(Z3)", "Z3 x Z3", "Z2 x Z3"):
        R = fresh(expr)
        assert is_gswnc(R) and not is_gsnc(R), expr
    assert is_gswnc(fresh("M2(Z4)"))
    start = time.perf_counter()
    R = fresh("M2(Z8)")
    assert R.size == 4096 and is_gswnc(R)
    assert time.perf_counter() - start < 10


@pytest.mark.acceptance(4, "a +/- a^2 criterion agrees with decomposition search on every catalog ring")
def test_criterion_04():
    start = time.perf_counter()
    cat = Catalog(default_catalog().ring_labels, default_catalog().pairs)
    for R in cat.rings():
        assert gswnc_by_criterion(R) == gswnc_by_search(R), R.label
    res = passed("Prop-2.11", cat)
    assert res.applicable == len(cat)
    assert time.perf_counter() - start < 60


LATTICE = [
    "Cor-2.3", "Cor-2.12", "Cor-2.36", "Lemma-2.10", "Lemma-2.30", "Lemma-2.31", "Lemma-2.55",
    "Prop-2.5", "Cor-2.50", "Lemma-2.49", "Lemma-2.2", "Lemma-2.14",
]


@pytest.mark.acceptance(5, "implication lattice: zero violations over the catalog")
def test_criterion_05():
    results = run_all(ids=LATTICE)
    assert len(results) >= len(LATTICE)
    bad = [(r.id, r.status) for r in results if r.status != "PASS"]
    assert not bad


@pytest.mark.acceptance(6, "Z2 x Z2 x Z3 is GSWNC, Z2 x Z3 x Z3 is not, confirmed by brute force")
def test_criterion_06():
    R, S = fresh("Z2 x Z2 x Z3"), fresh("Z2 x Z3 x Z3")
    assert is_gswnc(R) and not is_gswnc(S)
    assert TableRing(R).gswnc and not TableRing(S).gswnc


@pytest.mark.acceptance(7, "trivial extension, skew triangular, S2 and formal matrix equivalences")
def test_criterion_07():
    for base in ("Z4", "Z3 x Z3"):
        assert bool(is_gswnc(fresh(base))) == bool(is_gswnc(fresh(f"TE({base})")))
    for base, alpha in (("GF(2,2)", "frobenius"), ("Z4", "id")):
        assert bool(is_gswnc(fresh(base))) == bool(is_gswnc(fresh(f"Tskew2({base}, {alpha})")))
    for base in ("Z3", "Z4"):
        assert bool(is_gswnc(fresh(base))) == bool(is_gswnc(fresh(f"S2({base})")))
    assert is_snc_ring(fresh("Z4")) and is_gswnc(fresh("K(Z4, 2)"))
    assert fresh("MF2(Z4, 2)").same_tables(fresh("K(Z4, 0)"))
    for cid in ("Cor-2.17(=>)", "Cor-2.17(<=)", "Cor-2.20(=>)", "Cor-2.20(<=)", "Cor-2.57(=>)", "Cor-2.57(<=)", "Cor-2.44(identity)"):
        passed(cid)


@pytest.mark.acceptance(8, "T3(Z2) is GSWNC, T3(Z3) is not")
def test_criterion_08():
    start = time.perf_counter()
    assert is_snc_ring(fresh("Z2")) and not is_snc_ring(fresh("Z3"))
    assert is_gswnc(fresh("T3(Z2)"))
    R = fresh("T3(Z3)")
    assert R.size == 729 and not is_gswnc(R)
    assert time.perf_counter() - start < 5


@pytest.mark.acceptance(9, "every GSWNC catalog ring lies in a branch of the semi-local characterisation")
def test_criterion_09():
    cat = default_catalog()
    for R in cat.rings():
        if is_gswnc(R):
            hit, notes = branches(cat, R)
            assert hit, (R.label, notes)
    M = cat.ring("M2(Z3)")
    assert "R/J = M2(Z3)" in branches(cat, M)[0]
    assert "R/J = Z3 x Z3" in branches(cat, cat.ring("TE(Z3 x Z3)"))[0]
    passed("Thm-2.36(=>)")


@pytest.mark.acceptance(10, "group rings: verdicts, 2-group consistency, nil augmentation ideals, RG/D = R")
def test_criterion_10():
    start = time.perf_counter()
    b = Builder()
    expected = {("Z2", "C2"): True, ("Z4", "C2"): True, ("Z2", "C2 x C2"): True, ("Z2", "C3"): False, ("Z6", "C2"): False, ("Z3", "C3"): True}
    for (r, g), want in expected.items():
        RG = b(f"GR({r}, {g})")
        assert bool(is_gswnc(RG)) == want == TableRing(RG).gswnc, RG.label
        assert augmentation_quotient(RG).same_tables(b(r))
    for r in ("Z2", "Z4"):
        RG = b(f"GR({r}, C2)")
        assert is_nil_ideal(RG, augmentation_ideal(RG))
    elapsed = time.perf_counter() - start
    pairs = tuple(expected)
    cat = Catalog(("Z2",), pairs)
    for cid in ("Thm-3.3", "Example-3.4(=>)", "Example-3.4(<=)", "Lemma-3.2", "Lemma-3.1(RG/Delta)"):
        passed(cid, cat)
    for RG in default_catalog().group_rings():
        base = RG.label[3:].split(",")[0]
        assert is_isomorphic(augmentation_quotient(RG), default_catalog().ring(base))
    assert elapsed < 5


@pytest.mark.acceptance(11, "verify all exits 0 with no FAIL or VACUOUS; canonical report byte-stable")
def test_criterion_11(capsys):
    start = time.perf_counter()
    code = main(["--format", "json", "verify", "all"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert code == 0
    assert doc["summary"]["FAIL"] == 0 and doc["summary"]["VACUOUS"] == 0
    for rec in doc["checks"]:
        rec.pop("wall_time")
    first = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    second = canonical_json(run_all(Catalog(default_catalog().ring_labels, default_catalog().pairs)))
    assert first == second
    assert time.perf_counter() - start < 300


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
