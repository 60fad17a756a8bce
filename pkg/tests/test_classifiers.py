import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringlab.classifiers import (
    DECOMPOSERS,
    PREDICATES,
    SNC,
    SWC,
    SWNC,
    WNC,
    classify,
    criterion_mask,
    gswnc_by_criterion,
    gswnc_by_search,
    has_only_trivial_idempotents,
    is_2_primal,
    is_abelian,
    is_dedekind_finite,
    is_gsnc,
    is_gswnc,
    is_local,
    is_snc_ring,
    is_strongly_pi_regular,
    is_strongly_weakly_clean,
    is_swnc_ring,
    is_uu,
    is_wuu,
    search_mask,
    snc_decompose,
    swc_decompose,
    swnc_decompose,
    wnc_decompose,
)
from ringlab.subsets import idempotents, nil_set, units

from oracles import TableRing

ORACLE_RINGS = [
    "Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12", "GF(2,2)", "GF(3,2)", "Z2 x Z2", "Z2 x Z3", "Z3 x Z3",
    "Z2 x Z2 x Z3", "Z2 x Z3 x Z3", "M2(Z2)", "M2(Z3)", "T2(Z2)", "T2(Z3)", "S2(Z3)", "S2(Z4)",
    "Tskew2(GF(2,2), frobenius)", "K(Z4, 2)", "TE(Z4)", "TE(Z3 x Z3)", "GR(Z2, C2)", "GR(Z2, C3)",
    "GR(Z3, C3)", "GR(Z6, C2)", "GR(Z2, S3)",
]


def test_decomposition_examples(build):
    Z3, Z4, F4, Z2 = build("Z3"), build("Z4"), build("GF(2,2)"), build("Z2")
    d = swnc_decompose(Z3, 2)
    assert (d.sign, d.first_part, d.nil_or_idem_part) == (-1, 1, 0)
    d = swnc_decompose(Z4, 3)
    assert (d.sign, d.first_part, d.nil_or_idem_part) == (1, 1, 2)
    assert d.exponent == 2
    assert swnc_decompose(F4, 2) is None and swnc_decompose(F4, 3) is None
    d = snc_decompose(Z2, 1)
    assert (d.sign, d.first_part, d.nil_or_idem_part) == (1, 1, 0)
    d = wnc_decompose(Z3, 2)
    assert (d.sign, d.first_part, d.nil_or_idem_part) == (-1, 1, 0)
    assert not d.commuting
    d = swc_decompose(Z4, 0)
    assert (d.sign, d.first_part, d.nil_or_idem_part) == (-1, 1, 1)
    assert d.idempotent == 1


def test_predicate_examples(build):
    M2Z2, M3Z2, M2Z3 = build("M2(Z2)"), build("M3(Z2)"), build("M2(Z3)")
    assert is_gswnc(M2Z2)
    v = is_gswnc(M3Z2)
    assert not v and M3Z2.coords(v.counterexample) is not None
    assert is_gswnc(build("Z3 x Z3"))
    assert is_swnc_ring(build("Z6"))
    v = is_swnc_ring(build("Z3 x Z3"))
    assert not v and build("Z3 x Z3").coords(v.counterexample) == [1, 2]
    assert is_swnc_ring(build("Z2"))
    assert is_gswnc(M2Z3) and not is_gsnc(M2Z3)
    assert is_snc_ring(build("Z4")) and is_gsnc(build("Z2"))
    assert is_uu(build("Z4"))
    assert is_wuu(build("Z3")) and not is_uu(build("Z3"))
    assert not is_wuu(M2Z2)
    assert is_local(build("Z4")) and not is_local(build("Z6")) and is_local(build("GF(2,2)"))
    assert is_strongly_pi_regular(M2Z2)
    assert is_dedekind_finite(M3Z2)
    assert classify(build("M2(Z4)"))["GSWNC"].holds
    assert not classify(build("Z2 x Z3 x Z3"))["GSWNC"].holds


def test_two_primal_triangular(build):
    # Nil(T2(Z2)) is exactly the strictly upper part, which is also the prime radical
    T = build("T2(Z2)")
    nil = {tuple(map(tuple, T.coords(i))) for i in nil_set(T)}
    assert nil == {((0, 0), (0, 0)), ((0, 1), (0, 0))}
    assert is_2_primal(T)
    assert not is_2_primal(build("M2(Z2)"))


def test_m3_counterexample_matrix(build):
    R = build("M3(Z2)")
    A = R.from_coords([[1, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert A not in units(R)
    assert swnc_decompose(R, A) is None
    assert not criterion_mask(R, SWNC)[A]


def test_zero_ring_is_everything(build):
    rep = classify(build("Z1"))
    universal = ["GSWNC", "SWNC", "GSNC", "SNC", "WNC", "SWC", "UU", "WUU", "local", "trivial_idempotents",
                 "abelian", "dedekind_finite", "strongly_pi_regular", "2_primal", "commutative"]
    for name in universal:
        assert rep[name].holds, name


def test_report_shape(build):
    R = build("M3(Z2)")
    rep = classify(R)
    assert set(rep.results) == set(PREDICATES)
    for name, v in rep.results.items():
        if not v.holds and name not in ("local", "trivial_idempotents"):
            assert v.counterexample is not None, name
    doc = rep.to_dict(R)
    assert doc["predicates"]["GSWNC"]["verdict"] is False
    assert doc["predicates"]["GSWNC"]["counterexample"]["coords"]


@pytest.mark.parametrize("expr", ORACLE_RINGS)
def test_ring_predicates_match_brute_force(build, expr):
    R = build(expr)
    t = TableRing(R)
    assert bool(is_gswnc(R)) == t.gswnc
    assert bool(is_gsnc(R)) == t.gsnc
    assert bool(is_swnc_ring(R)) == t.swnc_ring
    assert bool(is_snc_ring(R)) == t.snc_ring
    assert bool(is_local(R)) == t.local
    assert bool(is_strongly_weakly_clean(R)) == all(t.swc(a) for a in range(t.n))
    assert gswnc_by_criterion(R) == gswnc_by_search(R) == t.gswnc


@pytest.mark.parametrize("expr", ORACLE_RINGS)
def test_search_order_matches_brute_force(build, expr):
    R = build(expr)
    t = TableRing(R)
    for a in range(R.size):
        want = t.nilclean(a)
        got = swnc_decompose(R, a)
        assert (got is None) == (want is None)
        if got is not None:
            assert (got.sign, got.first_part, got.nil_or_idem_part) == want
        want = t.nilclean(a, signs=(1,))
        got = snc_decompose(R, a)
        assert (got is None) == (want is None)
        if got is not None:
            assert (got.sign, got.first_part, got.nil_or_idem_part) == want
        assert (wnc_decompose(R, a) is None) == (t.nilclean(a, commuting=False) is None)
        assert (swc_decompose(R, a) is None) == (not t.swc(a))


@pytest.mark.parametrize("expr", ORACLE_RINGS)
def test_implication_lattice(build, expr):
    R = build(expr)
    g = bool(is_gswnc(R))
    if is_snc_ring(R):
        assert is_swnc_ring(R)
    if is_swnc_ring(R):
        assert g
    if is_gsnc(R):
        assert g
    if g:
        assert is_strongly_weakly_clean(R)
        assert is_strongly_pi_regular(R)
        assert is_dedekind_finite(R)
    assert bool(is_swnc_ring(R)) == (bool(is_wuu(R)) and g)
    assert bool(is_snc_ring(R)) == (bool(is_uu(R)) and g)
    if has_only_trivial_idempotents(R):
        assert bool(is_abelian(R))


def _check_decomposition(R, a, d):
    assert d.kind in DECOMPOSERS
    if d.kind == SWC:
        u, e = d.first_part, d.nil_or_idem_part
        assert u in units(R) and e in idempotents(R)
        assert R.mul(u, e) == R.mul(e, u)
        rebuilt = R.add(u, e) if d.sign > 0 else R.add(u, R.neg(e))
    else:
        e, q = d.first_part, d.nil_or_idem_part
        assert e in idempotents(R) and q in nil_set(R)
        if d.commuting:
            assert R.mul(e, q) == R.mul(q, e)
        rebuilt = R.add(q, e) if d.sign > 0 else R.add(q, R.neg(e))
        if d.kind == SNC:
            assert d.sign == 1
    assert rebuilt == a


@given(st.data())
def test_decompositions_are_valid(build, data):
    R = build(data.draw(st.sampled_from(ORACLE_RINGS)))
    a = data.draw(st.integers(0, R.size - 1))
    for kind in (SNC, WNC, SWNC, SWC):
        d = DECOMPOSERS[kind](R, a)
        if d is not None:
            _check_decomposition(R, a, d)


@given(st.data())
def test_swnc_element_gives_swc_negative(build, data):
    R = build(data.draw(st.sampled_from(ORACLE_RINGS)))
    a = data.draw(st.integers(0, R.size - 1))
    if swnc_decompose(R, a) is not None:
        assert swc_decompose(R, int(R.neg(a))) is not None


def test_search_mask_matches_criterion_on_large_ring(build):
    R = build("M2(Z8)")
    for kind in (SNC, SWNC):
        assert (criterion_mask(R, kind) == search_mask(R, kind)).all()
    with pytest.raises(ValueError):
        criterion_mask(R, WNC)
