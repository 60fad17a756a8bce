import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ringlab import InvalidStructureError, SizeCapError
from ringlab.expressions import (
    GF,
    Formal,
    GroupNode,
    GroupRing,
    ParseError,
    Product,
    Quotient,
    Skew,
    Unary,
    Zmod,
    _Paren,
    build,
    canonical,
    element,
    parse,
    parse_group,
    parse_literal,
    predicted_size,
    to_text,
)

LABELS = [
    "Z4", "GF(2,2)", "Z2 x Z3", "M2(Z2)", "T3(Z2)", "S2(Z3)", "Toeplitz3(Z2)", "TE(Z3 x Z3)",
    "Tskew2(GF(2,2), frobenius)", "SkewPoly3(GF(2,2), id)", "K(Z4, 2)", "MF2(Z4, 2)", "MF2(Z2 x Z2, [1,0])",
    "GR(Z2, C2 x C2)", "GR(Z2, D4)", "GR(Z2, Q8)", "GR(Z3, S3)", "Q(Z8, 4)", "Q(T2(Z2), [[0,1],[0,0]])",
    "(Z2 x Z2) x Z3",
]


@pytest.mark.parametrize("label", LABELS)
def test_label_is_canonical_text(label):
    R = build(label)
    assert R.label == canonical(label) == label
    assert R.size <= predicted_size(parse(label))


def test_spelling_variants():
    assert canonical("z2 × z3") == "Z2 x Z3"
    assert canonical("m2( z4 )") == "M2(Z4)"
    assert canonical("gr(z2,c2xc2)") == "GR(Z2, C2 x C2)"
    assert canonical("tskew2(gf(2,2),FROBENIUS)") == "Tskew2(GF(2,2), frobenius)"


def test_quotient_and_literals():
    assert build("Q(Z8, 4)").size == 4
    assert build("Q(Z12, 4, 6)").size == 2
    assert parse_literal("[[1,0],[0,-1]]") == [[1, 0], [0, -1]]
    Z4 = build("Z4")
    assert element(Z4, "3") == 3 and element(Z4, "-1") == 3
    M = build("M2(Z2)")
    assert element(M, "1") == M.one
    assert M.coords(element(M, "[[0,1],[1,0]]")) == [[0, 1], [1, 0]]


@pytest.mark.parametrize(
    "text,pos",
    [("M2(Z2", 5), ("Z2 x", 4), ("Q8", 0), ("M2(Z2))", 6), ("GF(2,)", 5), ("K(Z4 2)", 5)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert "^" in str(info.value)


def test_bad_values():
    with pytest.raises(InvalidStructureError):
        build("GF(4,1)")
    with pytest.raises(InvalidStructureError):
        build("Tskew2(Z4, sideways)")
    with pytest.raises(InvalidStructureError):
        element(build("Z4"), "9")
    with pytest.raises(InvalidStructureError):
        element(build("M2(Z2)"), "[1,0]")
    with pytest.raises(SizeCapError):
        build("M3(Z4)", max_size=1000)
    with pytest.raises(ParseError):
        parse_group("C")


def test_group_text_roundtrip():
    for text in ("C2", "C2 x C2", "D4", "Q8", "S3", "C3 x S3"):
        g = parse_group(text)
        assert isinstance(g, GroupNode)
        assert to_text(GroupRing(Zmod(2), g)) == f"GR(Z2, {text})"


# -- round trip over generated syntax trees ------------------------------------

small = st.integers(1, 9)
literals = st.recursive(st.integers(-5, 9), lambda inner: st.lists(inner, min_size=1, max_size=3), max_leaves=6)
groups = st.recursive(
    st.one_of(
        st.builds(lambda n: GroupNode("C", n), small),
        st.builds(lambda n: GroupNode("D", n), st.integers(3, 6)),
        st.just(GroupNode("Q8")),
        st.just(GroupNode("S3")),
    ),
    lambda inner: st.lists(inner.filter(lambda g: g.kind != "x"), min_size=2, max_size=3).map(
        lambda ps: GroupNode("x", parts=tuple(ps))
    ),
    max_leaves=3,
)


def _factor(node):
    return _Paren(node) if isinstance(node, Product) else node


def _extend(inner):
    return st.one_of(
        st.lists(inner, min_size=2, max_size=3).map(lambda fs: Product(tuple(_factor(f) for f in fs))),
        st.builds(lambda k, n, b: Unary(k, n, b), st.sampled_from(["M", "T", "S", "Toeplitz"]), small, inner),
        st.builds(lambda b: Unary("TE", 0, b), inner),
        st.builds(lambda k, n, b, a: Skew(k, n, b, a), st.sampled_from(["Tskew", "SkewPoly"]), small, inner, st.sampled_from(["id", "frobenius"])),
        st.builds(lambda n, b, s: Formal(n, b, s), st.one_of(st.none(), small), inner, literals.map(lambda v: tuple(v) if isinstance(v, list) else v)),
        st.builds(GroupRing, inner, groups),
        st.builds(lambda b, gs: Quotient(b, tuple(gs)), inner, st.lists(st.integers(0, 9), max_size=2)),
    )


exprs = st.recursive(
    st.one_of(st.builds(Zmod, st.integers(1, 30)), st.builds(GF, st.sampled_from([2, 3, 5]), st.integers(1, 3))),
    _extend,
    max_leaves=5,
)


@given(exprs)
def test_print_parse_roundtrip(node):
    text = to_text(node)
    assert to_text(parse(text)) == text
    assert to_text(parse(text.lower())) == text


@given(st.sampled_from(LABELS), st.integers(0, 5))
def test_whitespace_is_insignificant(label, k):
    spaced = label.replace(",", " , " + " " * k).replace("(", "( ")
    assert canonical(spaced) == label


@given(st.data())
def test_predicted_size_matches_build(data):
    label = data.draw(st.sampled_from([l for l in LABELS if not l.startswith("Q(")]))
    assert build(label).size == predicted_size(parse(label))


@given(st.text(alphabet="ZMTxK()[],0123456789 GFR", max_size=12))
def test_parser_never_crashes(text):
    try:
        parse(text)
    except ParseError as exc:
        assert 0 <= exc.pos <= len(text)


def test_parenthesised_factor_keeps_shared_label():
    from ringlab.expressions import Builder

    b = Builder()
    inner = b("Z2 x Z2")
    outer = b("(Z2 x Z2) x Z3")
    assert inner.label == "Z2 x Z2" and outer.label == "(Z2 x Z2) x Z3"
    assert b("(Z2 x Z2)") is inner
