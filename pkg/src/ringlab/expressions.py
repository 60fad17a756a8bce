"""The ring-expression language.

Grammar (LL(1), constructor names case-insensitive)::

    expr    := term ("x" term)*
    term    := "(" expr ")" | ctor
    ctor    := Z<n> | GF "(" p "," k ")"
             | M<n> "(" expr ")" | T<n> "(" expr ")" | S<n> "(" expr ")"
             | Toeplitz<n> "(" expr ")" | TE "(" expr ")"
             | Tskew<n> "(" expr "," alpha ")" | SkewPoly<n> "(" expr "," alpha ")"
             | K "(" expr "," literal ")" | MF<n> "(" expr "," literal ")"
             | GR "(" expr "," group ")" | Q "(" expr ("," literal)* ")"
    group   := gterm ("x" gterm)*
    gterm   := C<n> | D<n> | Q8 | S3 | "(" group ")"
    literal := ["-"] int | "[" literal ("," literal)* "]"

``x`` (or ``×``) is the direct product.  Parenthesised products stay nested,
so printing a parsed canonical expression gives the same text back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Union

from . import config, groups
from .core import constructions as C
from .core.ring import FiniteRing
from .errors import InvalidStructureError, RingError, SizeCapError


class ParseError(RingError, ValueError):
    """Malformed expression; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, text: str, pos: int):
        caret = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {caret}")
        self.message = message
        self.pos = pos


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class GF:
    p: int
    k: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Unary:
    """``M``, ``T``, ``S``, ``Toeplitz`` with a size, or ``TE`` (n = 0)."""

    kind: str
    n: int
    base: "Node"


@dataclass(frozen=True)
class Skew:
    kind: str  # "Tskew" or "SkewPoly"
    n: int
    base: "Node"
    alpha: str


@dataclass(frozen=True)
class Formal:
    """``K(R, s)`` when ``n`` is None, else ``MF<n>(R, s)``."""

    n: int | None
    base: "Node"
    s: Any


@dataclass(frozen=True)
class GroupNode:
    kind: str  # "C", "D", "Q8", "S3", "x"
    n: int = 0
    parts: tuple["GroupNode", ...] = ()


@dataclass(frozen=True)
class GroupRing:
    base: "Node"
    group: GroupNode


@dataclass(frozen=True)
class Quotient:
    base: "Node"
    gens: tuple[Any, ...]


Node = Union[Zmod, GF, Product, Unary, Skew, Formal, GroupRing, Quotient]


def _freeze(value):
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value):
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


# -- lexer --------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-wyzA-WYZ][A-Za-z]*\d*)|(?P<times>[xX×])|(?P<punct>[()\[\],\-]))"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Tok]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


_UNARY = {"m": "M", "t": "T", "s": "S", "toeplitz": "Toeplitz"}
_SKEW = {"tskew": "Tskew", "skewpoly": "SkewPoly"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(message, self.text, tok.pos)

    def take(self, kind: str, text: str | None = None) -> _Tok:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            got = tok.text or "end of input"
            self.fail(f"expected {want!r}, found {got!r}")
        self.i += 1
        return tok

    def punct(self, ch: str) -> None:
        self.take("punct", ch)

    def at_punct(self, ch: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == ch

    # expr := term ("x" term)*
    def expr(self) -> Node:
        factors = [self.term()]
        while self.tok.kind == "times":
            self.i += 1
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self) -> Node:
        if self.at_punct("("):
            self.i += 1
            inner = self.expr()
            self.punct(")")
            if not isinstance(inner, Product):
                return inner
            # keep the grouping so printing reproduces the parentheses
            return _Paren(inner)
        return self.ctor()

    def number(self, what: str, low: int = 1) -> int:
        tok = self.take("num")
        value = int(tok.text)
        if value < low:
            self.fail(f"{what} must be at least {low}", tok)
        return value

    def ctor(self) -> Node:
        tok = self.tok
        if tok.kind != "ident":
            self.fail(f"expected a ring constructor, found {tok.text or 'end of input'!r}")
        self.i += 1
        m = re.fullmatch(r"([A-Za-z]+)(\d*)", tok.text)
        name, digits = m.group(1).lower(), m.group(2)
        size = int(digits) if digits else None

        def need_size():
            if size is None or size < 1:
                self.fail(f"{m.group(1)} needs a positive size suffix", tok)
            return size

        def no_size():
            if size is not None:
                self.fail(f"{m.group(1)} takes no size suffix", tok)

        if name == "z":
            return Zmod(need_size())
        if name == "gf":
            no_size()
            self.punct("(")
            p = self.number("p", 2)
            self.punct(",")
            k = self.number("k")
            self.punct(")")
            return GF(p, k)
        if name in _UNARY:
            n = need_size()
            self.punct("(")
            base = self.expr()
            self.punct(")")
            return Unary(_UNARY[name], n, base)
        if name == "te":
            no_size()
            self.punct("(")
            base = self.expr()
            self.punct(")")
            return Unary("TE", 0, base)
        if name in _SKEW:
            n = need_size()
            self.punct("(")
            base = self.expr()
            self.punct(",")
            alpha = self.take("ident").text
            self.punct(")")
            return Skew(_SKEW[name], n, base, alpha.lower() if alpha.lower() in ("id", "identity", "frobenius") else alpha)
        if name in ("k", "mf"):
            n = None
            if name == "mf":
                n = need_size()
            else:
                no_size()
            self.punct("(")
            base = self.expr()
            self.punct(",")
            s = self.literal()
            self.punct(")")
            return Formal(n, base, s)
        if name == "gr":
            no_size()
            self.punct("(")
            base = self.expr()
            self.punct(",")
            group = self.group()
            self.punct(")")
            return GroupRing(base, group)
        if name == "q":
            no_size()
            self.punct("(")
            base = self.expr()
            gens = []
            while self.at_punct(","):
                self.i += 1
                gens.append(self.literal())
            self.punct(")")
            return Quotient(base, tuple(gens))
        self.fail(f"unknown constructor {m.group(1)!r}", tok)

    def literal(self):
        if self.at_punct("["):
            self.i += 1
            items = [self.literal()]
            while self.at_punct(","):
                self.i += 1
                items.append(self.literal())
            self.punct("]")
            return tuple(items)
        sign = 1
        if self.at_punct("-"):
            self.i += 1
            sign = -1
        tok = self.tok
        if tok.kind != "num":
            self.fail(f"expected an element literal, found {tok.text or 'end of input'!r}")
        self.i += 1
        return sign * int(tok.text)

    def group(self) -> GroupNode:
        parts = [self.gterm()]
        while self.tok.kind == "times":
            self.i += 1
            parts.append(self.gterm())
        return parts[0] if len(parts) == 1 else GroupNode("x", parts=tuple(parts))

    def gterm(self) -> GroupNode:
        if self.at_punct("("):
            self.i += 1
            g = self.group()
            self.punct(")")
            return g
        tok = self.take("ident")
        m = re.fullmatch(r"([A-Za-z]+)(\d*)", tok.text)
        name, digits = m.group(1).upper(), m.group(2)
        if name in ("C", "D") and digits and int(digits) >= 1:
            return GroupNode(name, int(digits))
        if name + digits in ("Q8", "S3"):
            return GroupNode(name + digits)
        self.fail(f"unknown group {tok.text!r}", tok)


@dataclass(frozen=True)
class _Paren:
    inner: Product


def parse(text: str) -> Node:
    """Parse a ring expression into an AST."""
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.tok.text!r}")
    return node


def parse_literal(text: str):
    """Parse an element literal (integer or bracketed coordinate list)."""
    p = _Parser(text)
    value = p.literal()
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.tok.text!r}")
    return _thaw(value)


def parse_group(text: str) -> GroupNode:
    p = _Parser(text)
    g = p.group()
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.tok.text!r}")
    return g


# -- printing -----------------------------------------------------------------


def literal_text(value) -> str:
    if isinstance(value, (tuple, list)):
        return "[" + ",".join(literal_text(v) for v in value) + "]"
    return str(int(value))


def group_text(g: GroupNode) -> str:
    if g.kind == "x":
        return " x ".join(group_text(p) for p in g.parts)
    if g.kind in ("C", "D"):
        return f"{g.kind}{g.n}"
    return g.kind


def to_text(node) -> str:
    """Canonical text; equals the label of the ring :func:`build` returns."""
    if isinstance(node, _Paren):
        return f"({to_text(node.inner)})"
    if isinstance(node, Zmod):
        return f"Z{node.n}"
    if isinstance(node, GF):
        return f"GF({node.p},{node.k})"
    if isinstance(node, Product):
        return " x ".join(to_text(f) for f in node.factors)
    if isinstance(node, Unary):
        if node.kind == "TE":
            return f"TE({to_text(node.base)})"
        return f"{node.kind}{node.n}({to_text(node.base)})"
    if isinstance(node, Skew):
        return f"{node.kind}{node.n}({to_text(node.base)}, {node.alpha})"
    if isinstance(node, Formal):
        head = "K" if node.n is None else f"MF{node.n}"
        return f"{head}({to_text(node.base)}, {literal_text(node.s)})"
    if isinstance(node, GroupRing):
        return f"GR({to_text(node.base)}, {group_text(node.group)})"
    if isinstance(node, Quotient):
        gens = "".join(", " + literal_text(g) for g in node.gens)
        return f"Q({to_text(node.base)}{gens})"
    raise TypeError(f"not an expression node: {node!r}")


def canonical(text: str) -> str:
    return to_text(parse(text))


# -- sizes and construction ---------------------------------------------------


def group_size(g: GroupNode) -> int:
    if g.kind == "x":
        out = 1
        for p in g.parts:
            out *= group_size(p)
        return out
    return {"C": g.n, "D": 2 * g.n, "Q8": 8, "S3": 6}[g.kind]


def predicted_size(node) -> int:
    """Element count implied by the expression (an upper bound for ``Q``)."""
    if isinstance(node, _Paren):
        return predicted_size(node.inner)
    if isinstance(node, Zmod):
        return node.n
    if isinstance(node, GF):
        return node.p**node.k
    if isinstance(node, Product):
        out = 1
        for f in node.factors:
            out *= predicted_size(f)
        return out
    s = predicted_size(node.base)
    if isinstance(node, Unary):
        n = node.n
        exps = {"M": n * n, "T": n * (n + 1) // 2, "S": 1 + n * (n - 1) // 2, "Toeplitz": n, "TE": 2}
        return s ** exps[node.kind]
    if isinstance(node, Skew):
        return s**node.n
    if isinstance(node, Formal):
        return s ** (4 if node.n is None else node.n * node.n)
    if isinstance(node, GroupRing):
        return s ** group_size(node.group)
    if isinstance(node, Quotient):
        return s
    raise TypeError(f"not an expression node: {node!r}")


def _check_sizes(node, cap: int) -> None:
    children = []
    if isinstance(node, _Paren):
        children = [node.inner]
    elif isinstance(node, Product):
        children = list(node.factors)
    elif hasattr(node, "base"):
        children = [node.base]
    for child in children:
        _check_sizes(child, cap)
    size = predicted_size(node)
    if size > cap:
        raise SizeCapError(to_text(node), size, cap)


def build_group(g: GroupNode) -> groups.FiniteGroup:
    if g.kind == "x":
        out = build_group(g.parts[0])
        for p in g.parts[1:]:
            out = groups.make_group_product(out, build_group(p))
        return out
    if g.kind == "C":
        return groups.make_cyclic(g.n)
    if g.kind == "D":
        return groups.make_dihedral(g.n)
    if g.kind == "Q8":
        return groups.make_quaternion8()
    return groups.make_symmetric3()


class Builder:
    """Builds rings from expressions, caching every sub-ring by canonical text."""

    def __init__(self, max_size: int | None = None):
        self.max_size = max_size
        self.cache: dict[str, FiniteRing] = {}

    @property
    def cap(self) -> int:
        return config.max_size() if self.max_size is None else self.max_size

    def __call__(self, expr) -> FiniteRing:
        node = parse(expr) if isinstance(expr, str) else expr
        _check_sizes(node, self.cap)
        return self._build(node)

    def _build(self, node) -> FiniteRing:
        if isinstance(node, _Paren):
            # grouping only: share the inner ring and keep its label
            return self._build(node.inner)
        key = to_text(node)
        if key in self.cache:
            return self.cache[key]
        R = self._make(node)
        if R.label != key:
            R.label = key
        self.cache[key] = R
        return R

    def _element(self, R: FiniteRing, value) -> int:
        value = _thaw(value)
        if isinstance(value, int) and value < 0:
            return int(R.neg(R.integer(-value)))
        return R.from_coords(value)

    def _make(self, node) -> FiniteRing:
        cap = self.cap
        if isinstance(node, Zmod):
            return C.make_zmod(node.n, max_size=cap)
        if isinstance(node, GF):
            return C.make_gf(node.p, node.k, max_size=cap)
        if isinstance(node, Product):
            return C.direct_product([self._build(f) for f in node.factors], max_size=cap)
        base = self._build(node.base)
        if isinstance(node, Unary):
            fn = {
                "M": C.matrix_ring,
                "T": C.upper_triangular,
                "S": C.equal_diag_triangular,
                "Toeplitz": C.toeplitz_triangular,
            }.get(node.kind)
            if node.kind == "TE":
                return C.trivial_extension(base, max_size=cap)
            return fn(base, node.n, max_size=cap)
        if isinstance(node, Skew):
            alpha = C.named_endomorphism(base, node.alpha)
            fn = C.skew_triangular if node.kind == "Tskew" else C.skew_polynomial_quotient
            return fn(base, alpha, node.n, max_size=cap)
        if isinstance(node, Formal):
            s = self._element(base, node.s)
            if node.n is None:
                return C.formal_matrix_ks(base, s, max_size=cap)
            return C.formal_matrix_ns(base, node.n, s, max_size=cap)
        if isinstance(node, GroupRing):
            return groups.group_ring(base, build_group(node.group), max_size=cap)
        if isinstance(node, Quotient):
            from .subsets import ideal_closure

            gens = [self._element(base, g) for g in node.gens]
            return C.quotient(base, ideal_closure(base, gens), label=to_text(node))
        raise TypeError(f"not an expression node: {node!r}")


def build(expr, *, max_size: int | None = None) -> FiniteRing:
    """Parse (if needed) and construct a ring."""
    return Builder(max_size)(expr)


def element(R: FiniteRing, text: str) -> int:
    """Read an element literal of ``R``."""
    value = parse_literal(text)
    if isinstance(value, int) and value < 0:
        return int(R.neg(R.integer(-value)))
    try:
        return R.from_coords(value)
    except (IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidStructureError):
            raise
        raise InvalidStructureError(f"cannot read {text!r} as an element of {R.label}") from exc


__all__ = [
    "Builder",
    "ParseError",
    "build",
    "build_group",
    "canonical",
    "element",
    "group_text",
    "literal_text",
    "parse",
    "parse_group",
    "parse_literal",
    "predicted_size",
    "to_text",
]
