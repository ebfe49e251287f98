"""Text forms: ring specs, element literals, matrix literals.

Ring specs look like Z, Zloc(2), Zmod(2,3), GF(2,2), Trunc(GF(2,1),3),
SkewTrunc(GF(2,2),1,2).  Element literals are integer combinations of the
Galois generator w and the truncation variable (x and y are interchangeable)
with + - * / ^ and parentheses; whatever format_element prints parses back to
the same element.  Matrices are [[a,b],[c,d]] with element expressions inside.

Syntax problems raise ParseError with a character position.  Semantic
problems (dividing by a non-unit, w over a prime field) surface as the ring's
own errors.
"""

from .errors import ParseError
from .matrices import Mat2
from .rings import (
    RingSpec,
    galois_field,
    integers,
    localized_integers,
    make_ring,
    mod_prime_power,
    truncated_poly,
    truncated_skew,
)


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.items = []  # (kind, value, pos)
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.items.append(("INT", int(text[i:j]), i))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < n and text[j].isalpha():
                    j += 1
                self.items.append(("NAME", text[i:j], i))
                i = j
                continue
            if ch in "()[],+-*/^":
                self.items.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", position=i)
        self.items.append(("END", None, n))
        self.pos = 0

    def peek(self):
        return self.items[self.pos]

    def next(self):
        tok = self.items[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", position=tok[2])
        return tok

    def expect_end(self):
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"unexpected trailing {tok[1]!r}", position=tok[2])


# ------------------------------------------------------------------ ring specs


def parse_ring_spec(text: str) -> RingSpec:
    toks = _Tokens(text)
    spec = _ring_spec(toks)
    toks.expect_end()
    return spec


def _int_arg(toks) -> int:
    sign = 1
    if toks.peek()[0] == "-":
        toks.next()
        sign = -1
    tok = toks.expect("INT")
    return sign * tok[1]


def _ring_spec(toks) -> RingSpec:
    tok = toks.expect("NAME")
    name = tok[1]
    if name == "Z" and toks.peek()[0] != "(":
        return integers()
    if name == "Z":
        raise ParseError("Z takes no arguments", position=toks.peek()[2])
    toks.expect("(")
    if name == "Zloc":
        p = _int_arg(toks)
        toks.expect(")")
        return localized_integers(p)
    if name == "Zmod":
        p = _int_arg(toks)
        toks.expect(",")
        k = _int_arg(toks)
        toks.expect(")")
        return mod_prime_power(p, k)
    if name == "GF":
        p = _int_arg(toks)
        m = 1
        if toks.peek()[0] == ",":
            toks.next()
            m = _int_arg(toks)
        toks.expect(")")
        return galois_field(p, m)
    if name == "Trunc":
        base = _ring_spec(toks)
        toks.expect(",")
        n = _int_arg(toks)
        toks.expect(")")
        return truncated_poly(base, n)
    if name == "SkewTrunc":
        base = _ring_spec(toks)
        toks.expect(",")
        s = _int_arg(toks)
        toks.expect(",")
        n = _int_arg(toks)
        toks.expect(")")
        return truncated_skew(base, s, n)
    raise ParseError(f"unknown ring family {name!r}", position=tok[2])


def parse_ring(text: str):
    return make_ring(parse_ring_spec(text))


# ------------------------------------------------------------ element literals


def parse_element(ring, text: str):
    toks = _Tokens(text)
    value = _expr(ring, toks)
    toks.expect_end()
    return value


def _expr(ring, toks):
    value = _term(ring, toks)
    while toks.peek()[0] in ("+", "-"):
        op = toks.next()[0]
        rhs = _term(ring, toks)
        value = ring.add(value, rhs) if op == "+" else ring.sub(value, rhs)
    return value


def _term(ring, toks):
    value = _unary(ring, toks)
    while toks.peek()[0] in ("*", "/"):
        op = toks.next()[0]
        rhs = _unary(ring, toks)
        value = ring.mul(value, rhs) if op == "*" else ring.mul(value, ring.invert(rhs))
    return value


def _unary(ring, toks):
    if toks.peek()[0] == "-":
        toks.next()
        return ring.neg(_unary(ring, toks))
    return _power(ring, toks)


def _power(ring, toks):
    base = _atom(ring, toks)
    while toks.peek()[0] == "^":
        toks.next()
        tok = toks.expect("INT")
        exp = tok[1]
        value = ring.one
        for _ in range(exp):
            value = ring.mul(value, base)
        base = value
    return base


def _atom(ring, toks):
    tok = toks.next()
    kind, value, pos = tok
    if kind == "INT":
        return ring.from_int(value)
    if kind == "(":
        inner = _expr(ring, toks)
        toks.expect(")")
        return inner
    if kind == "NAME":
        return _named_element(ring, value, pos)
    raise ParseError(f"unexpected {value!r} in element", position=pos)


def _named_element(ring, name, pos):
    if name == "w":
        if ring.family == "GaloisField" and ring.m >= 2:
            return ring.generator()
        if (
            ring.family in ("TruncatedPoly", "TruncatedSkew")
            and ring.base.m >= 2
        ):
            return ring.embed(ring.base.generator())
        raise ParseError("'w' needs a Galois coefficient field", position=pos)
    if name in ("x", "y"):
        if ring.family in ("TruncatedPoly", "TruncatedSkew"):
            return ring.variable()
        raise ParseError(f"{name!r} needs a truncated ring", position=pos)
    raise ParseError(f"unknown name {name!r}", position=pos)


# ------------------------------------------------------------ matrix literals


def parse_matrix(ring, text: str) -> Mat2:
    toks = _Tokens(text)
    toks.expect("[")
    a, b = _row(ring, toks)
    toks.expect(",")
    c, d = _row(ring, toks)
    toks.expect("]")
    toks.expect_end()
    return Mat2(ring, a, b, c, d)


def _row(ring, toks):
    toks.expect("[")
    first = _expr(ring, toks)
    toks.expect(",")
    second = _expr(ring, toks)
    toks.expect("]")
    return first, second


def matrix_to_literals(A: Mat2):
    R = A.ring
    return [
        [R.format_element(A.a), R.format_element(A.b)],
        [R.format_element(A.c), R.format_element(A.d)],
    ]
