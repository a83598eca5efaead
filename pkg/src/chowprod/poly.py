"""Sparse integer polynomials in the vertex classes C_v.

A monomial is a sorted tuple of vertex labels (each label itself a tuple of
factor labels); a polynomial is a dict mapping monomials to nonzero
coefficients.  Coefficients are ints, or Fractions where a computation
needs denominators.  The text form round-trips through parse/format:

    3*C(0,1)*C(1,1)^2 - C(0,0)^3 + 2
"""

import re
from fractions import Fraction

from .errors import ExprParseError


def mono(*vertices):
    """Canonical monomial from vertex tuples: sorted by label."""
    return tuple(sorted(vertices))


class Poly:

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def variable(cls, vertex, coeff=1):
        return cls({(vertex,): coeff})

    @classmethod
    def monomial(cls, m, coeff=1):
        return cls({tuple(sorted(m)): coeff})

    def copy(self):
        p = Poly()
        p.terms = dict(self.terms)
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            p = Poly()
            p.terms = {m: c * other for m, c in self.terms.items()}
            return p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        p = Poly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, e):
        assert e >= 0
        out = Poly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def degree(self):
        """Total degree; 0 for the zero polynomial."""
        return max((len(m) for m in self.terms), default=0)

    def is_homogeneous(self, k=None):
        degs = {len(m) for m in self.terms}
        if k is None:
            return len(degs) <= 1
        return degs <= {k}

    def graded_part(self, k):
        return Poly({m: c for m, c in self.terms.items() if len(m) == k})

    def filter_monomials(self, keep):
        """Drop monomials failing the predicate."""
        return Poly({m: c for m, c in self.terms.items() if keep(m)})

    def map_coeffs(self, f):
        return Poly({m: f(c) for m, c in self.terms.items()})

    def support_vertices(self):
        out = set()
        for m in self.terms:
            out.update(m)
        return out

    def substitute_vertices(self, images):
        """Replace each vertex v by the linear polynomial images[v]."""
        out = Poly()
        for m, c in self.terms.items():
            term = Poly.constant(c)
            for v in m:
                term = term * images[v]
            out = out + term
        return out

    def __repr__(self):
        return "Poly(%s)" % format_poly(self)


def _term_key(m):
    return (-len(m), m)


def _format_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    return str(c)


def format_poly(p, letter="C"):
    """Deterministic text form: descending degree, label-lex within."""
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=_term_key):
        c = p.terms[m]
        factors = []
        i = 0
        while i < len(m):
            j = i
            while j < len(m) and m[j] == m[i]:
                j += 1
            v = "%s(%s)" % (letter, ",".join(str(x) for x in m[i]))
            factors.append(v if j - i == 1 else "%s^%d" % (v, j - i))
            i = j
        body = "*".join(factors)
        if not factors:
            text = _format_coeff(c)
        elif c == 1:
            text = body
        elif c == -1:
            text = "-" + body
        else:
            text = "%s*%s" % (_format_coeff(c), body)
        parts.append(text)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_]\w*|\(|\)|\+|\-|\*|\^|,)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExprParseError(
                    "unexpected character %r at offset %d" % (text[pos], pos)
                )
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    tokens.append((None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over +, -, *, ^ with C(...) atoms and parentheses."""

    def __init__(self, text, letter="C"):
        self.text = text
        self.letter = letter
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise ExprParseError(
                "expected %r at offset %d, found %r" % (expected, pos, tok)
            )
        self.i += 1
        return tok, pos

    def parse(self):
        p = self.expr()
        tok, pos = self.tokens[self.i]
        if tok is not None:
            raise ExprParseError("trailing input at offset %d: %r" % (pos, tok))
        return p

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        out = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take()[0] == "-":
                    sign = -sign
            out = out + self.term() * sign
        return out

    def term(self):
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok, pos = self.take()
            if tok is None or not tok.isdigit():
                raise ExprParseError("exponent must be a nonnegative integer at offset %d" % pos)
            return base ** int(tok)
        return base

    def atom(self):
        tok, pos = self.take()
        if tok is None:
            raise ExprParseError("unexpected end of expression")
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if tok.isdigit():
            return Poly.constant(int(tok))
        if "/" in (tok or "") and tok.replace("/", "").isdigit():
            num, den = tok.split("/")
            return Poly.constant(Fraction(int(num), int(den)))
        if tok == self.letter:
            self.take("(")
            coords = []
            while True:
                t, p2 = self.take()
                neg = False
                if t == "-":
                    neg = True
                    t, p2 = self.take()
                if t is None or not t.isdigit():
                    raise ExprParseError("expected vertex coordinate at offset %d" % p2)
                coords.append(-int(t) if neg else int(t))
                t, _ = self.take()
                if t == ")":
                    break
                if t != ",":
                    raise ExprParseError("expected ',' or ')' at offset %d" % pos)
            return Poly.variable(tuple(coords))
        raise ExprParseError("unexpected token %r at offset %d" % (tok, pos))


def parse_poly(text, letter="C"):
    if not text or not text.strip():
        raise ExprParseError("empty expression")
    return _Parser(text, letter).parse()
