"""Exact scalars: rationals, optionally extended by one formal transcendental t.

Plain rationals are stored as :class:`fractions.Fraction`.  Anything that
actually depends on ``t`` is a :class:`RatFunc`, an element of Q(t) kept in
canonical form.  Arithmetic between the two types collapses back to
``Fraction`` whenever the ``t`` dependence cancels, so callers only ever see
a ``RatFunc`` when it is genuinely non-constant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import InputError, UnorderedScalar

__all__ = [
    "RatFunc",
    "Scalar",
    "T",
    "as_scalar",
    "format_scalar",
    "is_tau_free",
    "parse_scalar",
]

IntPoly = tuple  # coefficients, lowest degree first, no trailing zeros


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _primitive(p):
    g = _content(p)
    if g == 0:
        return ()
    q = tuple(c // g for c in p)
    if q[-1] < 0:
        q = _pneg(q)
    return q


def _prem(a, b):
    # pseudo-remainder of a by b over Z
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = list(_trim(r))
    return tuple(r)


def _pgcd(a, b):
    """Primitive gcd in Z[t] (positive leading coefficient)."""
    a, b = _primitive(a), _primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _primitive(_prem(a, b))
        a, b = b, r
    return a


def _pdiv_exact(a, b):
    """Exact division a / b in Z[t] where b divides a in Q[t] and b is primitive."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(r) - 1 >= db and any(r):
        shift = len(r) - 1 - db
        f = r[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("non-integral quotient")
        out.append(int(c))
    return _trim(out)


class RatFunc:
    """Element of Q(t) that is not a constant.

    ``num`` and ``den`` are integer polynomials (lowest degree first) with
    gcd 1 in Q[t], joint integer content 1, and positive leading coefficient
    of ``den``.  Use :func:`make_ratfunc` to build one; it returns a
    ``Fraction`` when the value is constant.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den):
        self.num = num
        self.den = den
        self._hash = None

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _parts(x):
        if isinstance(x, RatFunc):
            return x.num, x.den
        if isinstance(x, int):
            return _trim((x,)), (1,)
        if isinstance(x, Fraction):
            return _trim((x.numerator,)), (x.denominator,)
        return None

    def __add__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        a, b = self.num, self.den
        c, d = o
        return make_ratfunc(_padd(_pmul(a, d), _pmul(c, b)), _pmul(b, d))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        a, b = self.num, self.den
        c, d = o
        return make_ratfunc(_padd(_pmul(a, d), _pneg(_pmul(c, b))), _pmul(b, d))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return make_ratfunc(_pmul(self.num, o[0]), _pmul(self.den, o[1]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        if not o[0]:
            raise ZeroDivisionError("division by zero in Q(t)")
        return make_ratfunc(_pmul(self.num, o[1]), _pmul(self.den, o[0]))

    def __rtruediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return make_ratfunc(_pmul(o[0], self.den), _pmul(o[1], self.num))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (1 / self) ** (-e)
        out = Fraction(1)
        for _ in range(e):
            out = out * self
        return out

    # comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return False  # constants never live in a RatFunc
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFunc", self.num, self.den))
        return self._hash

    def __bool__(self):
        return True

    def _unordered(self, other):
        raise UnorderedScalar(f"Q(t) carries no order; cannot compare {self}")

    __lt__ = __le__ = __gt__ = __ge__ = _unordered

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    __str__ = lambda self: format_scalar(self)  # noqa: E731

    def layers(self):
        """Coefficients of t^d as Fractions; only valid when the denominator is constant."""
        if len(self.den) != 1:
            raise ValueError("not a polynomial in t")
        d = self.den[0]
        return tuple(Fraction(c, d) for c in self.num)


Scalar = Union[Fraction, RatFunc]

ZERO = Fraction(0)
ONE = Fraction(1)


def make_ratfunc(num, den) -> Scalar:
    """Canonicalize num/den (integer polynomials) into a Fraction or RatFunc."""
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ZERO
    if len(num) == 1 and len(den) == 1:
        return Fraction(num[0], den[0])
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    num = tuple(x // c for x in num)
    den = tuple(x // c for x in den)
    if len(num) == 1 and len(den) == 1:
        return Fraction(num[0], den[0])
    return RatFunc(num, den)


T = RatFunc((0, 1), (1,))


def as_scalar(x) -> Scalar:
    """Coerce int, Fraction, RatFunc or scalar text to a canonical scalar."""
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise InputError(f"not an exact scalar: {x!r}")


def is_tau_free(x) -> bool:
    return not isinstance(x, RatFunc)


def require_rational(x) -> Fraction:
    if isinstance(x, RatFunc):
        raise UnorderedScalar(f"t-dependent value {format_scalar(x)} has no sign")
    return Fraction(x)


# text syntax -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|(t))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"bad scalar text {text!r} at position {pos}")
        num, op, var = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif var is not None:
            out.append(("t", None))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise InputError(f"bad scalar text {self.text!r}: {msg}")

    def parse(self):
        if not self.toks:
            self.fail("empty")
        v = self.expr()
        if self.i != len(self.toks):
            self.fail("trailing input")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if w == 0:
                    self.fail("division by zero")
                v = v / w
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, e = self.take()
            if kind != "num":
                self.fail("exponent must be an integer")
            if neg:
                if v == 0:
                    self.fail("division by zero")
                v = 1 / v
            out = ONE
            for _ in range(e):
                out = out * v
            return out
        return v

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Fraction(val)
        if kind == "t":
            return T
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                self.fail("unbalanced parenthesis")
            return v
        self.fail("unexpected token")


def parse_scalar(text: str) -> Scalar:
    """Parse scalar text such as ``"3/4"``, ``"1/2 + 5*t"`` or ``"(t^2+1)/(2*t-3)"``."""
    if not isinstance(text, str):
        return as_scalar(text)
    return _Parser(text).parse()


def _fmt_poly(coeffs) -> str:
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        if e == 0:
            s = str(c)
        else:
            var = "t" if e == 1 else f"t^{e}"
            if c == 1:
                s = var
            elif c == -1:
                s = "-" + var
            else:
                s = f"{c}*{var}"
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def format_scalar(x) -> str:
    """Canonical text for a scalar; ``parse_scalar`` inverts it exactly."""
    if isinstance(x, RatFunc):
        if len(x.den) == 1:
            return _fmt_poly([Fraction(c, x.den[0]) for c in x.num])
        num = _fmt_poly(x.num)
        if sum(1 for c in x.num if c) > 1:
            num = f"({num})"
        return f"{num}/({_fmt_poly(x.den)})"
    x = Fraction(x)
    return str(x)
