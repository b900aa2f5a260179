"""Exact scalars: rationals and rational functions of one infinitesimal.

Probabilities in this package live in an ordered field. Two fields are
supported: plain rationals (fractions.Fraction) and the field of rational
functions in a single infinitesimal ``e``, ordered by valuation: a nonzero
element is positive exactly when the lowest-degree coefficient of its
numerator is positive, which makes ``e`` a positive element smaller than
every positive rational. The standard part maps a finite element to the
coefficient of ``e^0`` of its series expansion.

All arithmetic is exact. Division by zero raises ZeroDivisionError; the
standard part of an unbounded element (negative valuation) and the
valuation of zero raise ScalarDomainError.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

__all__ = [
    "Rational",
    "Polynomial",
    "InfinitesimalScalar",
    "Scalar",
    "EPSILON",
    "ScalarDomainError",
    "ScalarParseError",
    "scalar_arith",
    "scalar_compare",
    "standard_part",
    "valuation",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
]


class ScalarDomainError(ValueError):
    """Raised for operations outside their domain (e.g. valuation of 0)."""


class ScalarParseError(ValueError):
    """Raised on malformed scalar text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Polynomial:
    """Dense polynomial in the infinitesimal, with Fraction coefficients.

    coeffs[k] multiplies e**k. The tuple never has trailing zeros; the
    zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ScalarDomainError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def low_degree(self) -> int:
        """Exponent of the lowest-degree nonzero term."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        raise ScalarDomainError("low degree of the zero polynomial")

    def low_coeff(self) -> Fraction:
        return self.coeffs[self.low_degree()]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c: Union[int, Fraction]) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(a * c for a in self.coeffs)

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = len(other.coeffs) - 1
        dc = other.coeffs[-1]
        quo = [Fraction(0)] * max(0, len(rem) - dn)
        while len(rem) - 1 >= dn and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dn:
                break
            shift = len(rem) - 1 - dn
            factor = rem[-1] / dc
            quo[shift] = factor
            for k, c in enumerate(other.coeffs):
                rem[shift + k] -= factor * c
        return Polynomial(quo), Polynomial(rem)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


_P_ZERO = Polynomial()
_P_ONE = Polynomial((1,))
_P_EPS = Polynomial((0, 1))


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    # any associate works; make it monic for determinism
    return a.scale(1 / a.coeffs[-1])


class InfinitesimalScalar:
    """Element of the ordered field of rational functions in ``e``.

    Canonical form: numerator and denominator are coprime polynomials and
    the lowest-degree nonzero coefficient of the denominator is 1. With
    that normalization the sign of the element is the sign of the lowest
    nonzero numerator coefficient, which orders ``e`` strictly between 0
    and every positive rational.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = _P_ONE):
        if den.is_zero():
            raise ZeroDivisionError("scalar with zero denominator")
        if num.is_zero():
            num, den = _P_ZERO, _P_ONE
        else:
            g = _poly_gcd(num, den)
            if g.degree() > 0 or g.coeffs[0] != 1:
                num, den = num // g, den // g
            c = den.low_coeff()
            if c != 1:
                num, den = num.scale(1 / c), den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("InfinitesimalScalar is immutable")

    @classmethod
    def from_rational(cls, q: Union[int, Fraction]) -> "InfinitesimalScalar":
        return cls(Polynomial((Fraction(q),)))

    # --- structure ---------------------------------------------------

    def is_rational(self) -> bool:
        return len(self.den.coeffs) == 1 and len(self.num.coeffs) <= 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ScalarDomainError(f"{self} is not rational")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def sign(self) -> int:
        if self.num.is_zero():
            return 0
        return 1 if self.num.low_coeff() > 0 else -1

    def valuation(self) -> int:
        """Lowest power of ``e`` in the series expansion; error on zero."""
        if self.num.is_zero():
            raise ScalarDomainError("valuation of zero is undefined")
        return self.num.low_degree() - self.den.low_degree()

    def standard_part(self) -> Fraction:
        """Coefficient of e^0; error when the element is unbounded."""
        if self.num.is_zero():
            return Fraction(0)
        v = self.valuation()
        if v < 0:
            raise ScalarDomainError(
                f"standard part undefined: valuation {v} < 0"
            )
        if v > 0:
            return Fraction(0)
        # canonical form puts the common low degree at 0 and den[0] == 1
        return self.num.coeffs[0]

    # --- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "InfinitesimalScalar":
        if isinstance(other, InfinitesimalScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return InfinitesimalScalar.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return InfinitesimalScalar(
            self.num * o.den + o.num * self.den, self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return InfinitesimalScalar(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return InfinitesimalScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        return InfinitesimalScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("zero has no negative powers")
            return InfinitesimalScalar(self.den, self.num) ** (-k)
        out = InfinitesimalScalar.from_rational(1)
        for _ in range(k):
            out = out * self
        return out

    # --- order --------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.as_rational())
        return hash(("InfinitesimalScalar", self.num, self.den))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return format_scalar(self)


EPSILON = InfinitesimalScalar(_P_EPS)

Scalar = Union[Fraction, InfinitesimalScalar]


def as_scalar(x: Union[int, Fraction, InfinitesimalScalar]) -> Scalar:
    if isinstance(x, InfinitesimalScalar):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"not a scalar: {x!r}")
    return Fraction(x)


def _lift(x: Scalar) -> InfinitesimalScalar:
    return x if isinstance(x, InfinitesimalScalar) else InfinitesimalScalar.from_rational(x)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply one of add/sub/mul/div to two scalars of either field."""
    a, b = as_scalar(a), as_scalar(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        if op == "div":
            if b == 0:
                raise ZeroDivisionError("scalar division by zero")
            return a / b
    else:
        x, y = _lift(a), _lift(b)
        if op == "add":
            return x + y
        if op == "sub":
            return x - y
        if op == "mul":
            return x * y
        if op == "div":
            return x / y
    raise ValueError(f"unknown operation {op!r}")


def scalar_compare(a: Scalar, b: Scalar) -> int:
    """Total order on either field: -1, 0 or 1."""
    a, b = as_scalar(a), as_scalar(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    return _lift(a)._cmp(_lift(b))


def standard_part(x: Scalar) -> Fraction:
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return x
    return x.standard_part()


def valuation(x: Scalar) -> int:
    x = as_scalar(x)
    if isinstance(x, Fraction):
        if x == 0:
            raise ScalarDomainError("valuation of zero is undefined")
        return 0
    return x.valuation()


# --- text form ---------------------------------------------------------
#
# scalar := sum
# sum    := term (("+" | "-") term)*
# term   := factor (("*" | "/") factor)*
# factor := "-" factor | power
# power  := atom ("^" INT)?
# atom   := INT | "e" | "(" sum ")"

_TOKEN = re.compile(r"\s*(?:(\d+)|([e])|([-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ScalarParseError(f"unexpected character {rest[0]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("e", "e", m.start(2)))
        else:
            tokens.append((m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ScalarParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def sum(self) -> InfinitesimalScalar:
        out = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> InfinitesimalScalar:
        out = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                out = out * rhs
            else:
                if not rhs:
                    raise ScalarParseError("division by zero", pos)
                out = out / rhs
        return out

    def factor(self) -> InfinitesimalScalar:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> InfinitesimalScalar:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            return base ** int(tok[1])
        return base

    def atom(self) -> InfinitesimalScalar:
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            return InfinitesimalScalar.from_rational(int(text))
        if kind == "e":
            self.take()
            return EPSILON
        if kind == "(":
            self.take()
            inner = self.sum()
            self.take(")")
            return inner
        raise ScalarParseError(f"expected a value, found {text!r}" if text else "unexpected end of input", pos)


def parse_scalar(text: str) -> Scalar:
    """Parse scalar text like ``5``, ``-1/3``, ``(1 - e)/2`` or ``e^2/(1+e)``.

    Returns a Fraction when the value is rational and an
    InfinitesimalScalar otherwise.
    """
    parser = _Parser(_tokenize(text))
    value = parser.sum()
    end = parser.peek()
    if end[0] != "end":
        raise ScalarParseError(f"unexpected trailing {end[1]!r}", end[2])
    if value.is_rational():
        return value.as_rational()
    return value


def _int_pair(num: Polynomial, den: Polynomial):
    """Scale out coefficient denominators for display; content made coprime."""
    denoms = [c.denominator for c in num.coeffs + den.coeffs if c != 0]
    scale = math.lcm(*denoms) if denoms else 1
    ni = [int(c * scale) for c in num.coeffs]
    di = [int(c * scale) for c in den.coeffs]
    content = math.gcd(*(abs(c) for c in ni + di if c != 0))
    if content > 1:
        ni = [c // content for c in ni]
        di = [c // content for c in di]
    return ni, di


def _poly_text(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            e = "e" if k == 1 else f"e^{k}"
            body = e if mag == 1 else f"{mag}*{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _is_bare(coeffs) -> bool:
    nonzero = [k for k, c in enumerate(coeffs) if c != 0]
    if len(nonzero) != 1:
        return False
    k = nonzero[0]
    c = coeffs[k]
    return c > 0 and (k == 0 or c == 1)


def format_scalar(x: Scalar) -> str:
    x = as_scalar(x)
    if isinstance(x, InfinitesimalScalar) and x.is_rational():
        x = x.as_rational()
    if isinstance(x, Fraction):
        return str(x)
    ni, di = _int_pair(x.num, x.den)
    num_text = _poly_text(ni)
    if di == [1]:
        return num_text
    den_text = _poly_text(di)
    if not _is_bare(ni):
        num_text = f"({num_text})"
    if not _is_bare(di):
        den_text = f"({den_text})"
    return f"{num_text}/{den_text}"
