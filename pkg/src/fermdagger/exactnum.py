"""Exact arithmetic in the Gaussian rationals Q(i).

A :class:`Scalar` is stored as three integers ``(a, b, d)`` meaning
``(a + b*i) / d`` with ``d > 0`` and ``gcd(a, b, d) == 1``.  The canonical
form makes structural equality coincide with numerical equality, so scalars
can be hashed, compared and used as dictionary keys.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, ScalarParseError

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar", "arith", "conj", "parse_scalar"]


class Scalar:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Scalar":
        s = object.__new__(cls)
        s._set(a, b, d)
        return s

    def _set(self, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def is_imaginary(self) -> bool:
        return self._a == 0

    def conj(self) -> "Scalar":
        return Scalar._raw(self._a, -self._b, self._d)

    def norm2(self) -> Fraction:
        """|z|^2 as a rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return Scalar._raw(self._a + o._a, self._b + o._b, self._d)
        return Scalar._raw(self._a * o._d + o._a * self._d,
                           self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return Scalar._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(i)")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        n = self._a * self._a + self._b * self._b
        return Scalar._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison -------------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __reduce__(self):
        return (parse_scalar, (format_scalar(self),))


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return Scalar._raw(x.numerator, 0, x.denominator)
    if isinstance(x, complex):
        return Scalar(Fraction(x.real), Fraction(x.imag))
    return None


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, complex numbers with exact parts, or strings."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")
    return s


ZERO = Scalar._raw(0, 0, 1)
ONE = Scalar._raw(1, 0, 1)
I = Scalar._raw(0, 1, 1)


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def conj(a: Scalar) -> Scalar:
    return a.conj()


# text form ------------------------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_TERM = re.compile(rf"([+-]?)(?:({_RAT})(\*?i)?|(i))")


def parse_scalar(text: str) -> Scalar:
    """Parse ``a/b+c/d*i`` style text; each term is optional."""
    s = text.replace(" ", "")
    if not s:
        raise ScalarParseError("empty scalar")
    pos = 0
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen_re = seen_im = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ScalarParseError(f"cannot parse scalar {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(4):
            value, imaginary = Fraction(1), True
        else:
            num, _, den = m.group(2).partition("/")
            if den and int(den) == 0:
                raise ScalarParseError(f"zero denominator in {text!r}")
            value = Fraction(int(num), int(den) if den else 1)
            imaginary = bool(m.group(3))
        if imaginary:
            if seen_im:
                raise ScalarParseError(f"two imaginary terms in {text!r}")
            seen_im = True
            im_part = sign * value
        else:
            if seen_re or seen_im:
                raise ScalarParseError(f"misplaced real term in {text!r}")
            seen_re = True
            re_part = sign * value
        pos = m.end()
    return Scalar(re_part, im_part)


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(z: Scalar) -> str:
    re_part, im_part = z.re, z.im
    if im_part == 0:
        return _fmt_rat(re_part)
    mag = abs(im_part)
    imag = "i" if mag == 1 else f"{_fmt_rat(mag)}*i"
    if re_part == 0:
        return ("-" if im_part < 0 else "") + imag
    return _fmt_rat(re_part) + ("-" if im_part < 0 else "+") + imag
