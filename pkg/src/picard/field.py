"""
Exact arithmetic in the biquadratic field Q(i, sqrt3) and its projective line.

An element is stored as four rationals over the basis (1, i, sqrt3, i*sqrt3).
Nothing here ever rounds; floats appear only in ``__float__``-style display
helpers, never in a decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .exceptions import ZeroInverse

__all__ = [
    "GaussianInt",
    "FieldElement",
    "Infinity",
    "INF",
    "ZERO",
    "ONE",
    "I",
    "SQRT3",
    "I_SQRT3",
    "add",
    "mul",
    "invert",
    "conj_over_Qi",
    "conj_over_Qsqrt3",
    "from_general_form",
    "to_json",
    "from_json",
]


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """a + bi with a, b ordinary Python ints."""

    re: int = 0
    im: int = 0

    def __post_init__(self):
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise TypeError("GaussianInt parts must be int")

    @classmethod
    def coerce(cls, x) -> "GaussianInt":
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise ValueError(f"{x!r} is not a Gaussian integer")
            return cls(int(x.real), int(x.imag))
        return cls(int(x), 0)

    def __add__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianInt.coerce(other))

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        other = GaussianInt.coerce(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def to_field(self) -> "FieldElement":
        return FieldElement(self.re, self.im, 0, 0)

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _coef(self.im) + "i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_coef(abs(self.im))}i"

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"


def _coef(n):
    if n == 1:
        return ""
    if n == -1:
        return "-"
    return str(n)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class FieldElement:
    """x0 + x1*i + x2*sqrt3 + x3*i*sqrt3 with rational coordinates.

    Instances are immutable and hashable; equality is coordinate-wise.
    Python ints, Fractions and GaussianInts are promoted in arithmetic.
    """

    __slots__ = ("_c",)

    def __init__(self, x0=0, x1=0, x2=0, x3=0):
        object.__setattr__(self, "_c", (_frac(x0), _frac(x1), _frac(x2), _frac(x3)))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    x0 = property(lambda self: self._c[0])
    x1 = property(lambda self: self._c[1])
    x2 = property(lambda self: self._c[2])
    x3 = property(lambda self: self._c[3])

    @classmethod
    def coerce(cls, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, GaussianInt):
            return x.to_field()
        return cls(x)

    def is_zero(self) -> bool:
        return not any(self._c)

    def has_imaginary_part(self) -> bool:
        """True when the i or i*sqrt3 coordinate is nonzero."""
        return bool(self._c[1] or self._c[3])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._c == other._c
        if isinstance(other, (int, Fraction, GaussianInt)):
            return self._c == FieldElement.coerce(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(*(-x for x in self._c))

    def __sub__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return FieldElement.coerce(other) - self

    def __mul__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, invert(other))

    def __rtruediv__(self, other):
        return mul(FieldElement.coerce(other), invert(self))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __complex__(self):
        # display only
        r3 = 3 ** 0.5
        x0, x1, x2, x3 = (float(x) for x in self._c)
        return complex(x0 + x2 * r3, x1 + x3 * r3)

    def __repr__(self):
        return "FieldElement(%s)" % ", ".join(f"'{x}'" if x.denominator != 1 else str(x) for x in self._c)

    def __str__(self):
        names = ("", "i", "√3", "i√3")
        terms = []
        for x, name in zip(self._c, names):
            if not x:
                continue
            if not name:
                terms.append(str(x))
            elif x == 1:
                terms.append(name)
            elif x == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{x}{name}" if x.denominator == 1 else f"({x}){name}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return FieldElement(*(a + b for a, b in zip(x.coords, y.coords)))


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    a0, a1, a2, a3 = x.coords
    b0, b1, b2, b3 = y.coords
    # i^2 = -1, sqrt3^2 = 3, (i sqrt3)^2 = -3
    return FieldElement(
        a0 * b0 - a1 * b1 + 3 * a2 * b2 - 3 * a3 * b3,
        a0 * b1 + a1 * b0 + 3 * a2 * b3 + 3 * a3 * b2,
        a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


def conj_over_Qi(x: FieldElement) -> FieldElement:
    """sqrt3 -> -sqrt3, fixing Q(i)."""
    x0, x1, x2, x3 = x.coords
    return FieldElement(x0, x1, -x2, -x3)


def conj_over_Qsqrt3(x: FieldElement) -> FieldElement:
    """i -> -i, fixing Q(sqrt3)."""
    x0, x1, x2, x3 = x.coords
    return FieldElement(x0, -x1, x2, -x3)


def invert(x: FieldElement) -> FieldElement:
    """Multiplicative inverse, by conjugating down the tower Q(i,sqrt3) > Q(i) > Q."""
    if x.is_zero():
        raise ZeroInverse("0 has no inverse in Q(i, sqrt3)")
    xbar = conj_over_Qi(x)
    # x * xbar = p + q i lies in Q(i)
    n = mul(x, xbar)
    p, q = n.x0, n.x1
    norm = p * p + q * q
    inv_n = FieldElement(p / norm, -q / norm, 0, 0)
    return mul(xbar, inv_n)


class Infinity:
    """The point at infinity of the projective line. Use the singleton ``INF``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = lambda self: "∞"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ZERO = FieldElement(0, 0, 0, 0)
ONE = FieldElement(1, 0, 0, 0)
I = FieldElement(0, 1, 0, 0)
SQRT3 = FieldElement(0, 0, 1, 0)
I_SQRT3 = FieldElement(0, 0, 0, 1)


def from_general_form(a: int, b: int, c: int, d: int, e: int) -> FieldElement:
    """((a+bi) + (c+di)sqrt3)/e as a FieldElement."""
    if e == 0:
        raise ZeroDivisionError("e must be nonzero")
    return FieldElement(Fraction(a, e), Fraction(b, e), Fraction(c, e), Fraction(d, e))


def to_json(x: FieldElement) -> list[str]:
    """Four "num/den" strings, e.g. ["0/1", "1/4", "1/4", "0/1"]."""
    return [f"{c.numerator}/{c.denominator}" for c in x.coords]


def from_json(data) -> FieldElement:
    if len(data) != 4:
        raise ValueError("expected four coordinates")
    return FieldElement(*(Fraction(s) for s in data))
