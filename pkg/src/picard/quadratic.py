"""
Numbers (a + b*sqrt3)/c with integer a, b, c, their sign classes, and the
closed-form actions of B, C, C^2, D that keep b fixed.

Triples are kept in the orientation b > 0 (or b == 0 and c > 0) but are never
gcd-reduced: (0, 2, 4) and (0, 1, 2) are the same number with different
d-values, and the enumeration depends on telling them apart. ``same_value``
compares numbers; ``==`` compares stored triples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exceptions import NonIntegralD, NotRealQuadratic, ZeroD, ZeroDenominator, ZeroInput
from .field import FieldElement, conj_over_Qi

__all__ = [
    "RealQuadratic",
    "AmbiguityClass",
    "canonicalize",
    "embed",
    "extract",
    "d_value",
    "integral_d",
    "classify",
    "is_ambiguous",
    "act_B",
    "act_D",
    "act_C",
    "act_C2",
    "act_A_image",
    "act_A2_image",
    "conj",
    "same_value",
    "render",
]


class AmbiguityClass(enum.Enum):
    TotallyPositive = "TotallyPositive"
    TotallyNegative = "TotallyNegative"
    Ambiguous = "Ambiguous"
    RationalDegenerate = "RationalDegenerate"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class RealQuadratic:
    """(a + b*sqrt3)/c. Build through ``canonicalize`` (or ``RealQuadratic.of``)."""

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "RealQuadratic":
        return canonicalize(a, b, c)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def sort_key(self):
        return (self.a, self.c, self.b)

    def reduced(self) -> "RealQuadratic":
        g = gcd(gcd(self.a, self.b), self.c)
        return RealQuadratic(self.a // g, self.b // g, self.c // g)

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    @classmethod
    def from_json(cls, data) -> "RealQuadratic":
        return canonicalize(int(data["a"]), int(data["b"]), int(data["c"]))


def canonicalize(a: int, b: int, c: int) -> RealQuadratic:
    if c == 0:
        raise ZeroDenominator("c must be nonzero")
    if b < 0 or (b == 0 and c < 0):
        a, b, c = -a, -b, -c
    return RealQuadratic(a, b, c)


def embed(q: RealQuadratic) -> FieldElement:
    return FieldElement(Fraction(q.a, q.c), 0, Fraction(q.b, q.c), 0)


def extract(x: FieldElement) -> RealQuadratic:
    """The gcd-reduced triple of a field element with no i part."""
    if x.has_imaginary_part():
        raise NotRealQuadratic(f"{x} has a nonzero i-component")
    u, v = x.x0, x.x2
    c = u.denominator * v.denominator // gcd(u.denominator, v.denominator)
    a = u.numerator * (c // u.denominator)
    b = v.numerator * (c // v.denominator)
    return canonicalize(a, b, c).reduced()


def d_value(q: RealQuadratic) -> Fraction:
    return Fraction(q.a * q.a - 3 * q.b * q.b, q.c)


def integral_d(q: RealQuadratic) -> int:
    """d as an int, raising NonIntegralD when c does not divide a^2 - 3b^2."""
    n = q.a * q.a - 3 * q.b * q.b
    if n % q.c:
        raise NonIntegralD(f"c = {q.c} does not divide a^2 - 3b^2 = {n}")
    return n // q.c


def _sign_of_sum(a: int, b: int) -> int:
    """Sign of a + b*sqrt3, exactly."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    # opposite signs: the larger magnitude wins; a^2 == 3b^2 cannot happen
    return (1 if a > 0 else -1) if a * a > 3 * b * b else (1 if b > 0 else -1)


def classify(q: RealQuadratic) -> AmbiguityClass:
    if q.b == 0:
        return AmbiguityClass.RationalDegenerate
    sc = 1 if q.c > 0 else -1
    s1 = _sign_of_sum(q.a, q.b) * sc
    s2 = _sign_of_sum(q.a, -q.b) * sc
    if s1 != s2:
        return AmbiguityClass.Ambiguous
    return AmbiguityClass.TotallyPositive if s1 > 0 else AmbiguityClass.TotallyNegative


def is_ambiguous(q: RealQuadratic) -> bool:
    return classify(q) is AmbiguityClass.Ambiguous


def _nonzero(q: RealQuadratic):
    if q.a == 0 and q.b == 0:
        raise ZeroInput("the input is 0")


def act_B(q: RealQuadratic) -> RealQuadratic:
    """1/alpha = (a - b sqrt3)/d."""
    _nonzero(q)
    d = integral_d(q)
    return canonicalize(q.a, -q.b, d)


def act_D(q: RealQuadratic) -> RealQuadratic:
    """-1/alpha = (-a + b sqrt3)/d."""
    _nonzero(q)
    d = integral_d(q)
    return canonicalize(-q.a, q.b, d)


def act_C(q: RealQuadratic) -> RealQuadratic:
    """-(1 + alpha)/alpha = (-a - d + b sqrt3)/d; its d-value is 2a + c + d."""
    d = integral_d(q)
    if d == 0:
        raise ZeroD("d = 0")
    return canonicalize(-q.a - d, q.b, d)


def act_C2(q: RealQuadratic) -> RealQuadratic:
    """-1/(1 + alpha) = (-a - c + b sqrt3)/(2a + c + d); its d-value is c."""
    d = integral_d(q)
    den = 2 * q.a + q.c + d
    if den == 0:
        raise ZeroDenominator("2a + c + d = 0")
    return canonicalize(-q.a - q.c, q.b, den)


def act_A_image(q: RealQuadratic) -> FieldElement:
    """1/(alpha - i) as a field element; has an i part whenever b != 0."""
    x = embed(q) - FieldElement(0, 1)
    return 1 / x


def act_A2_image(q: RealQuadratic) -> FieldElement:
    """(1 + i alpha)/alpha = i + (a - b sqrt3)/d."""
    n = q.a * q.a - 3 * q.b * q.b
    if n == 0:
        raise ZeroD("d = 0")
    d = Fraction(n, q.c)
    return FieldElement(q.a / d, 1, -q.b / d, 0)


def conj(q: RealQuadratic) -> RealQuadratic:
    """(a - b sqrt3)/c."""
    return canonicalize(q.a, -q.b, q.c)


def same_value(q1: RealQuadratic, q2: RealQuadratic) -> bool:
    return q1.reduced() == q2.reduced()


def render(q: RealQuadratic) -> str:
    """Text form: "(-3+2√3)/3", "√3", "-√3/3", "-3+2√3"."""
    a, b, c = q.triple
    if c < 0:
        a, b, c = -a, -b, -c
    terms = []
    if a:
        terms.append(str(a))
    if b:
        radical = "√3" if abs(b) == 1 else f"{abs(b)}√3"
        if terms:
            terms.append(("+" if b > 0 else "-") + radical)
        else:
            terms.append(radical if b > 0 else "-" + radical)
    num = "".join(terms) or "0"
    if c == 1:
        return num
    if len(terms) > 1:
        num = f"({num})"
    return f"{num}/{c}"
