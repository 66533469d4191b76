"""
The Picard group PSL(2, Z[i]) acting on the projective line over Q(i, sqrt3).

Generators, as determinant-one lifts:

    A = [[0, i], [i, 1]]     z -> 1/(z - i)
    B = [[0, i], [i, 0]]     z -> 1/z
    C = [[1, 1], [-1, 0]]    z -> (1 + z)/(-z)
    D = [[0, -1], [1, 0]]    z -> -1/z

The naive integer matrices for A and B have determinant -1, hence the factor i.
Words act left to right: in ``Word("AC")`` the letter A acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .field import INF, FieldElement, GaussianInt, Infinity

__all__ = [
    "MobiusMap",
    "Word",
    "IDENTITY",
    "GENERATORS",
    "ORDERS",
    "RELATORS",
    "RelatorResult",
    "generator",
    "compose",
    "inverse",
    "apply",
    "apply_word",
    "matrix_of",
    "verify_relators",
]


def _sign_key(g: GaussianInt) -> int:
    if g.re:
        return 1 if g.re > 0 else -1
    if g.im:
        return 1 if g.im > 0 else -1
    return 0


@dataclass(frozen=True)
class MobiusMap:
    """[[p, q], [r, s]] over Z[i] with ps - qr = 1, stored up to overall sign.

    The sign is fixed so that the first nonzero entry in (p, q, r, s) has
    positive real part, or zero real part and positive imaginary part.
    That makes ``==`` and ``hash`` agree with equality in PSL.
    """

    p: GaussianInt
    q: GaussianInt
    r: GaussianInt
    s: GaussianInt

    def __init__(self, p, q, r, s, *, check=True):
        entries = [GaussianInt.coerce(x) for x in (p, q, r, s)]
        if check:
            det = entries[0] * entries[3] - entries[1] * entries[2]
            if det != GaussianInt(1, 0):
                raise ValueError(f"determinant is {det}, expected 1")
        for e in entries:
            sgn = _sign_key(e)
            if sgn:
                if sgn < 0:
                    entries = [-x for x in entries]
                break
        for name, e in zip("pqrs", entries):
            object.__setattr__(self, name, e)

    @classmethod
    def from_rows(cls, rows, *, check=True) -> "MobiusMap":
        (p, q), (r, s) = rows
        return cls(p, q, r, s, check=check)

    @property
    def entries(self):
        return (self.p, self.q, self.r, self.s)

    def det(self) -> GaussianInt:
        return self.p * self.s - self.q * self.r

    def is_identity(self) -> bool:
        return self == IDENTITY

    def is_real(self) -> bool:
        """All entries rational integers (up to the PSL sign)."""
        return all(e.im == 0 for e in self.entries)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return compose(self, other)

    def __call__(self, z):
        return apply(self, z)

    def __repr__(self):
        return "MobiusMap([[%s, %s], [%s, %s]])" % tuple(str(e) for e in self.entries)


def _raw_product(m1: MobiusMap, m2: MobiusMap):
    p = m1.p * m2.p + m1.q * m2.r
    q = m1.p * m2.q + m1.q * m2.s
    r = m1.r * m2.p + m1.s * m2.r
    s = m1.r * m2.q + m1.s * m2.s
    return p, q, r, s


def compose(m1: MobiusMap, m2: MobiusMap) -> MobiusMap:
    """Matrix product m1*m2; as maps, m2 acts first."""
    return MobiusMap(*_raw_product(m1, m2), check=False)


def inverse(m: MobiusMap) -> MobiusMap:
    return MobiusMap(m.s, -m.q, -m.r, m.p, check=False)


IDENTITY = MobiusMap(1, 0, 0, 1)

_i = GaussianInt(0, 1)

GENERATORS: dict[str, MobiusMap] = {
    "A": MobiusMap(0, _i, _i, 1),
    "B": MobiusMap(0, _i, _i, 0),
    "C": MobiusMap(1, 1, -1, 0),
    "D": MobiusMap(0, -1, 1, 0),
}

ORDERS = {"A": 3, "B": 2, "C": 3, "D": 2}


def generator(name: str) -> MobiusMap:
    try:
        return GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of A, B, C, D") from None


def apply(m: MobiusMap, z):
    """(p z + q)/(r z + s) on the projective line, exactly."""
    p, q, r, s = (e.to_field() for e in m.entries)
    if isinstance(z, Infinity):
        if r.is_zero():
            return INF
        return p / r
    z = FieldElement.coerce(z)
    den = r * z + s
    if den.is_zero():
        return INF
    return (p * z + q) / den


class Word:
    """A word in A, B, C, D with exponents reduced modulo the generator orders.

    Accepts a string ("ACB", "A2C", "A^2 C") or an iterable of letters and/or
    (letter, exponent) pairs. Adjacent equal letters are merged.
    """

    _TOKEN = re.compile(r"\s*([ABCD])\s*(?:\^?\s*(-?\d+))?")

    def __init__(self, letters: Iterable = ()):
        if isinstance(letters, str):
            letters = self._parse(letters)
        stack: list[list] = []
        for item in letters:
            if isinstance(item, str):
                name, exp = item, 1
            else:
                name, exp = item
            if name not in ORDERS:
                raise ValueError(f"unknown generator {name!r}")
            exp %= ORDERS[name]
            if not exp:
                continue
            if stack and stack[-1][0] == name:
                stack[-1][1] = (stack[-1][1] + exp) % ORDERS[name]
                if not stack[-1][1]:
                    stack.pop()
            else:
                stack.append([name, exp])
        self.letters: tuple[tuple[str, int], ...] = tuple((n, e) for n, e in stack)

    @classmethod
    def _parse(cls, text: str):
        pos, out = 0, []
        text = text.strip()
        while pos < len(text):
            m = cls._TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse word {text!r} at position {pos}")
            out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
            pos = m.end()
        return out

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __str__(self):
        return "".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)


def matrix_of(word, generators: Mapping[str, MobiusMap] | None = None) -> MobiusMap:
    """The matrix whose action equals the word acting letter by letter from the left."""
    gens = GENERATORS if generators is None else generators
    if not isinstance(word, Word):
        word = Word(word)
    m = IDENTITY
    for name, exp in word:
        for _ in range(exp):
            m = compose(gens[name], m)
    return m


def apply_word(word, z, generators: Mapping[str, MobiusMap] | None = None):
    gens = GENERATORS if generators is None else generators
    if not isinstance(word, Word):
        word = Word(word)
    for name, exp in word:
        for _ in range(exp):
            z = apply(gens[name], z)
    return z


# relator name -> sequence of letters whose product must be +-I
RELATORS: dict[str, str] = {
    "A^3": "AAA",
    "B^2": "BB",
    "C^3": "CCC",
    "D^2": "DD",
    "(AC)^2": "ACAC",
    "(AD)^2": "ADAD",
    "(BC)^2": "BCBC",
    "(BD)^2": "BDBD",
}


@dataclass(frozen=True)
class RelatorResult:
    name: str
    sign: str  # "+I", "-I" or "?"
    passed: bool
    matrix: tuple

    def line(self) -> str:
        return f"RELATOR {self.name}: {self.sign} {'PASS' if self.passed else 'FAIL'}"


def verify_relators(generators: Mapping[str, MobiusMap] | None = None) -> list[RelatorResult]:
    """Multiply out every relator as a raw SL(2) product, keeping the sign."""
    gens = GENERATORS if generators is None else generators
    one, zero = GaussianInt(1), GaussianInt(0)
    results = []
    for name, letters in RELATORS.items():
        prod = (one, zero, zero, one)
        for letter in letters:
            g = gens[letter]
            p, q, r, s = prod
            prod = (
                p * g.p + q * g.r,
                p * g.q + q * g.s,
                r * g.p + s * g.r,
                r * g.q + s * g.s,
            )
        if prod == (one, zero, zero, one):
            sign = "+I"
        elif prod == (-one, zero, zero, -one):
            sign = "-I"
        else:
            sign = "?"
        results.append(RelatorResult(name, sign, sign != "?", prod))
    return results
