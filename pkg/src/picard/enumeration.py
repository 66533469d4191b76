"""
Enumeration of the ambiguous numbers (a + k*sqrt3)/c for a fixed k.

Candidates are all (a, k, c) with a^2 < 3k^2 and c a (signed) divisor of
a^2 - 3k^2. A candidate whose entries share a factor t > 1 is dropped when
the scaled-down triple (a/t, k/t, c/t) still has an integral d-value: it is
then an ambiguous number of a smaller path with b = k/t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .exceptions import InvalidK
from .quadratic import RealQuadratic, canonicalize

__all__ = [
    "Exclusion",
    "PathDecision",
    "EnumerationResult",
    "signed_divisors",
    "divisor_candidates",
    "belongs_to_smaller_path",
    "enumerate_ambiguous",
]


def _check_k(k):
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidK(f"k must be a positive integer, got {k!r}")


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]


def signed_divisors(n: int) -> list[int]:
    """All positive and negative divisors of n != 0, sorted."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    pos = _divisors(n)
    return [-x for x in reversed(pos)] + pos


def divisor_candidates(k: int) -> list[RealQuadratic]:
    """Every (a, k, c) with a^2 < 3k^2 and c | a^2 - 3k^2, sorted by (a, c)."""
    _check_k(k)
    amax = isqrt(3 * k * k - 1)
    out = []
    for a in range(-amax, amax + 1):
        for c in signed_divisors(a * a - 3 * k * k):
            out.append(canonicalize(a, k, c))
    return out


@dataclass(frozen=True)
class PathDecision:
    """Outcome of the smaller-path test. ``m == k`` means keep."""

    keep: bool
    m: int
    reduced: RealQuadratic | None = None

    def __str__(self):
        return "KeepInK" if self.keep else f"BelongsTo({self.m})"


def belongs_to_smaller_path(q: RealQuadratic) -> PathDecision:
    """Decide whether (a, k, c) lives on the path of some b = m < k.

    Every common factor t > 1 of (a, k, c) is tried, largest first; the first
    scaled triple whose d-value is integral names the smaller path.
    """
    a, k, c = q.triple
    g = gcd(gcd(a, k), c)
    for t in reversed(_divisors(g)):
        if t == 1:
            break
        a0, m, c0 = a // t, k // t, c // t
        if (a0 * a0 - 3 * m * m) % c0 == 0:
            return PathDecision(False, m, canonicalize(a0, m, c0))
    return PathDecision(True, k)


@dataclass(frozen=True)
class Exclusion:
    candidate: RealQuadratic
    reduced: RealQuadratic
    m: int

    @property
    def reason(self) -> str:
        r = self.reduced
        return (
            f"({r.a})^2 - 3*{r.b}^2 = {r.a * r.a - 3 * r.b * r.b} is divisible by {r.c}; "
            f"belongs to the path with b = {self.m}"
        )

    def to_json(self) -> dict:
        return {
            "candidate": self.candidate.to_json(),
            "reduced": self.reduced.to_json(),
            "m": self.m,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class EnumerationResult:
    k: int
    members: tuple[RealQuadratic, ...]
    excluded: tuple[Exclusion, ...] = field(default=())

    def __len__(self):
        return len(self.members)

    def __contains__(self, q):
        return q in self.member_set

    @property
    def member_set(self) -> frozenset[RealQuadratic]:
        return frozenset(self.members)

    def c_values(self, a: int) -> list[int]:
        return [q.c for q in self.members if q.a == a]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "count": len(self.members),
            "members": [q.to_json() for q in self.members],
            "excluded": [e.to_json() for e in self.excluded],
        }


def enumerate_ambiguous(k: int) -> EnumerationResult:
    members, excluded = [], []
    for q in divisor_candidates(k):
        decision = belongs_to_smaller_path(q)
        if decision.keep:
            members.append(q)
        else:
            excluded.append(Exclusion(q, decision.reduced, decision.m))
    members.sort(key=RealQuadratic.sort_key)
    return EnumerationResult(k, tuple(members), tuple(excluded))
