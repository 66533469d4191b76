"""
Exhaustive and seeded-random checks of the structural claims the package
relies on. Used by ``picard check-properties`` and by the test-suite.

Every suite returns a ``SuiteResult``; the first failing input is kept as
the witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from . import group
from .enumeration import enumerate_ambiguous
from .field import INF, FieldElement, conj_over_Qi, conj_over_Qsqrt3, invert
from .graph import bfs_orbit_ambiguous, build_graph, check_structure, partner
from .quadratic import (
    AmbiguityClass,
    RealQuadratic,
    act_A2_image,
    act_A_image,
    act_B,
    act_C,
    act_C2,
    act_D,
    canonicalize,
    classify,
    d_value,
    embed,
    integral_d,
)

TP = AmbiguityClass.TotallyPositive
TN = AmbiguityClass.TotallyNegative
AMB = AmbiguityClass.Ambiguous


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    witness: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = str(witness)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{self.name}: {self.checked - self.failures}/{self.checked} {status}"
        if self.notes:
            out += " [" + "; ".join(self.notes) + "]"
        return out


# random inputs ------------------------------------------------------------

def random_field_element(rng: random.Random, size: int = 5) -> FieldElement:
    return FieldElement(*(Fraction(rng.randint(-size, size), rng.randint(1, 4)) for _ in range(4)))


def random_integral_d(rng: random.Random, amax: int = 60, bmax: int = 25) -> RealQuadratic:
    """(a, b, c) with b != 0 and c | a^2 - 3b^2."""
    a = rng.randint(-amax, amax)
    b = rng.randint(1, bmax)
    n = a * a - 3 * b * b
    divs = [x for x in range(1, abs(n) + 1) if n % x == 0]
    return canonicalize(a, b, rng.choice(divs) * rng.choice((1, -1)))


def random_of_class(rng: random.Random, cls: AmbiguityClass) -> RealQuadratic:
    while True:
        q = random_integral_d(rng)
        if classify(q) is cls:
            return q


def random_word(rng: random.Random, max_len: int = 8) -> group.Word:
    return group.Word(rng.choice("ABCD") for _ in range(rng.randint(0, max_len)))


# suites ------------------------------------------------------------------

def suite_relators(generators: Mapping[str, group.MobiusMap] | None = None) -> SuiteResult:
    res = SuiteResult("relators evaluate to +-I")
    for r in group.verify_relators(generators):
        res.record(r.passed, r.name)
    return res


def suite_field_axioms(rng: random.Random, n: int) -> SuiteResult:
    res = SuiteResult("field axioms and conjugations")
    one = FieldElement(1)
    for _ in range(n):
        x, y, z = (random_field_element(rng) for _ in range(3))
        res.record((x * y) * z == x * (y * z), ("assoc", x, y, z))
        res.record(x * (y + z) == x * y + x * z, ("distrib", x, y, z))
        if x:
            res.record(x * invert(x) == one, ("inverse", x))
        for cj in (conj_over_Qi, conj_over_Qsqrt3):
            res.record(cj(x * y) == cj(x) * cj(y), (cj.__name__, x, y))
            res.record(cj(cj(x)) == x, (cj.__name__, "involution", x))
    return res


def _random_point(rng):
    return INF if rng.random() < 0.1 else random_field_element(rng)


def suite_word_action(rng: random.Random, n: int, generators=None) -> SuiteResult:
    res = SuiteResult("word action equals matrix action; inverse undoes")
    for _ in range(n):
        w = random_word(rng)
        m = group.matrix_of(w, generators)
        z = _random_point(rng)
        res.record(group.apply_word(w, z, generators) == group.apply(m, z), (w, z))
        res.record(group.apply(group.inverse(m), group.apply(m, z)) == z, ("inverse", w, z))
        if m.r:
            pole = -m.s.to_field() / m.r.to_field()
            res.record(group.apply(m, pole) is INF, ("pole", w))
            res.record(group.apply(group.inverse(m), INF) == pole, ("pole back", w))
    return res


def suite_fixed_points(generators=None) -> SuiteResult:
    gens = group.GENERATORS if generators is None else generators
    res = SuiteResult("generator fixed points")
    half = Fraction(1, 2)
    fixed = {
        "A": [FieldElement(0, half, s * half, 0) for s in (1, -1)],
        "B": [FieldElement(1), FieldElement(-1)],
        "C": [FieldElement(-half, 0, 0, s * half) for s in (1, -1)],
        "D": [FieldElement(0, 1), FieldElement(0, -1)],
    }
    for name, pts in fixed.items():
        for z in pts:
            res.record(group.apply(gens[name], z) == z, (name, z))
    return res


def _oracle(name: str, generators=None) -> group.MobiusMap:
    if name == "C2":
        return group.matrix_of("CC", generators)
    return group.matrix_of(name, generators)


CLOSED_FORMS: dict[str, Callable[[RealQuadratic], RealQuadratic]] = {
    "B": act_B,
    "D": act_D,
    "C": act_C,
    "C2": act_C2,
}


def suite_oracle(samples: Iterable[RealQuadratic], generators=None) -> SuiteResult:
    res = SuiteResult("closed forms agree with Mobius action")
    mats = {name: _oracle(name, generators) for name in CLOSED_FORMS}
    for q in samples:
        for name, act in CLOSED_FORMS.items():
            res.record(embed(act(q)) == group.apply(mats[name], embed(q)), (name, q))
        res.record(act_A_image(q) == group.apply(group.matrix_of("A", generators), embed(q)), ("A", q))
        res.record(act_A2_image(q) == group.apply(group.matrix_of("AA", generators), embed(q)), ("A2", q))
    return res


def suite_totally_positive(rng: random.Random, n: int) -> SuiteResult:
    res = SuiteResult("C, C^2 send totally positive to totally negative")
    signs = set()
    for _ in range(n):
        q = random_of_class(rng, TP)
        signs.add(q.c > 0)
        res.record(classify(act_C(q)) is TN and classify(act_C2(q)) is TN, q)
    if signs != {True, False}:
        res.record(False, "only one sign case of totally positive inputs was sampled")
    return res


def suite_b_d_preserve(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("B, D preserve ambiguity and non-ambiguity")
    for q in samples:
        amb = classify(q) is AMB
        res.record((classify(act_B(q)) is AMB) == amb, ("B", q))
        res.record((classify(act_D(q)) is AMB) == amb, ("D", q))
    return res


def suite_a_leaves_real(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("A, A^2 images of ambiguous numbers have an i part")
    for q in samples:
        if classify(q) is not AMB:
            continue
        res.record(act_A_image(q).has_imaginary_part(), ("A", q))
        res.record(act_A2_image(q).has_imaginary_part(), ("A2", q))
    return res


def suite_c_triangle(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("exactly one of C, C^2 ambiguous, other totally negative")
    for q in samples:
        if classify(q) is not AMB:
            continue
        pair = {classify(act_C(q)), classify(act_C2(q))}
        res.record(pair == {AMB, TN}, q)
    return res


def suite_d_integrality(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("d stays integral: c, -c, 2a+c+d, c")
    for q in samples:
        d = integral_d(q)
        expected = {
            "B": q.c,
            "D": -q.c,
            "C": 2 * q.a + q.c + d,
            "C2": q.c,
        }
        for name, act in CLOSED_FORMS.items():
            dv = d_value(act(q))
            # images are canonicalized, which may negate (a, b, c) and hence d
            res.record(dv.denominator == 1 and abs(dv) == abs(expected[name]), (name, q))
            res.record(_raw_d(name, q) == expected[name], ("raw", name, q))
    return res


def _raw_d(name: str, q: RealQuadratic) -> int:
    """d of the uncanonicalized image triple produced by the closed forms."""
    a, b, c = q.triple
    d = integral_d(q)
    raw = {
        "B": (a, -b, d),
        "D": (a, -b, -d),
        "C": (-a - d, b, d),
        "C2": (-a - c, b, 2 * a + c + d),
    }[name]
    x, y, z = raw
    num = x * x - 3 * y * y
    return num // z if num % z == 0 else Fraction(num, z)


def suite_b_invariant(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("canonical b preserved by B, C, C^2, D")
    for q in samples:
        for name, act in CLOSED_FORMS.items():
            res.record(act(q).b == q.b, (name, q))
    return res


def suite_dc_sign(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("ambiguous iff d*c < 0")
    for q in samples:
        res.record((classify(q) is AMB) == (d_value(q) * q.c < 0), q)
    return res


def suite_enumeration(k_max: int) -> SuiteResult:
    res = SuiteResult("enumerated numbers: a^2 < 3k^2, c | a^2 - 3k^2, ambiguous")
    for k in range(1, k_max + 1):
        for q in enumerate_ambiguous(k).members:
            ok = q.a * q.a < 3 * k * k and (q.a * q.a - 3 * k * k) % q.c == 0 and classify(q) is AMB
            res.record(ok, q)
    return res


def suite_closed_path(k_max: int) -> SuiteResult:
    res = SuiteResult("closed path structure")
    for k in range(1, k_max + 1):
        try:
            problems = check_structure(build_graph(k))
        except AssertionError as exc:  # ClosureViolation / PropositionViolation
            problems = [f"{type(exc).__name__}: {exc}"]
        res.record(not problems, f"k={k}: {', '.join(problems)}")
    return res


def suite_orbit_equals_enumeration(k_max: int, limit: int = 10_000) -> SuiteResult:
    res = SuiteResult("orbit of k*sqrt3 equals enumeration")
    for k in range(1, k_max + 1):
        orbit = set(bfs_orbit_ambiguous(canonicalize(0, k, 1), limit))
        members = enumerate_ambiguous(k).member_set
        res.notes.append(f"k={k}: {len(orbit)} {'==' if orbit == members else '!='} {len(members)}")
        res.record(orbit == members, f"k={k}: orbit {len(orbit)}, enumeration {len(members)}")
    return res


def suite_partner_involution(samples: Iterable[RealQuadratic]) -> SuiteResult:
    res = SuiteResult("partner is an involution")
    for q in samples:
        if classify(q) is AMB:
            res.record(partner(partner(q)) == q, q)
    return res


def run_all(
    k_max: int,
    seed: int,
    n_random: int = 1000,
    generators: Mapping[str, group.MobiusMap] | None = None,
) -> list[SuiteResult]:
    """Every suite, in a fixed order. Deterministic for a given seed."""
    rng = random.Random(seed)
    enumerated = [q for k in range(1, k_max + 1) for q in enumerate_ambiguous(k).members]
    randoms = [random_integral_d(rng) for _ in range(n_random)]
    samples = enumerated + randoms
    return [
        suite_relators(generators),
        suite_field_axioms(rng, max(1, n_random // 10)),
        suite_word_action(rng, max(1, n_random // 10), generators),
        suite_fixed_points(generators),
        suite_totally_positive(rng, n_random),
        suite_b_d_preserve(samples),
        suite_a_leaves_real(samples),
        suite_c_triangle(samples),
        suite_d_integrality(samples),
        suite_b_invariant(samples),
        suite_dc_sign(samples),
        suite_partner_involution(samples),
        suite_enumeration(k_max),
        suite_closed_path(k_max),
        suite_orbit_equals_enumeration(k_max),
        suite_oracle(samples, generators),
    ]
