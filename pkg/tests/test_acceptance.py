"""Acceptance criteria. Each test records one PASS/FAIL line, printed at the end of the run."""

import random
import subprocess
import sys
import time

import pytest

from picard import properties
from picard.enumeration import enumerate_ambiguous
from picard.exceptions import PropositionViolation
from picard.graph import (
    PARTNER,
    bfs_orbit_ambiguous,
    build_graph,
    components,
    layer_cycles,
)
from picard.group import verify_relators
from picard.quadratic import act_B, canonicalize

Q = canonicalize
RESULTS: dict[str, str] = {}


def record(key, ok, detail=""):
    RESULTS[key] = f"{'PASS' if ok else 'FAIL'}  {key}" + (f"  ({detail})" if detail else "")
    print(RESULTS[key])
    assert ok, RESULTS[key]


def test_1_relators():
    results = verify_relators()
    bad = [r.name for r in results if not r.passed]
    signs = {r.sign for r in results}
    record("1 relators are +-I", len(results) == 8 and not bad and signs <= {"+I", "-I"},
           ", ".join(f"{r.name}={r.sign}" for r in results))


def test_2_headline_count():
    res = enumerate_ambiguous(2)
    ok = (
        len(res.members) == 32
        and sorted(res.c_values(0)) == [-12, -4, -3, -1, 1, 3, 4, 12]
        and sorted(res.c_values(1)) == [-11, -1, 1, 11]
        and sorted(res.c_values(-1)) == [-11, -1, 1, 11]
    )
    record("2 k=2 has 32 ambiguous numbers", ok, f"count={len(res.members)}")


def test_3_exclusion_evidence():
    ex = {e.candidate: e for e in enumerate_ambiguous(2).excluded}
    checks = [
        (Q(0, 2, 6), Q(0, 1, 3)),
        (Q(2, 2, 2), Q(1, 1, 1)),
        (Q(-2, 2, -2), Q(-1, 1, -1)),
        (Q(2, 2, -2), Q(1, 1, -1)),
        (Q(-2, 2, 2), Q(-1, 1, 1)),
    ]
    ok = all(cand in ex and ex[cand].reduced == red and ex[cand].m == 1 for cand, red in checks)
    # 3 | 0 - 3 for (0, 1, 3); 1 | 1 - 3 for (1, 1, 1)
    ok = ok and all((r.a * r.a - 3 * r.b * r.b) % r.c == 0 for _, r in checks)
    record("3 exclusions carry reduced-triple evidence", ok)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_4_orbit_equals_enumeration(k):
    t0 = time.perf_counter()
    orbit = set(bfs_orbit_ambiguous(Q(0, k, 1), limit=10_000))
    members = enumerate_ambiguous(k).member_set
    elapsed = time.perf_counter() - t0
    ok = orbit == members and elapsed < 5.0
    record(f"4 orbit == enumeration, k={k}", ok,
           f"orbit {len(orbit)}, enumeration {len(members)}, {elapsed:.2f}s")


HAND_CYCLE_K1 = [(0, 1, 1), (-1, 1, -2), (1, 1, 1), (1, 1, -2), (-1, 1, 1), (0, 1, -3)]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_5_closed_path_structure(k):
    failed = []
    try:
        g = build_graph(k)
    except PropositionViolation as exc:
        record(f"5 closed-path structure, k={k}", False, f"PropositionViolation: {exc}")
    for lab in ("C", "D", "B"):
        if not g.is_perfect_matching(lab):
            failed.append(f"{lab} not a perfect matching")
    cycles = layer_cycles(g)
    for cyc in cycles:
        labels = [lab for _, lab in cyc.steps]
        if any(labels[i] == labels[(i + 1) % len(labels)] for i in range(len(labels))):
            failed.append("labels do not alternate")
        if len(set(cyc.vertices)) != len(cyc):
            failed.append("cycle repeats a vertex")
    if sum(len(c) for c in cycles) != len(g.vertices):
        failed.append("cycles do not cover the vertices")
    n_comp = len(components(g))
    if n_comp != 1:
        failed.append(f"{n_comp} components with B edges")
    if k == 1:
        if sorted(len(c) for c in cycles) != [6, 6]:
            failed.append("k=1 cycle lengths")
        (cyc,) = [c for c in cycles if Q(0, 1, 1) in c.vertices]
        if [v.triple for v in cyc.rotated(Q(0, 1, 1), PARTNER).vertices] != HAND_CYCLE_K1:
            failed.append("k=1 hand-derived cycle")
    record(f"5 closed-path structure, k={k}", not failed,
           "; ".join(failed) or f"{len(cycles)} cycles of lengths {[len(c) for c in cycles]}")


def test_6_bold_edge():
    record("6 B(-3+2√3) = (3+2√3)/3", act_B(Q(-3, 2, 1)) == Q(3, 2, 3))


def test_7_proposition_suites():
    rng = random.Random(20071)
    enumerated = [q for k in range(1, 5) for q in enumerate_ambiguous(k).members]
    randoms = [properties.random_integral_d(rng) for _ in range(1000)]
    samples = enumerated + randoms
    suites = [
        properties.suite_totally_positive(rng, 1000),
        properties.suite_b_d_preserve(samples),
        properties.suite_a_leaves_real(samples),
        properties.suite_c_triangle(samples),
        properties.suite_d_integrality(samples),
        properties.suite_b_invariant(samples),
    ]
    bad = [f"{s.name}: {s.witness}" for s in suites if not s.passed]
    record("7 proposition suites, zero violations", not bad,
           "; ".join(bad) or f"{sum(s.checked for s in suites)} checks")


def test_8_oracle_equivalence():
    rng = random.Random(8)
    samples = [q for k in range(1, 5) for q in enumerate_ambiguous(k).members]
    samples += [properties.random_integral_d(rng) for _ in range(1000)]
    res = properties.suite_oracle(samples)
    record("8 closed forms == Mobius action", res.passed, f"{res.checked} checks" + (f"; {res.witness}" if res.witness else ""))


def test_9_determinism(tmp_path):
    outputs = []
    for run in ("a", "b"):
        d = tmp_path / run
        d.mkdir()
        proc = subprocess.run(
            [sys.executable, "-m", "picard", "cycles", "--k", "2", "--dot", "out.dot", "--json", "out.json"],
            cwd=d, capture_output=True,
        )
        assert proc.returncode == 0, proc.stderr
        outputs.append(((d / "out.dot").read_bytes(), (d / "out.json").read_bytes(), proc.stdout))
    record("9 cycles --k 2 exports are byte-identical", outputs[0] == outputs[1])
