"""
The ambiguous part of the coset diagram for the orbit of k*sqrt3.

Each ambiguous number carries three edges: its partner in the C-triangle
(whichever of C(x), C^2(x) is ambiguous), its D-image and its B-image. The
partner and D edges alone split the vertices into alternating cycles (the
two layers); B edges join the layers into one closed path.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .enumeration import enumerate_ambiguous
from .exceptions import ClosureViolation, LimitExceeded, NotAmbiguousInput, PropositionViolation
from .quadratic import (
    RealQuadratic,
    act_B,
    act_C,
    act_C2,
    act_D,
    canonicalize,
    integral_d,
    is_ambiguous,
    render,
)

__all__ = [
    "PARTNER",
    "LABELS",
    "Edge",
    "AmbiguousGraph",
    "ClosedPath",
    "partner",
    "partner_via",
    "build_graph",
    "layer_cycles",
    "components",
    "check_structure",
    "bfs_orbit_ambiguous",
    "export_dot",
    "export_json",
    "load_json",
    "node_id",
]

PARTNER = "C"
LABELS = (PARTNER, "D", "B")


def partner_via(q: RealQuadratic) -> tuple[RealQuadratic, str]:
    """The ambiguous vertex of q's C-triangle, and "C" or "C2" for how it was reached."""
    if not is_ambiguous(q):
        raise NotAmbiguousInput(f"{render(q)} is not ambiguous")
    integral_d(q)
    c1, c2 = act_C(q), act_C2(q)
    amb1, amb2 = is_ambiguous(c1), is_ambiguous(c2)
    if amb1 == amb2:
        raise PropositionViolation(
            f"C and C^2 images of {render(q)} are {'both' if amb1 else 'neither'} ambiguous"
        )
    return (c1, "C") if amb1 else (c2, "C2")


def partner(q: RealQuadratic) -> RealQuadratic:
    return partner_via(q)[0]


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge; ``u`` sorts before ``v`` under (a, c).

    ``via`` is set on partner edges: "C" when v = C(u), "C2" when v = C^2(u).
    """

    u: RealQuadratic
    v: RealQuadratic
    label: str
    via: str | None = None

    @classmethod
    def make(cls, x: RealQuadratic, y: RealQuadratic, label: str, via_from_x: str | None = None):
        if x.sort_key() <= y.sort_key():
            return cls(x, y, label, via_from_x)
        flipped = None if via_from_x is None else ("C2" if via_from_x == "C" else "C")
        return cls(y, x, label, flipped)

    def other(self, x: RealQuadratic) -> RealQuadratic:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class ClosedPath:
    """Cyclic sequence of (vertex, label of the edge leaving it)."""

    steps: tuple[tuple[RealQuadratic, str], ...]

    def __len__(self):
        return len(self.steps)

    @property
    def vertices(self) -> tuple[RealQuadratic, ...]:
        return tuple(v for v, _ in self.steps)

    def rotated(self, start: RealQuadratic, first_label: str = PARTNER) -> "ClosedPath":
        """The same cycle read from ``start``, leaving along ``first_label``."""
        n = len(self.steps)
        for i, (v, lab) in enumerate(self.steps):
            if v == start:
                if lab == first_label:
                    return ClosedPath(self.steps[i:] + self.steps[:i])
                # walk the other way round
                rev = [self.steps[(i - j) % n][0] for j in range(n)]
                labels = [self.steps[(i - j - 1) % n][1] for j in range(n)]
                return ClosedPath(tuple(zip(rev, labels)))
        raise KeyError(f"{render(start)} is not on this path")


class AmbiguousGraph:
    def __init__(self, k: int, vertices: Iterable[RealQuadratic], edges: Iterable[Edge]):
        self.k = k
        self.vertices: tuple[RealQuadratic, ...] = tuple(sorted(set(vertices), key=RealQuadratic.sort_key))
        self.edges: tuple[Edge, ...] = tuple(
            sorted(set(edges), key=lambda e: (e.u.sort_key(), e.v.sort_key(), LABELS.index(e.label)))
        )
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self._adj: dict[RealQuadratic, dict[str, list[RealQuadratic]]] = {
            v: {lab: [] for lab in LABELS} for v in self.vertices
        }
        for e in self.edges:
            self._adj[e.u][e.label].append(e.v)
            if e.v != e.u:
                self._adj[e.v][e.label].append(e.u)

    def __eq__(self, other):
        if not isinstance(other, AmbiguousGraph):
            return NotImplemented
        return (self.k, self.vertices, self.edges) == (other.k, other.vertices, other.edges)

    def __repr__(self):
        return f"AmbiguousGraph(k={self.k}, {len(self.vertices)} vertices, {len(self.edges)} edges)"

    def neighbors(self, v: RealQuadratic, label: str) -> list[RealQuadratic]:
        return self._adj[v][label]

    def neighbor(self, v: RealQuadratic, label: str) -> RealQuadratic:
        (w,) = self._adj[v][label]
        return w

    def edges_with(self, label: str) -> list[Edge]:
        return [e for e in self.edges if e.label == label]

    def is_perfect_matching(self, label: str) -> bool:
        return all(len(self._adj[v][label]) == 1 and self._adj[v][label][0] != v for v in self.vertices)


def build_graph(k: int) -> AmbiguousGraph:
    members = enumerate_ambiguous(k).members
    vset = set(members)
    edges = set()
    for q in members:
        for label, (img, via) in (
            (PARTNER, partner_via(q)),
            ("D", (act_D(q), None)),
            ("B", (act_B(q), None)),
        ):
            if img not in vset:
                raise ClosureViolation(
                    f"{label}-image {render(img)} of {render(q)} is not among the k={k} ambiguous numbers"
                )
            edges.add(Edge.make(q, img, label, via))
    return AmbiguousGraph(k, members, edges)


def layer_cycles(g: AmbiguousGraph) -> list[ClosedPath]:
    """Walk partner, D, partner, D, ... from each unvisited vertex in sorted order."""
    seen = set()
    cycles = []
    for start in g.vertices:
        if start in seen:
            continue
        steps = []
        cur, label = start, PARTNER
        while True:
            steps.append((cur, label))
            seen.add(cur)
            cur = g.neighbor(cur, label)
            label = "D" if label == PARTNER else PARTNER
            if cur == start and label == PARTNER:
                break
            if len(steps) > len(g.vertices):
                raise ClosureViolation("alternating walk did not close")
        cycles.append(ClosedPath(tuple(steps)))
    return cycles


def components(g: AmbiguousGraph, labels: Iterable[str] = LABELS) -> list[list[RealQuadratic]]:
    labels = tuple(labels)
    seen, comps = set(), []
    for v in g.vertices:
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for lab in labels:
                for y in g.neighbors(x, lab):
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
        comps.append(sorted(comp, key=RealQuadratic.sort_key))
    return comps


def check_structure(g: AmbiguousGraph) -> list[str]:
    """Names of the violated structural invariants; empty when all hold."""
    problems = []
    for lab in LABELS:
        if not g.is_perfect_matching(lab):
            problems.append(f"perfect matching ({lab})")
    if problems:
        return problems
    # partner + D: 2-regular with alternating labels, no doubled edges
    for v in g.vertices:
        if g.neighbor(v, PARTNER) == g.neighbor(v, "D"):
            problems.append("2-regularity (partner and D edges coincide)")
            break
    try:
        cycles = layer_cycles(g)
    except ClosureViolation:
        problems.append("alternating cycles")
        cycles = []
    for cyc in cycles:
        labels = [lab for _, lab in cyc.steps]
        if len(cyc) % 2 or any(labels[i] == labels[(i + 1) % len(labels)] for i in range(len(labels))):
            problems.append("alternating cycles")
            break
    if len(components(g)) != 1:
        problems.append("connectivity with B edges")
    return problems


def _value_key(q: RealQuadratic):
    return q.reduced()


def bfs_orbit_ambiguous(start: RealQuadratic, limit: int = 10_000) -> list[RealQuadratic]:
    """Ambiguous numbers reachable from ``start`` by B, D, C, C^2 through ambiguous numbers.

    Returned in discovery order. Raises LimitExceeded past ``limit`` vertices.
    """
    if not is_ambiguous(start):
        raise NotAmbiguousInput(f"{render(start)} is not ambiguous")
    integral_d(start)
    seen = {_value_key(start)}
    order = [start]
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for act in (act_B, act_D, act_C, act_C2):
            img = act(q)
            if not is_ambiguous(img):
                continue
            key = _value_key(img)
            if key in seen:
                continue
            seen.add(key)
            order.append(img)
            if len(order) > limit:
                raise LimitExceeded(f"more than {limit} ambiguous numbers reached from {render(start)}")
            queue.append(img)
    return order


def node_id(q: RealQuadratic) -> str:
    return "_".join(f"m{-x}" if x < 0 else str(x) for x in q.triple)


def export_dot(g: AmbiguousGraph) -> str:
    lines = [f"graph ambiguous_k{g.k} {{"]
    for v in g.vertices:
        lines.append(f'  "{node_id(v)}" [label="{render(v)}"];')
    for e in g.edges:
        attrs = f'label="{e.label}"'
        if e.label == "B":
            attrs += ", style=bold"
        lines.append(f'  "{node_id(e.u)}" -- "{node_id(e.v)}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: AmbiguousGraph) -> str:
    edges = []
    for e in g.edges:
        rec = {"from": g.index[e.u], "to": g.index[e.v], "label": e.label}
        if e.via is not None:
            rec["via"] = e.via
        edges.append(rec)
    data = {
        "k": g.k,
        "vertices": [v.to_json() for v in g.vertices],
        "edges": edges,
        "cycles": [[g.index[v] for v in cyc.vertices] for cyc in layer_cycles(g)],
    }
    return json.dumps(data, indent=2) + "\n"


def load_json(text: str) -> AmbiguousGraph:
    data = json.loads(text)
    verts = [canonicalize(v["a"], v["b"], v["c"]) for v in data["vertices"]]
    edges = [Edge(verts[e["from"]], verts[e["to"]], e["label"], e.get("via")) for e in data["edges"]]
    return AmbiguousGraph(data["k"], verts, edges)
