"""Superposition of a cycle by supervertices A / A' and copies of superedge B.

Copy ``B_i`` replaces the cycle edge ``u_i u_{i+1}``; the supervertex at
``u_i`` sits between ``B_{i-1}`` and ``B_i`` and carries three strands:

* a-strand: ``a_{i-1} - u_i - a_i`` (the cycle vertex stays on it),
* c-strand: from ``d_{i-1}`` to ``c_i``,
* g-strand: from ``h_{i-1}`` to ``g_i``.

With A the c- and g-strands are plain edges; with A' they are subdivided by
``u'_i`` (c-strand) and ``u''_i`` (g-strand), which are joined by an edge.
A twist at ``i`` crosses the strands: ``d_{i-1}`` then feeds the g-strand
and ``h_{i-1}`` the c-strand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .catalog import B_VERTICES, superedge_b
from .multipole import Multipole, MultipoleError, bridges, check, graph, is_cycle
from .search import is_3_edge_colorable

A, A_PRIME = "A", "A'"


@dataclass(frozen=True)
class SuperpositionSpec:
    base: Multipole
    cycle: tuple[int, ...]
    choices: tuple[str, ...] = ()
    twists: tuple[bool, ...] = ()

    def __post_init__(self):
        g = len(self.cycle)
        object.__setattr__(self, "cycle", tuple(self.cycle))
        object.__setattr__(self, "choices", tuple(self.choices) or (A,) * g)
        object.__setattr__(self, "twists", tuple(bool(t) for t in self.twists) or (False,) * g)

    @property
    def g(self) -> int:
        return len(self.cycle)

    def validate(self) -> None:
        if not self.base.is_graph:
            raise MultipoleError("base must be a graph")
        if self.g < 3 or not is_cycle(self.base, self.cycle):
            raise MultipoleError(f"{list(self.cycle)} is not a simple cycle of the base graph")
        if len(self.choices) != self.g or any(c not in (A, A_PRIME) for c in self.choices):
            raise MultipoleError(f"choices must be {self.g} entries from A / A'")
        if len(self.twists) != self.g:
            raise MultipoleError(f"twists must have {self.g} entries")


@dataclass(frozen=True, eq=False)
class SuperpositionResult:
    spec: SuperpositionSpec
    graph: Multipole
    copy_vertices: tuple[tuple[int, ...], ...]
    copy_elements: tuple[tuple[int, ...], ...]
    a_prime: dict[int, tuple[int, int]] = field(default_factory=dict)
    base_edges: dict[int, int] = field(default_factory=dict)

    def name_maps(self) -> dict:
        g = self.graph
        return {
            "cycle": [g.vertex_name(u) for u in self.spec.cycle],
            "copies": [[g.vertex_name(v) for v in vs] for vs in self.copy_vertices],
            "copy_elements": [[g.element_name(x) for x in xs] for xs in self.copy_elements],
            "a_prime": {str(i): [g.vertex_name(v) for v in uv] for i, uv in self.a_prime.items()},
            "base_edges": {f"e{i}": g.element_name(x) for i, x in self.base_edges.items()},
        }


def parse_choices(text: str) -> tuple[str, ...]:
    """``"AA'A"`` → ``("A", "A'", "A")``."""
    out = []
    i = 0
    while i < len(text):
        if text[i] != "A":
            raise ValueError(f"bad choice string {text!r} at position {i}")
        if i + 1 < len(text) and text[i + 1] == "'":
            out.append(A_PRIME)
            i += 2
        else:
            out.append(A)
            i += 1
    return tuple(out)


def build(spec: SuperpositionSpec) -> SuperpositionResult:
    spec.validate()
    base = spec.base
    cyc = spec.cycle
    g = spec.g
    b = superedge_b()
    bm = b.multipole

    cycle_edges = {frozenset((cyc[i], cyc[(i + 1) % g])) for i in range(g)}
    names = [base.vertex_name(v) for v in range(base.n)]
    edges: list[tuple[int, int]] = []
    base_edges: dict[int, int] = {}
    for i, (u, v) in enumerate(base.edges):
        if frozenset((u, v)) not in cycle_edges:
            base_edges[i] = len(edges)
            edges.append((u, v))

    copies = []
    for i in range(g):
        first = len(names)
        names += [f"{ch}{i}" for ch in B_VERTICES]
        copies.append(tuple(range(first, first + 8)))
    internal = []
    for i in range(g):
        ids = []
        for u, v in bm.edges:
            ids.append(len(edges))
            edges.append((copies[i][u], copies[i][v]))
        internal.append(ids)

    def at(i: int, ch: str) -> int:
        return copies[i % g][B_VERTICES.index(ch)]

    # strand edge ids per copy: la, lc, lg, s1, s2, s3
    strands = [[None] * 6 for _ in range(g)]
    a_prime: dict[int, tuple[int, int]] = {}
    for i in range(g):
        u = cyc[i]
        prev = (i - 1) % g
        strands[prev][3] = len(edges)
        edges.append((at(prev, "a"), u))
        strands[i][0] = len(edges)
        edges.append((u, at(i, "a")))
        to_c, to_g = ("h", "d") if spec.twists[i] else ("d", "h")
        slot = {"d": 4, "h": 5}
        if spec.choices[i] == A:
            e = len(edges)
            edges.append((at(prev, to_c), at(i, "c")))
            strands[prev][slot[to_c]] = e
            strands[i][1] = e
            e = len(edges)
            edges.append((at(prev, to_g), at(i, "g")))
            strands[prev][slot[to_g]] = e
            strands[i][2] = e
        else:
            u1, u2 = len(names), len(names) + 1
            names += [f"u'{i}", f"u''{i}"]
            a_prime[i] = (u1, u2)
            strands[prev][slot[to_c]] = len(edges)
            edges.append((at(prev, to_c), u1))
            strands[i][1] = len(edges)
            edges.append((u1, at(i, "c")))
            strands[prev][slot[to_g]] = len(edges)
            edges.append((at(prev, to_g), u2))
            strands[i][2] = len(edges)
            edges.append((u2, at(i, "g")))
            edges.append((u1, u2))

    m = check(graph(len(names), edges, names))
    copy_elements = tuple(tuple(internal[i]) + tuple(strands[i]) for i in range(g))
    return SuperpositionResult(spec, m, tuple(copies), copy_elements, a_prime, base_edges)


def family_size(g: int) -> int:
    if g < 3:
        raise ValueError("a cycle has at least 3 vertices")
    return 2 ** g


def all_choice_vectors(g: int) -> list[tuple[str, ...]]:
    return [tuple(A_PRIME if mask >> i & 1 else A for i in range(g)) for mask in range(2 ** g)]


def is_snark(m: Multipole, timeout: float | None = None) -> bool:
    if not m.is_graph or any(len(inc) != 3 for inc in m.incidence):
        raise MultipoleError("snark check needs a cubic graph")
    return not bridges(m) and not is_3_edge_colorable(m, timeout=timeout)


def expected_order(base: Multipole, choices: Sequence[str]) -> int:
    return base.n + 8 * len(choices) + 2 * sum(c == A_PRIME for c in choices)
