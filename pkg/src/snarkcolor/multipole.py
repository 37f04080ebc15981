"""Cubic multipoles: vertices, edges and semiedges grouped into connectors.

Elements of a multipole are numbered densely: edges first (``0 .. E-1``),
then semiedges (``E .. E+S-1``).  Colorings and search code index by element.

A submultipole remembers the multipole it was cut from (``parent``) together
with one *origin key* per element:

* ``("e", i)``      the element is edge ``i`` of the parent,
* ``("s", j)``      the element is semiedge ``j`` of the parent (inherited),
* ``("h", i, v)``   the element is the half of parent edge ``i`` that stays
                    at parent vertex ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class MultipoleError(ValueError):
    """Raised for structurally invalid multipole operations."""


class Semiedge(NamedTuple):
    """Incidence of a semiedge: attached to ``vertex`` or paired with ``mate``."""

    vertex: int | None = None
    mate: int | None = None

    @property
    def isolated(self) -> bool:
        return self.mate is not None


OriginKey = tuple


@dataclass(frozen=True, eq=False)
class Multipole:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    semiedges: tuple[Semiedge, ...] = ()
    connectors: tuple[tuple[int, ...], ...] = ()
    vertex_names: tuple[str, ...] | None = None
    semiedge_names: tuple[str, ...] | None = None
    parent: Multipole | None = field(default=None, repr=False)
    vertex_origin: tuple[int, ...] | None = field(default=None, repr=False)
    element_origin: tuple[OriginKey, ...] | None = field(default=None, repr=False)

    # -- element numbering -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_elements(self) -> int:
        return len(self.edges) + len(self.semiedges)

    def semiedge_element(self, j: int) -> int:
        return len(self.edges) + j

    def is_edge_element(self, x: int) -> bool:
        return x < len(self.edges)

    def element_name(self, x: int) -> str:
        if x < len(self.edges):
            return f"e{x}"
        return f"s{x - len(self.edges)}"

    def parse_element(self, name: str) -> int:
        kind, idx = name[0], int(name[1:])
        if kind == "e" and 0 <= idx < len(self.edges):
            return idx
        if kind == "s" and 0 <= idx < len(self.semiedges):
            return len(self.edges) + idx
        raise MultipoleError(f"unknown element {name!r}")

    @property
    def is_graph(self) -> bool:
        return not self.semiedges

    # -- incidence ---------------------------------------------------------

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Elements incident to each vertex (an edge appears once per end)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        for j, s in enumerate(self.semiedges):
            if s.vertex is not None:
                inc[s.vertex].append(len(self.edges) + j)
        return tuple(tuple(x) for x in inc)

    def element_vertices(self, x: int) -> tuple[int, ...]:
        if x < len(self.edges):
            return self.edges[x]
        s = self.semiedges[x - len(self.edges)]
        return () if s.vertex is None else (s.vertex,)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for x in self.incidence[v]:
            if x < len(self.edges):
                a, b = self.edges[x]
                out.append(b if a == v else a)
        return out

    @cached_property
    def _edge_lookup(self) -> dict[frozenset, list[int]]:
        table: dict[frozenset, list[int]] = {}
        for i, (u, v) in enumerate(self.edges):
            table.setdefault(frozenset((u, v)), []).append(i)
        return table

    def edge_index(self, u: int, v: int) -> int:
        found = self._edge_lookup.get(frozenset((u, v)), [])
        if len(found) != 1:
            raise MultipoleError(f"expected exactly one edge {u}-{v}, found {len(found)}")
        return found[0]

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edge_lookup

    @cached_property
    def _vertex_lookup(self) -> dict[str, int]:
        if self.vertex_names is None:
            return {}
        return {name: i for i, name in enumerate(self.vertex_names)}

    def vertex(self, name: str) -> int:
        try:
            return self._vertex_lookup[name]
        except KeyError:
            raise MultipoleError(f"no vertex named {name!r}") from None

    def vertex_name(self, v: int) -> str:
        return self.vertex_names[v] if self.vertex_names else str(v)

    def semiedge_named(self, name: str) -> int:
        if self.semiedge_names is None or name not in self.semiedge_names:
            raise MultipoleError(f"no semiedge named {name!r}")
        return self.semiedge_names.index(name)

    # -- provenance --------------------------------------------------------

    def origin_keys(self) -> tuple[OriginKey, ...]:
        """Per-element keys relative to the parent (identity keys for a root)."""
        if self.element_origin is not None:
            return self.element_origin
        e = len(self.edges)
        return tuple(("e", i) for i in range(e)) + tuple(("s", j) for j in range(len(self.semiedges)))

    @property
    def root(self) -> Multipole:
        m = self
        while m.parent is not None:
            m = m.parent
        return m

    def root_vertex(self, v: int) -> int:
        m = self
        while m.parent is not None:
            v = m.vertex_origin[v]
            m = m.parent
        return v

    def root_key(self, x: int) -> OriginKey:
        """Origin key of element ``x`` expressed against the root multipole."""
        key = self.origin_keys()[x]
        m = self
        while m.parent is not None:
            p = m.parent
            if p.parent is None:
                return key
            pkey = p.origin_keys()[_key_element(p, key)]
            if key[0] == "h":
                key = ("h", pkey[1], p.vertex_origin[key[2]])
            else:
                key = pkey
            m = p
        return key

    def signature(self) -> tuple[frozenset, frozenset]:
        """Root-relative structure, independent of element numbering."""
        verts = frozenset(self.root_vertex(v) for v in range(self.n))
        elems = frozenset(self.root_key(x) for x in range(self.num_elements))
        return verts, elems


def _key_element(m: Multipole, key: OriginKey) -> int:
    """Element of ``m`` that a child key (``e``/``s``/``h``) points to."""
    if key[0] in ("e", "h"):
        return key[1]
    return len(m.edges) + key[1]


# -- construction helpers ----------------------------------------------------


def graph(n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> Multipole:
    """A graph is a multipole without semiedges."""
    return Multipole(n, tuple((int(u), int(v)) for u, v in edges),
                     vertex_names=tuple(names) if names is not None else None)


def tripod() -> Multipole:
    """Single vertex carrying three semiedges, each its own connector."""
    return Multipole(1, (), (Semiedge(0), Semiedge(0), Semiedge(0)), ((0,), (1,), (2,)))


def isolated_edge() -> Multipole:
    return Multipole(0, (), (Semiedge(mate=1), Semiedge(mate=0)), ((0,), (1,)))


# -- validation --------------------------------------------------------------


def validate(m: Multipole) -> list[str]:
    """Every violated cubic-multipole invariant, as readable messages."""
    problems: list[str] = []
    for i, (u, v) in enumerate(m.edges):
        if not (0 <= u < m.n and 0 <= v < m.n):
            problems.append(f"edge e{i} has an endpoint outside 0..{m.n - 1}")
        elif u == v:
            problems.append(f"edge e{i} is a loop at vertex {u}")
    for j, s in enumerate(m.semiedges):
        if (s.vertex is None) == (s.mate is None):
            problems.append(f"semiedge s{j} must have exactly one incidence")
        elif s.vertex is not None and not 0 <= s.vertex < m.n:
            problems.append(f"semiedge s{j} attached to unknown vertex {s.vertex}")
        elif s.mate is not None:
            if not 0 <= s.mate < len(m.semiedges) or s.mate == j:
                problems.append(f"semiedge s{j} has invalid mate {s.mate}")
            elif m.semiedges[s.mate].mate != j:
                problems.append(f"mate relation broken between s{j} and s{s.mate}")
    if not problems:
        for v, inc in enumerate(m.incidence):
            if len(inc) != 3:
                problems.append(f"vertex {v}: degree {len(inc)} ≠ 3")
    seen: dict[int, int] = {}
    for ci, conn in enumerate(m.connectors):
        if not conn:
            problems.append(f"connector {ci} is empty")
        for j in conn:
            if not 0 <= j < len(m.semiedges):
                problems.append(f"connector {ci} lists unknown semiedge {j}")
            elif j in seen:
                problems.append(f"semiedge s{j} in connectors {seen[j]} and {ci}")
            else:
                seen[j] = ci
    return problems


def check(m: Multipole) -> Multipole:
    problems = validate(m)
    if problems:
        raise MultipoleError("; ".join(problems))
    return m


# -- submultipoles -----------------------------------------------------------


def induced_submultipole(m: Multipole, vertices: Iterable[int]) -> Multipole:
    """``M[T]``: edges inside T, inherited semiedges at T, halves of cut edges.

    Vertices keep their relative order; edges, inherited semiedges and halves
    follow the parent's element order.
    """
    t = sorted(set(vertices))
    for v in t:
        if not 0 <= v < m.n:
            raise MultipoleError(f"unknown vertex {v}")
    new_id = {v: i for i, v in enumerate(t)}
    edges: list[tuple[int, int]] = []
    keys: list[OriginKey] = []
    halves: list[tuple[Semiedge, OriginKey, str]] = []
    for i, (u, v) in enumerate(m.edges):
        if u in new_id and v in new_id:
            edges.append((new_id[u], new_id[v]))
            keys.append(("e", i))
        elif u in new_id or v in new_id:
            w, other = (u, v) if u in new_id else (v, u)
            halves.append((Semiedge(new_id[w]), ("h", i, w),
                           f"{m.vertex_name(w)}~{m.vertex_name(other)}"))
    semis: list[Semiedge] = []
    skeys: list[OriginKey] = []
    snames: list[str] = []
    for j, s in enumerate(m.semiedges):
        if s.vertex is not None and s.vertex in new_id:
            semis.append(Semiedge(new_id[s.vertex]))
            skeys.append(("s", j))
            snames.append(m.semiedge_names[j] if m.semiedge_names else f"s{j}")
    for s, key, name in halves:
        semis.append(s)
        skeys.append(key)
        snames.append(name)
    names = tuple(m.vertex_name(v) for v in t) if m.vertex_names else None
    return Multipole(
        len(t), tuple(edges), tuple(semis), (), names, tuple(snames),
        parent=m, vertex_origin=tuple(t), element_origin=tuple(keys + skeys),
    )


def union(m1: Multipole, m2: Multipole, origin: Multipole | None = None) -> Multipole:
    """Union of two vertex-disjoint submultipoles of the same multipole.

    Two halves of one parent edge, one in each part, become that edge again.
    """
    parent = m1.parent
    if parent is None or m2.parent is not parent or (origin is not None and origin is not parent):
        raise MultipoleError("parts are not submultipoles of the same origin")
    v1 = set(m1.vertex_origin)
    v2 = set(m2.vertex_origin)
    if v1 & v2:
        raise MultipoleError(f"parts share vertices {sorted(v1 & v2)}")
    verts = sorted(v1 | v2)
    new_id = {v: i for i, v in enumerate(verts)}
    keys1, keys2 = m1.origin_keys(), m2.origin_keys()
    halves2 = {k[1]: k for k in keys2 if k[0] == "h"}
    joined = {k[1] for k in keys1 if k[0] == "h" and k[1] in halves2}

    edge_keys = sorted({k[1] for k in keys1 + keys2 if k[0] == "e"} | joined)
    edges = []
    for i in edge_keys:
        u, v = parent.edges[i]
        edges.append((new_id[u], new_id[v]))
    semis, skeys, snames = [], [], []
    for part, keys in ((m1, keys1), (m2, keys2)):
        for x in range(part.num_edges, part.num_elements):
            k = keys[x]
            if k[0] == "h" and k[1] in joined:
                continue
            pv = part.vertex_origin[part.semiedges[x - part.num_edges].vertex]
            semis.append(Semiedge(new_id[pv]))
            skeys.append(k)
            j = x - part.num_edges
            snames.append(part.semiedge_names[j] if part.semiedge_names else f"s{j}")
    order = sorted(range(len(semis)), key=lambda i: _key_order(skeys[i]))
    names = tuple(parent.vertex_name(v) for v in verts) if parent.vertex_names else None
    return Multipole(
        len(verts), tuple(edges), tuple(semis[i] for i in order), (), names,
        tuple(snames[i] for i in order), parent=parent, vertex_origin=tuple(verts),
        element_origin=tuple(("e", i) for i in edge_keys) + tuple(skeys[i] for i in order),
    )


def _key_order(key: OriginKey) -> tuple:
    # inherited semiedges before halves, matching induced_submultipole
    return (0, key[1]) if key[0] == "s" else (1, key[1], key[2])


# -- joining connectors ------------------------------------------------------


def disjoint_union(m1: Multipole, m2: Multipole) -> Multipole:
    off_v, off_s = m1.n, len(m1.semiedges)
    edges = m1.edges + tuple((u + off_v, v + off_v) for u, v in m2.edges)
    semis = m1.semiedges + tuple(
        Semiedge(s.vertex + off_v) if s.vertex is not None else Semiedge(mate=s.mate + off_s)
        for s in m2.semiedges
    )
    conns = m1.connectors + tuple(tuple(j + off_s for j in c) for c in m2.connectors)
    names = None
    if m1.vertex_names or m2.vertex_names:
        names = tuple(m1.vertex_name(v) for v in range(m1.n)) + tuple(
            m2.vertex_name(v) for v in range(m2.n))
    return Multipole(m1.n + m2.n, edges, semis, conns, names)


def join(m1: Multipole, c1: int, m2: Multipole, c2: int, perm: Sequence[int] | None = None) -> Multipole:
    """Identify semiedge ``k`` of connector ``c1`` of ``m1`` with semiedge
    ``perm[k]`` of connector ``c2`` of ``m2``."""
    both = disjoint_union(m1, m2)
    return self_join(both, c1, len(m1.connectors) + c2, perm)


def self_join(m: Multipole, c1: int, c2: int, perm: Sequence[int] | None = None) -> Multipole:
    """Identify two connectors of one multipole (see :func:`join`)."""
    if c1 == c2:
        raise MultipoleError("cannot join a connector with itself")
    a, b = m.connectors[c1], m.connectors[c2]
    if len(a) != len(b):
        raise MultipoleError(f"connector sizes differ: {len(a)} vs {len(b)}")
    perm = list(range(len(a))) if perm is None else list(perm)
    if sorted(perm) != list(range(len(a))):
        raise MultipoleError(f"not a permutation of 0..{len(a) - 1}: {perm}")
    link: dict[int, int] = {}
    for k, j in enumerate(perm):
        x, y = a[k], b[j]
        link[x] = y
        link[y] = x

    def walk(j: int) -> tuple[str, int, set[int]]:
        """Follow semiedge j inward to a vertex or to a free semiedge."""
        seen = {j}
        while True:
            s = m.semiedges[j]
            if s.vertex is not None:
                return "vertex", s.vertex, seen
            mate = s.mate
            if mate not in link:
                return "free", mate, seen
            j = link[mate]
            if j in seen:
                raise MultipoleError("identification closes a vertex-free loop")
            seen.update((mate, j))

    for x, y in link.items():
        if m.semiedges[x].mate == y:
            raise MultipoleError(f"semiedges s{x} and s{y} form one isolated edge")

    edges = list(m.edges)
    done: set[int] = set()
    for x in sorted(link):
        if x in done:
            continue
        kind_x, end_x, seen_x = walk(x)
        kind_y, end_y, seen_y = walk(link[x])
        done |= seen_x | seen_y
        if kind_x == kind_y == "vertex":
            if end_x == end_y:
                raise MultipoleError(f"join would create a loop at vertex {end_x}")
            edges.append((end_x, end_y))

    survivors = [j for j in range(len(m.semiedges)) if j not in link]
    new_sid = {j: i for i, j in enumerate(survivors)}
    semis = []
    for j in survivors:
        s = m.semiedges[j]
        if s.vertex is not None:
            semis.append(s)
            continue
        # survivor is one end of a spliced isolated strand
        if s.mate in link:
            kind, target, _ = walk(link[s.mate])
        else:
            kind, target = "free", s.mate
        semis.append(Semiedge(target) if kind == "vertex" else Semiedge(mate=new_sid[target]))
    conns = tuple(
        tuple(new_sid[j] for j in c) for ci, c in enumerate(m.connectors) if ci not in (c1, c2)
    )
    names = None
    if m.semiedge_names:
        names = tuple(m.semiedge_names[j] for j in survivors)
    return Multipole(m.n, tuple(edges), tuple(semis), conns, m.vertex_names, names)


# -- structure queries -------------------------------------------------------


def _require_graph(m: Multipole) -> None:
    if not m.is_graph:
        raise MultipoleError("operation needs a graph (no semiedges)")


def is_connected(m: Multipole, skip_edge: int | None = None) -> bool:
    if m.n == 0:
        return True
    seen = {0}
    todo = deque([0])
    while todo:
        v = todo.popleft()
        for x in m.incidence[v]:
            if x == skip_edge or x >= m.num_edges:
                continue
            a, b = m.edges[x]
            w = b if a == v else a
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == m.n


def bridges(m: Multipole) -> list[int]:
    """Edges whose removal disconnects their endpoints."""
    out = []
    for i, (u, v) in enumerate(m.edges):
        if not _reachable(m, u, v, skip_edge=i):
            out.append(i)
    return out


def _reachable(m: Multipole, s: int, t: int, skip_edge: int) -> bool:
    seen = {s}
    todo = [s]
    while todo:
        v = todo.pop()
        if v == t:
            return True
        for x in m.incidence[v]:
            if x == skip_edge or x >= m.num_edges:
                continue
            a, b = m.edges[x]
            w = b if a == v else a
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return False


def is_bridgeless(m: Multipole) -> bool:
    _require_graph(m)
    return not bridges(m)


def girth(m: Multipole) -> float:
    """Length of a shortest cycle (parallel edges count as 2-cycles)."""
    _require_graph(m)
    if len(m._edge_lookup) < m.num_edges:
        return 2
    best = float("inf")
    for s in range(m.n):
        dist = {s: 0}
        parent_edge = {s: None}
        todo = deque([s])
        while todo:
            v = todo.popleft()
            for x in m.incidence[v]:
                if x == parent_edge[v]:
                    continue
                a, b = m.edges[x]
                w = b if a == v else a
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent_edge[w] = x
                    todo.append(w)
                else:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def cycles_of_length(m: Multipole, length: int) -> list[tuple[int, ...]]:
    """All simple cycles with ``length`` vertices, each listed once.

    A cycle is reported starting at its smallest vertex, in the direction
    whose second vertex is smaller.
    """
    _require_graph(m)
    found = []
    for start in range(m.n):
        path = [start]
        on_path = {start}

        def extend(v: int) -> None:
            if len(path) == length:
                if start in m.neighbors(v) and path[1] < path[-1]:
                    found.append(tuple(path))
                return
            for w in sorted(set(m.neighbors(v))):
                if w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        if length >= 3:
            extend(start)
    return found


def find_cycle(m: Multipole, length: int | None = None, parity: str | None = None) -> tuple[int, ...] | None:
    """A cycle of the requested length and/or parity ('even'/'odd'), or None."""
    _require_graph(m)
    if length is not None:
        lengths = [length]
    else:
        lengths = list(range(3, m.n + 1))
    if parity is not None:
        want = 0 if parity == "even" else 1
        lengths = [L for L in lengths if L % 2 == want]
    for L in lengths:
        cycles = cycles_of_length(m, L)
        if cycles:
            return cycles[0]
    return None


def cycle_edges(m: Multipole, cycle: Sequence[int]) -> list[int]:
    return [m.edge_index(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def is_cycle(m: Multipole, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(m.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def to_networkx(m: Multipole):
    import networkx as nx

    g = nx.MultiGraph()
    g.add_nodes_from(range(m.n))
    g.add_edges_from(m.edges)
    return g


def is_isomorphic(m1: Multipole, m2: Multipole) -> bool:
    """Isomorphism of the underlying (multi)graphs, semiedges ignored."""
    import networkx as nx

    return nx.is_isomorphic(to_networkx(m1), to_networkx(m2))


def vertex_pairs_without_edge(m: Multipole) -> Iterable[tuple[int, int]]:
    for u, v in combinations(range(m.n), 2):
        if not m.has_edge(u, v):
            yield u, v
