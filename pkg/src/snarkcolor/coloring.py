"""Proper and normal edge-colorings of multipoles.

A coloring assigns a color in ``1..k`` to every element (edge or semiedge)
of a multipole; see :mod:`snarkcolor.multipole` for element numbering.
An edge ``uv`` is *poor* when the palettes at ``u`` and ``v`` together hold
3 colors, *rich* when they hold 5, and *abnormal* otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .multipole import Multipole, MultipoleError

POOR, RICH, ABNORMAL = "poor", "rich", "abnormal"


class ColoringError(ValueError):
    pass


class StaleChainError(ColoringError):
    """The coloring changed on the chain since the chain was found."""


class IncompatibleColorings(ColoringError):
    """Colorings of two parts cannot be merged into one normal coloring."""

    def __init__(self, kind: str, element: int, detail: str = ""):
        self.kind = kind
        self.element = element
        self.detail = detail
        super().__init__(f"{kind} at element {element}" + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    colors: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.colors[x]

    def __len__(self) -> int:
        return len(self.colors)

    def updated(self, changes: Mapping[int, int]) -> EdgeColoring:
        cols = list(self.colors)
        for x, col in changes.items():
            cols[x] = col
        return EdgeColoring(self.k, tuple(cols))

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.colors)


def coloring(k: int, colors: Iterable[int]) -> EdgeColoring:
    return EdgeColoring(k, tuple(int(c) for c in colors))


def _check_total(m: Multipole, c: EdgeColoring) -> None:
    if len(c.colors) != m.num_elements:
        raise ColoringError(f"coloring has {len(c.colors)} entries, multipole has {m.num_elements} elements")
    for x, col in enumerate(c.colors):
        if not 1 <= col <= c.k:
            raise ColoringError(f"element {m.element_name(x)} has color {col} outside 1..{c.k}")


def palette(m: Multipole, c: EdgeColoring, v: int) -> frozenset[int]:
    return frozenset(c.colors[x] for x in m.incidence[v])


def is_proper(m: Multipole, c: EdgeColoring) -> bool:
    _check_total(m, c)
    for inc in m.incidence:
        if len({c.colors[x] for x in inc}) != len(inc):
            return False
    e = m.num_edges
    for j, s in enumerate(m.semiedges):
        if s.mate is not None and c.colors[e + j] != c.colors[e + s.mate]:
            return False
    return True


def classify_edge(m: Multipole, c: EdgeColoring, e: int) -> str:
    if not 0 <= e < m.num_edges:
        raise MultipoleError(f"element {e} is not an edge")
    u, v = m.edges[e]
    size = len(palette(m, c, u) | palette(m, c, v))
    if size == 3:
        return POOR
    if size == 5:
        return RICH
    return ABNORMAL


def edge_classes(m: Multipole, c: EdgeColoring) -> list[str]:
    return [classify_edge(m, c, e) for e in range(m.num_edges)]


def is_normal(m: Multipole, c: EdgeColoring) -> bool:
    if not is_proper(m, c):
        raise ColoringError("coloring is not proper")
    return ABNORMAL not in edge_classes(m, c)


def poor_edges(m: Multipole, c: EdgeColoring) -> frozenset[int]:
    return frozenset(e for e, cls in enumerate(edge_classes(m, c)) if cls == POOR)


def rich_edges(m: Multipole, c: EdgeColoring) -> frozenset[int]:
    return frozenset(e for e, cls in enumerate(edge_classes(m, c)) if cls == RICH)


# -- submultipoles -----------------------------------------------------------


def restrict(c: EdgeColoring, m: Multipole, sub: Multipole) -> EdgeColoring:
    """Restriction to a submultipole cut directly from ``m``.

    Halves of cut edges take the color of the edge they came from.
    """
    if sub.parent is not m:
        raise ColoringError("target is not registered as a submultipole of this multipole")
    cols = []
    for key in sub.origin_keys():
        if key[0] == "s":
            cols.append(c.colors[m.num_edges + key[1]])
        else:
            cols.append(c.colors[key[1]])
    return EdgeColoring(c.k, tuple(cols))


def _root_edge_key(key: tuple) -> tuple:
    return ("e", key[1]) if key[0] == "h" else key


def merge_compatible(target: Multipole, *parts: tuple[Multipole, EdgeColoring]) -> EdgeColoring:
    """Merge colorings of submultipoles into a coloring of ``target``.

    ``target`` and every part must be submultipoles of one common root (or
    ``target`` is that root).  Each element of ``target`` takes the color its
    counterparts carry in the parts; a half-edge counts as the whole edge.
    Raises :class:`IncompatibleColorings` on a color mismatch, an element no
    part covers, or an edge that the merge renders abnormal.
    """
    root = target.root
    seen: dict[tuple, int] = {}
    for part, col in parts:
        if part.root is not root:
            raise ColoringError("parts do not share the target's origin")
        for x in range(part.num_elements):
            key = _root_edge_key(part.root_key(x))
            if key in seen and seen[key] != col.colors[x]:
                raise IncompatibleColorings(
                    "color mismatch", x, f"{key} colored {seen[key]} and {col.colors[x]}")
            seen[key] = col.colors[x]
    k = max(col.k for _, col in parts)
    cols = []
    for x in range(target.num_elements):
        key = target.root_key(x) if target.parent is not None else target.origin_keys()[x]
        key = _root_edge_key(key)
        if key not in seen:
            raise IncompatibleColorings("uncovered element", x, str(key))
        cols.append(seen[key])
    merged = EdgeColoring(k, tuple(cols))
    if not is_proper(target, merged):
        raise IncompatibleColorings("improper vertex", -1)
    for e in range(target.num_edges):
        if classify_edge(target, merged, e) == ABNORMAL:
            raise IncompatibleColorings("abnormal boundary edge", e)
    return merged


def are_compatible(target: Multipole, *parts: tuple[Multipole, EdgeColoring]) -> bool:
    try:
        merge_compatible(target, *parts)
    except IncompatibleColorings:
        return False
    return True


def complete_color(m: Multipole, c: EdgeColoring, x: int) -> tuple[int, frozenset[int]]:
    """``(color of semiedge x, colors of the other two elements at its vertex)``."""
    if m.is_edge_element(x):
        raise ColoringError(f"{m.element_name(x)} is an edge, not a semiedge")
    s = m.semiedges[x - m.num_edges]
    if s.vertex is None:
        raise ColoringError(f"{m.element_name(x)} belongs to an isolated edge")
    others = frozenset(c.colors[y] for y in m.incidence[s.vertex] if y != x)
    return c.colors[x], others


# -- Kempe chains ------------------------------------------------------------


@dataclass(frozen=True)
class KempeChain:
    elements: tuple[int, ...]
    pair: frozenset[int]
    colors: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.elements[0]

    @property
    def end(self) -> int:
        return self.elements[-1]


def find_kempe_chain(m: Multipole, c: EdgeColoring, start: int, pair: Iterable[int]) -> KempeChain | None:
    """Walk the alternating ``pair``-path from semiedge ``start``.

    Returns None when the walk stops at a vertex instead of a semiedge.
    """
    pair = frozenset(pair)
    if len(pair) != 2:
        raise ColoringError(f"a Kempe chain needs two colors, got {sorted(pair)}")
    if m.is_edge_element(start):
        raise ColoringError(f"{m.element_name(start)} is not a semiedge")
    if c.colors[start] not in pair:
        raise ColoringError(f"start color {c.colors[start]} not in {sorted(pair)}")
    e = m.num_edges
    s = m.semiedges[start - e]
    if s.mate is not None:
        elems = (start, e + s.mate)
        return KempeChain(elems, pair, tuple(c.colors[x] for x in elems))
    elems = [start]
    v = s.vertex
    current = c.colors[start]
    while True:
        (want,) = pair - {current}
        nxt = [x for x in m.incidence[v] if x != elems[-1] and c.colors[x] == want]
        if not nxt:
            return None
        x = nxt[0]
        elems.append(x)
        if not m.is_edge_element(x):
            return KempeChain(tuple(elems), pair, tuple(c.colors[y] for y in elems))
        a, b = m.edges[x]
        v = b if a == v else a
        current = want


def kempe_swap(m: Multipole, c: EdgeColoring, chain: KempeChain) -> EdgeColoring:
    if tuple(c.colors[x] for x in chain.elements) != chain.colors:
        raise StaleChainError("chain colors no longer match the coloring")
    i, j = sorted(chain.pair)
    return c.updated({x: (j if c.colors[x] == i else i) for x in chain.elements})


def recolor(c: EdgeColoring, elements: Iterable[int], mapping: Mapping[int, int]) -> EdgeColoring:
    """Apply a color substitution to the given elements only."""
    return c.updated({x: mapping.get(c.colors[x], c.colors[x]) for x in elements})


# -- color permutations ------------------------------------------------------


def permute_colors(c: EdgeColoring, pi: Mapping[int, int] | Sequence[int]) -> EdgeColoring:
    """``pi∘c``; a sequence ``pi`` maps color ``i`` to ``pi[i-1]``."""
    if not isinstance(pi, Mapping):
        pi = {i + 1: col for i, col in enumerate(pi)}
    return EdgeColoring(c.k, tuple(pi.get(col, col) for col in c.colors))


def canonical_order(m: Multipole) -> list[int]:
    """Edges by sorted endpoint pair, then semiedges by id."""
    edges = sorted(range(m.num_edges), key=lambda e: (tuple(sorted(m.edges[e])), e))
    return edges + list(range(m.num_edges, m.num_elements))


def canonical_form(m: Multipole, c: EdgeColoring) -> EdgeColoring:
    """Least color-permuted copy of ``c`` over :func:`canonical_order`.

    Renaming colors by order of first appearance yields it directly.
    """
    relabel: dict[int, int] = {}
    for x in canonical_order(m):
        col = c.colors[x]
        if col not in relabel:
            relabel[col] = len(relabel) + 1
    return permute_colors(c, relabel)


def canonical_form_brute(m: Multipole, c: EdgeColoring) -> EdgeColoring:
    """Reference for :func:`canonical_form`: minimum over all k! relabelings."""
    order = canonical_order(m)
    best = None
    for perm in permutations(range(1, c.k + 1)):
        cand = permute_colors(c, perm)
        key = tuple(cand.colors[x] for x in order)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]
