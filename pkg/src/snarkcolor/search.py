"""Exhaustive backtracking over proper and normal k-edge-colorings.

One search variable stands for each edge, each vertex-attached semiedge and
each isolated edge (its two semiedges always share a color).  Colors are
bitmasks (bit ``c`` for color ``c``) so palettes are plain ints.

Normality pruning uses the "other two colors" view of an edge ``uv`` colored
``c``: let ``A`` and ``B`` be the colors already at ``u`` and ``v`` besides
``c``.  The edge can still end up poor only if ``|A ∪ B| <= 2`` and rich only
if ``A ∩ B`` is empty (and at least 5 colors exist).  When neither holds no
completion can make it normal, so the branch is cut before the palettes fill.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .coloring import EdgeColoring, is_normal, is_proper, poor_edges
from .multipole import Multipole


class SearchTimeout(RuntimeError):
    """The configured time budget ran out before the search finished."""


def default_timeout() -> float | None:
    raw = os.environ.get("SNARKCOLOR_TIMEOUT_SECS")
    if raw is None:
        return 600.0
    value = float(raw)
    return None if value <= 0 else value


@dataclass(frozen=True)
class SearchProblem:
    multipole: Multipole
    k: int = 5
    normal: bool = True
    fixed: Mapping[int, int] = field(default_factory=dict)
    domains: Mapping[int, frozenset[int]] | None = None
    up_to_permutation: bool = False
    timeout: float | None = None
    jobs: int = 1


@dataclass
class SearchOutcome:
    mode: str
    status: str = "exact"
    count: int | None = None
    classes: int | None = None
    witness: EdgeColoring | None = None
    max_poor: int | None = None
    nodes: int = 0
    seconds: float = 0.0


def _bits(colors) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


class _Compiled:
    """Variables, static order and masks for one problem."""

    def __init__(self, p: SearchProblem):
        m = p.multipole
        if p.up_to_permutation and p.domains:
            raise ValueError("per-element domains cannot be combined with up-to-permutation counting")
        if not 1 <= p.k <= 30:
            raise ValueError(f"unsupported number of colors {p.k}")
        self.m = m
        self.k = p.k
        self.normal = p.normal
        E = m.num_edges
        full = _bits(range(1, p.k + 1))

        var_of = [-1] * m.num_elements
        groups: list[tuple[int, ...]] = []
        for x in range(m.num_elements):
            if var_of[x] >= 0:
                continue
            grp = [x]
            if x >= E and m.semiedges[x - E].mate is not None:
                grp.append(E + m.semiedges[x - E].mate)
            for y in grp:
                var_of[y] = len(groups)
            groups.append(tuple(grp))
        self.var_of = var_of
        self.groups = groups
        nv = len(groups)
        self.nv = nv
        self.var_verts = [m.element_vertices(g[0]) for g in groups]
        self.is_edge = [g[0] < E for g in groups]
        self.num_edge_vars = sum(self.is_edge)

        allowed = [full] * nv
        fixed_colors: set[int] = set()
        self.infeasible = False
        for x, c in p.fixed.items():
            if not 1 <= c <= p.k:
                raise ValueError(f"fixed color {c} outside 1..{p.k}")
            allowed[var_of[x]] &= 1 << c
            fixed_colors.add(c)
        if p.domains:
            for x, dom in p.domains.items():
                allowed[var_of[x]] &= _bits(dom)
        if any(a == 0 for a in allowed):
            self.infeasible = True
        self.allowed = allowed
        fixed_vars = sorted({var_of[x] for x in p.fixed})

        vv: list[list[int]] = [[] for _ in range(m.n)]
        for var, vs in enumerate(self.var_verts):
            for v in vs:
                vv[v].append(var)
        self.vertex_vars = [tuple(x) for x in vv]
        self.order = self._static_order(fixed_vars)

        if p.up_to_permutation:
            free = [c for c in range(1, p.k + 1) if c not in fixed_colors]
        else:
            free = []
        self.free = free
        self.fidx = [-1] * (p.k + 1)
        for i, c in enumerate(free):
            self.fidx[c] = i
        self.prefix_masks = [_bits(free[:i]) for i in range(len(free) + 1)]
        self.nonfree_mask = full & ~_bits(free)

    def _static_order(self, first: list[int]) -> list[int]:
        """Fixed variables, then repeatedly the one touching most ordered ones."""
        order = list(first)
        placed = set(order)
        count = [0] * self.m.n
        for var in order:
            for v in self.var_verts[var]:
                count[v] += 1
        rest = [var for var in range(self.nv) if var not in placed and self.var_verts[var]]
        while rest:
            best = max(rest, key=lambda var: (sum(count[v] for v in self.var_verts[var]),
                                               max((count[v] for v in self.var_verts[var]), default=0),
                                               -var))
            rest.remove(best)
            order.append(best)
            for v in self.var_verts[best]:
                count[v] += 1
        order += [var for var in range(self.nv) if var not in placed and not self.var_verts[var]
                  and var not in order]
        return order

    def to_coloring(self, color: list[int]) -> EdgeColoring:
        cols = [0] * self.m.num_elements
        for var, grp in enumerate(self.groups):
            c = color[var].bit_length() - 1
            for x in grp:
                cols[x] = c
        return EdgeColoring(self.k, tuple(cols))

    def orbit(self, m_used: int) -> int:
        f = len(self.free)
        return math.perm(f, m_used)


class _Engine:
    """Depth-first search; ``best`` bounds the poor count when maximizing."""

    def __init__(self, comp: _Compiled, track_poor: bool = False, deadline: float | None = None):
        self.c = comp
        self.track_poor = track_poor
        self.best = -1
        self.deadline = deadline
        self.nodes = 0

    def run(self, prefix: tuple[int, ...] = (), stop: int | None = None) -> Iterator[tuple[int, list[int], int]]:
        """Yield ``(colors used from the free set, color masks, poor count)``
        at every leaf (or at depth ``stop``)."""
        comp = self.c
        if comp.infeasible:
            return
        order = comp.order
        n = len(order)
        if stop is None or stop > n:
            stop = n
        nv = comp.nv
        verts = comp.var_verts
        vv = comp.vertex_vars
        allowed = comp.allowed
        is_edge = comp.is_edge
        normal = comp.normal
        five = comp.k >= 5
        track = self.track_poor
        fidx = comp.fidx
        prefix_masks = comp.prefix_masks
        nonfree = comp.nonfree_mask
        nfree = len(comp.free)
        sym = nfree > 0
        total_edges = comp.num_edge_vars
        deadline = self.deadline

        color = [0] * nv
        used = [0] * comp.m.n
        dead_at = [-1] * nv
        trail: list[int] = []
        state = [0]  # number of edges that can no longer be poor
        ms = [0] * (n + 1)
        cands = [0] * (n + 1)

        def edge_ok(e: int) -> bool:
            u, v = verts[e]
            b = color[e]
            a1 = used[u] & ~b
            a2 = used[v] & ~b
            if (a1 | a2).bit_count() <= 2:
                return True
            return five and not (a1 & a2)

        def assign(x: int, b: int, depth: int) -> bool:
            color[x] = b
            vs = verts[x]
            for v in vs:
                used[v] |= b
            for v in vs:
                for w in vv[v]:
                    if color[w] == 0:
                        av = allowed[w]
                        for z in verts[w]:
                            av &= ~used[z]
                        if not av:
                            return False
                    elif normal and is_edge[w] and not edge_ok(w):
                        return False
            if track:
                for v in vs:
                    for w in vv[v]:
                        if is_edge[w] and dead_at[w] < 0:
                            u1, u2 = verts[w]
                            if (used[u1] | used[u2]).bit_count() > 3:
                                dead_at[w] = depth
                                trail.append(w)
                                state[0] += 1
                if total_edges - state[0] <= self.best:
                    return False
            return True

        def undo(x: int, depth: int) -> None:
            b = color[x]
            for v in verts[x]:
                used[v] &= ~b
            color[x] = 0
            if track:
                while trail and dead_at[trail[-1]] == depth:
                    dead_at[trail.pop()] = -1
                    state[0] -= 1

        def candidates(depth: int) -> int:
            x = order[depth]
            av = allowed[x]
            for v in verts[x]:
                av &= ~used[v]
            if sym:
                m = ms[depth]
                av &= nonfree | prefix_masks[min(m + 1, nfree)]
            return av

        def after(depth: int, b: int) -> int:
            m = ms[depth]
            if sym and m < nfree and fidx[b.bit_length() - 1] == m:
                return m + 1
            return m

        depth = 0
        for b_col in prefix:
            b = 1 << b_col
            if not candidates(depth) & b or not assign(order[depth], b, depth):
                return
            ms[depth + 1] = after(depth, b)
            depth += 1
        start = depth
        if depth == stop:
            yield ms[depth], color, total_edges - state[0]
            return
        cands[depth] = candidates(depth)
        nodes = 0
        while depth >= start:
            x = order[depth]
            if color[x]:
                undo(x, depth)
            cm = cands[depth]
            if not cm:
                depth -= 1
                continue
            b = cm & -cm
            cands[depth] = cm ^ b
            nodes += 1
            if deadline is not None and not nodes & 0xFFF and time.monotonic() > deadline:
                self.nodes += nodes
                raise SearchTimeout(f"time budget exhausted after {self.nodes} nodes")
            if not assign(x, b, depth):
                continue
            nxt = depth + 1
            ms[nxt] = after(depth, b)
            if nxt == stop:
                self.nodes += nodes
                nodes = 0
                yield ms[nxt], color, total_edges - state[0]
            else:
                depth = nxt
                cands[depth] = candidates(depth)
        self.nodes += nodes


def _deadline(timeout: float | None) -> float | None:
    return None if timeout is None else time.monotonic() + timeout


def _check_witness(p: SearchProblem, col: EdgeColoring) -> None:
    # every witness goes through the independent checker before release
    m = p.multipole
    if not is_proper(m, col) or (p.normal and not is_normal(m, col)):
        raise AssertionError("search produced a coloring that fails verification")
    for x, c in p.fixed.items():
        if col.colors[x] != c:
            raise AssertionError("search witness ignores a fixed color")


# -- counting, possibly split across processes ------------------------------


def _count_task(args) -> tuple[int, int, int]:
    p, prefix = args
    comp = _Compiled(p)
    eng = _Engine(comp, deadline=_deadline(p.timeout))
    classes = labeled = 0
    for m_used, _, _ in eng.run(prefix):
        classes += 1
        labeled += comp.orbit(m_used)
    return classes, labeled, eng.nodes


def _split_prefixes(comp: _Compiled, jobs: int) -> list[tuple[int, ...]]:
    """Partial assignments at the shallowest depth giving enough subtrees."""
    for depth in range(1, len(comp.order) + 1):
        eng = _Engine(comp)
        prefixes = [tuple(color[comp.order[i]].bit_length() - 1 for i in range(depth))
                    for _, color, _ in eng.run(stop=depth)]
        if len(prefixes) >= 4 * jobs or depth == len(comp.order):
            return prefixes
    return [()]


def count(p: SearchProblem) -> SearchOutcome:
    """Number of colorings; with ``up_to_permutation`` also the class count.

    ``count`` is always the labeled total, obtained from canonical
    representatives times their exact orbit sizes.
    """
    t0 = time.monotonic()
    comp = _Compiled(p)
    if p.jobs > 1:
        prefixes = _split_prefixes(comp, p.jobs)
        with ProcessPoolExecutor(max_workers=p.jobs) as pool:
            results = list(pool.map(_count_task, [(p, pre) for pre in prefixes]))
        classes = sum(r[0] for r in results)
        labeled = sum(r[1] for r in results)
        nodes = sum(r[2] for r in results)
    else:
        classes, labeled, nodes = _count_task((p, ()))
    return SearchOutcome("count", count=labeled, classes=classes if p.up_to_permutation else labeled,
                         nodes=nodes, seconds=time.monotonic() - t0)


def enumerate_colorings(p: SearchProblem) -> Iterator[EdgeColoring]:
    """Colorings in the engine's deterministic order (canonical ones when
    counting up to color permutation)."""
    comp = _Compiled(p)
    eng = _Engine(comp, deadline=_deadline(p.timeout))
    for _, color, _ in eng.run():
        col = comp.to_coloring(color)
        _check_witness(p, col)
        yield col


def find(p: SearchProblem) -> EdgeColoring | None:
    return next(enumerate_colorings(p), None)


def exists(p: SearchProblem) -> SearchOutcome:
    t0 = time.monotonic()
    comp = _Compiled(p)
    eng = _Engine(comp, deadline=_deadline(p.timeout))
    witness = None
    for _, color, _ in eng.run():
        witness = comp.to_coloring(color)
        _check_witness(p, witness)
        break
    return SearchOutcome("exists", count=int(witness is not None), witness=witness,
                         nodes=eng.nodes, seconds=time.monotonic() - t0)


def is_3_edge_colorable(m: Multipole, timeout: float | None = None) -> bool:
    return exists(SearchProblem(m, k=3, normal=False, up_to_permutation=True,
                                timeout=timeout)).witness is not None


def max_poor(m: Multipole, k: int = 5, fixed: Mapping[int, int] | None = None,
             timeout: float | None = None) -> SearchOutcome:
    """Largest number of poor edges over all normal k-colorings.

    A 3-edge-colorable input is settled at once: every edge is poor.
    ``witness`` is None exactly when no normal coloring exists.
    """
    t0 = time.monotonic()
    fixed = dict(fixed or {})
    if not fixed:
        three = exists(SearchProblem(m, k=3, normal=False, up_to_permutation=True, timeout=timeout))
        if three.witness is not None:
            w = EdgeColoring(k, three.witness.colors)
            return SearchOutcome("max_poor", witness=w, max_poor=m.num_edges,
                                 nodes=three.nodes, seconds=time.monotonic() - t0)
    p = SearchProblem(m, k=k, normal=True, fixed=fixed, up_to_permutation=True, timeout=timeout)
    comp = _Compiled(p)
    eng = _Engine(comp, track_poor=True, deadline=_deadline(timeout))
    best = None
    status = "exact"
    try:
        for _, color, poor in eng.run():
            if poor > eng.best:
                eng.best = poor
                best = comp.to_coloring(color)
                if poor == m.num_edges:
                    break
    except SearchTimeout:
        status = "timeout"  # best so far is only a lower bound
    if best is not None:
        _check_witness(p, best)
        if len(poor_edges(m, best)) != eng.best:
            raise AssertionError("poor-count bookkeeping disagrees with the checker")
    return SearchOutcome("max_poor", status=status, witness=best,
                         max_poor=None if best is None else eng.best, nodes=eng.nodes, seconds=time.monotonic() - t0)


def solve(p: SearchProblem, mode: str = "count") -> SearchOutcome:
    if mode == "count":
        return count(p)
    if mode == "exists":
        return exists(p)
    if mode == "max_poor":
        if p.domains or not p.normal:
            raise ValueError("max_poor works on plain normal colorings")
        return max_poor(p.multipole, p.k, p.fixed, p.timeout)
    raise ValueError(f"unknown mode {mode!r}")
