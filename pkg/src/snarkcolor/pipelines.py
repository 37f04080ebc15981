"""Search-driven checks on concrete graphs: the 5-cycle obstruction in the
Petersen graph, poor edges on short cycles, and the poor-edge conjecture."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .catalog import petersen, petersen_truncated
from .coloring import EdgeColoring, poor_edges
from .multipole import Multipole, cycle_edges, cycles_of_length, induced_submultipole, is_isomorphic
from .search import SearchProblem, SearchTimeout, count, enumerate_colorings, exists, find, max_poor
from .superpose import SuperpositionResult, SuperpositionSpec, build, is_snark


def unique_petersen_coloring() -> EdgeColoring:
    return find(SearchProblem(petersen(), 5, True, up_to_permutation=True))


def odd_superposition() -> SuperpositionResult:
    """All-A superposition of the Petersen graph along its outer 5-cycle."""
    return build(SuperpositionSpec(petersen(), (0, 1, 2, 3, 4)))


def _fixed_from(target: Multipole, edge_colors: dict[int, int]) -> dict[int, int]:
    """Fix every element of ``target`` that stems from a colored graph edge."""
    out = {}
    for x in range(target.num_elements):
        gid = target.root_key(x)[1] if target.parent is not None else x
        if gid in edge_colors:
            out[x] = edge_colors[gid]
    return out


def _edge_colors(sub: Multipole, col: EdgeColoring) -> dict[int, int]:
    return {sub.root_key(x)[1]: col[x] for x in range(sub.num_elements)}


@dataclass
class PropOddReport:
    ext_extensions: int
    m123_compatible: int
    ext_coloring: EdgeColoring | None
    seconds: float

    @property
    def confirmed(self) -> bool:
        return self.ext_extensions == 1 and self.m123_compatible == 0

    def to_json(self) -> dict:
        return {"ext_extensions": self.ext_extensions, "m123_compatible": self.m123_compatible,
                "confirmed": self.confirmed, "seconds": round(self.seconds, 3)}


def verify_prop_odd(timeout: float | None = None) -> PropOddReport:
    """Count extensions of σ|M_int to M_ext, then colorings of the next three
    copies and two supervertices compatible with that extension."""
    t0 = time.monotonic()
    res = odd_superposition()
    sigma = unique_petersen_coloring()
    g = res.graph
    base = petersen()
    cyc = set(res.spec.cycle)
    inner = [v for v in range(base.n) if v not in cyc]
    m_int = induced_submultipole(g, inner)
    int_colors = {x: sigma[i] for i, x in res.base_edges.items()}
    m_ext = induced_submultipole(g, list(range(base.n)) + [vs[0] for vs in res.copy_vertices])
    fixed = _fixed_from(m_ext, {m_int.root_key(x)[1]: int_colors[m_int.root_key(x)[1]]
                                for x in range(m_int.num_elements)})
    exts = list(enumerate_colorings(SearchProblem(m_ext, 5, True, fixed=fixed, timeout=timeout)))
    compatible = 0
    for ext in exts:
        m123_vertices = set()
        for i in (1, 2, 3):
            m123_vertices |= set(res.copy_vertices[i])
        m123_vertices |= {res.spec.cycle[2], res.spec.cycle[3]}
        union = induced_submultipole(g, sorted(m123_vertices | set(range(base.n)) |
                                               {vs[0] for vs in res.copy_vertices}))
        fixed_u = _fixed_from(union, _edge_colors(m_ext, ext))
        compatible += count(SearchProblem(union, 5, True, fixed=fixed_u, timeout=timeout)).count
    return PropOddReport(len(exts), compatible, exts[0] if exts else None, time.monotonic() - t0)


@dataclass
class OddExistenceReport:
    unconstrained: EdgeColoring | None
    with_interior_fixed: int
    seconds: float


def odd_superposition_existence(timeout: float | None = None) -> OddExistenceReport:
    """A normal coloring of the whole odd superposition exists, but none keeps σ
    on the interior."""
    t0 = time.monotonic()
    res = odd_superposition()
    sigma = unique_petersen_coloring()
    g = res.graph
    cyc = set(res.spec.cycle)
    fixed = {}
    for i, x in res.base_edges.items():
        u, v = g.edges[x]
        if u not in cyc or v not in cyc:
            fixed[x] = sigma[i]
    some = exists(SearchProblem(g, 5, True, up_to_permutation=True, timeout=timeout)).witness
    pinned = count(SearchProblem(g, 5, True, fixed=fixed, timeout=timeout)).count
    return OddExistenceReport(some, pinned, time.monotonic() - t0)


# -- short cycles ------------------------------------------------------------


@dataclass
class CycleScanReport:
    colorings: int
    triangles: int
    four_cycles: int
    violations: list[dict] = field(default_factory=list)
    min_poor: int | None = None
    max_poor: int | None = None

    def to_json(self) -> dict:
        return {"colorings": self.colorings, "triangles": self.triangles, "four_cycles": self.four_cycles,
                "violations": self.violations, "min_poor": self.min_poor, "max_poor": self.max_poor}


def cycle_poor_scan(m: Multipole, timeout: float | None = None) -> CycleScanReport:
    """Over all normal 5-colorings (one per color-permutation class): every
    triangle should be entirely poor, every 4-cycle should have 2 or 4 poor edges."""
    tri = [cycle_edges(m, c) for c in cycles_of_length(m, 3)]
    quad = [cycle_edges(m, c) for c in cycles_of_length(m, 4)]
    rep = CycleScanReport(0, len(tri), len(quad))
    for col in enumerate_colorings(SearchProblem(m, 5, True, up_to_permutation=True, timeout=timeout)):
        rep.colorings += 1
        poor = poor_edges(m, col)
        rep.min_poor = len(poor) if rep.min_poor is None else min(rep.min_poor, len(poor))
        rep.max_poor = len(poor) if rep.max_poor is None else max(rep.max_poor, len(poor))
        for es in tri:
            n = sum(e in poor for e in es)
            if n != 3:
                rep.violations.append({"cycle": es, "poor": n, "coloring": list(col.colors)})
        for es in quad:
            n = sum(e in poor for e in es)
            if n not in (2, 4):
                rep.violations.append({"cycle": es, "poor": n, "coloring": list(col.colors)})
    return rep


# -- conjecture probe --------------------------------------------------------


@dataclass
class ProbeRow:
    name: str
    snark: bool | None
    poor: int | None
    status: str
    flag: str | None = None

    def to_json(self) -> dict:
        return {"graph": self.name, "is_snark": self.snark, "poor": self.poor,
                "status": self.status, "flag": self.flag}


def conjecture_probe(graphs: list[tuple[str, Multipole]], timeout: float | None = None) -> list[ProbeRow]:
    """Exact poor(G) per graph.  A timeout yields status ``inconclusive``,
    with ``poor`` then only a lower bound."""
    p10, p10t = petersen(), petersen_truncated()
    rows = []
    for name, m in graphs:
        try:
            snark = is_snark(m, timeout=timeout)
            out = max_poor(m, timeout=timeout)
        except SearchTimeout:
            rows.append(ProbeRow(name, None, None, "inconclusive"))
            continue
        status = "exact" if out.status == "exact" else "inconclusive"
        row = ProbeRow(name, snark, out.max_poor, status)
        if out.witness is None and status == "exact":
            row.flag = "no normal 5-coloring"
        elif status == "exact":
            is_p10 = m.n == 10 and is_isomorphic(m, p10)
            is_p10t = m.n == 12 and is_isomorphic(m, p10t)
            if not is_p10 and row.poor == 0:
                row.flag = "poor(G) = 0 for a graph other than P10"
            elif not is_p10 and not is_p10t and row.poor < 6:
                row.flag = f"poor(G) = {row.poor} < 6"
        rows.append(row)
    return rows
