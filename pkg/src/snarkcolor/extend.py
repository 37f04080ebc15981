"""Extend a normal 5-coloring of a snark to its superpositions along an even cycle.

The superposed graph is cut into blocks ``M_c = B_{c-1} ∪ A_c ∪ B_c`` around
the even cycle positions ``c``.  Around the cycle, copy ``j`` borders the a-vertex
``a_j`` whose palette is copied from the even cycle vertex next to it.  Each
block is colored on its own.  The block's right copy must use only the three
colors at ``u_c``, and its right side must be monochromatic, so adjacent
blocks fit together.  A' sites and twists are then handled by re-coloring
single copies: applying ``I`` or swapping along a Kempe chain.

Per-copy colorings are tuples over the 15 elements of superedge B; a
semiedge stands for the strand edge that leaves the copy through it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .catalog import superedge_b
from .certificate import ColoringCertificate, make_certificate
from .coloring import (EdgeColoring, classify_edge, find_kempe_chain, is_normal, is_proper,
                       kempe_swap, palette, permute_colors, poor_edges, POOR)
from .multipole import Multipole, MultipoleError, Semiedge, check, induced_submultipole
from .search import SearchProblem, enumerate_colorings
from .superpose import A_PRIME, SuperpositionResult, SuperpositionSpec, build

# triples sigma_t(u_c) that can follow sigma_t(u_{c-2}) = (1, 2, 3), up to swapping 4 and 5
T = ((1, 2, 3), (3, 2, 1), (4, 2, 5), (2, 1, 3), (3, 1, 2),
     (4, 1, 5), (1, 5, 2), (2, 5, 1), (4, 5, 3), (3, 5, 4))

LA, LC, LG, S1, S2, S3 = range(9, 15)


class ExtensionError(RuntimeError):
    """The construction produced something that fails its own checks."""


def _swap45(t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple({4: 5, 5: 4}.get(x, x) for x in t)


def sigma_t(base: Multipole, sigma: EdgeColoring, cycle: tuple[int, ...], i: int) -> tuple[int, int, int]:
    """``(σ(u v), σ(u_{i-1} u), σ(u u_{i+1}))`` for ``u = u_i`` and its off-cycle edge ``u v``."""
    g = len(cycle)
    u, prev, nxt = cycle[i % g], cycle[(i - 1) % g], cycle[(i + 1) % g]
    left = base.edge_index(prev, u)
    right = base.edge_index(u, nxt)
    (third,) = [e for e in base.incidence[u] if e not in (left, right)]
    return sigma[third], sigma[left], sigma[right]


def frame(p: tuple[int, int, int]) -> dict[int, int]:
    """Color permutation sending 1, 2, 3 to ``p`` and 4, 5 to the rest in order."""
    rest = sorted(set(range(1, 6)) - set(p))
    return {1: p[0], 2: p[1], 3: p[2], 4: rest[0], 5: rest[1]}


# -- blocks ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BlockLayout:
    """Block ``B_L ∪ u ∪ B_R`` plus two stand-ins ``D``, ``H`` for the
    previous block's d- and h-vertices, whose palettes are fixed."""

    multipole: Multipole
    left: tuple[int, ...]
    right: tuple[int, ...]
    u_third: int
    d_semis: tuple[int, int]
    h_semis: tuple[int, int]


@lru_cache(maxsize=None)
def block_layout() -> BlockLayout:
    bm = superedge_b().multipole
    L, U, R, D, H = 0, 8, 9, 17, 18
    edges = [(L + u, L + v) for u, v in bm.edges] + [(R + u, R + v) for u, v in bm.edges]
    a, c, d, g, h = 0, 2, 3, 6, 7
    extra = [(L + a, U), (U, R + a), (L + d, R + c), (L + h, R + g), (D, L + c), (H, L + g)]
    e0 = len(edges)
    edges += extra
    semis = [Semiedge(L + a), Semiedge(U), Semiedge(R + a), Semiedge(R + d), Semiedge(R + h),
             Semiedge(D), Semiedge(D), Semiedge(H), Semiedge(H)]
    E = len(edges)
    names = tuple(f"L{ch}" for ch in "abcdefgh") + ("u",) + tuple(f"R{ch}" for ch in "abcdefgh") + ("D", "H")
    m = check(Multipole(19, tuple(edges), tuple(semis), (), names))
    left = tuple(range(9)) + (E + 0, e0 + 4, e0 + 5, e0 + 0, e0 + 2, e0 + 3)
    right = tuple(range(9, 18)) + (e0 + 1, e0 + 2, e0 + 3, E + 2, E + 3, E + 4)
    return BlockLayout(m, left, right, E + 1, (E + 5, E + 6), (E + 7, E + 8))


def block_constraints(t: tuple[int, int, int]) -> tuple[dict[int, int], dict[int, frozenset[int]]]:
    """Fixed colors and domains for a block with ``σ_t(u_c) = t`` in the frame
    where the previous block's triple is ``(1, 2, 3)``."""
    lay = block_layout()
    t1, t2, t3 = t
    ab = 0  # edge ab is element 0 of B
    fixed = {
        lay.left[LA]: t2, lay.left[S1]: t3, lay.right[LA]: t2, lay.right[S1]: t3,
        lay.u_third: t1, lay.left[ab]: t1, lay.right[ab]: t1,
        lay.right[S2]: t3, lay.right[S3]: t3,
        lay.d_semis[0]: 1, lay.d_semis[1]: 2, lay.h_semis[0]: 1, lay.h_semis[1]: 2,
        lay.left[LC]: 3, lay.left[LG]: 3,
    }
    three = frozenset(t)
    domains = {x: three for x in lay.right}
    return fixed, domains


def _right_side_chain(b_col: EdgeColoring, t3: int):
    """A Kempe chain of the copy that runs from ``s2`` to ``s3``, if any."""
    b = superedge_b()
    for other in sorted(set(b_col.colors) - {t3}):
        chain = find_kempe_chain(b.multipole, b_col, b.element("s2"), (t3, other))
        if chain is not None and chain.end == b.element("s3"):
            return chain
    return None


def assemble_block(t: tuple[int, int, int], left: tuple[int, ...], right: tuple[int, ...]) -> EdgeColoring:
    lay = block_layout()
    m = lay.multipole
    fixed, _ = block_constraints(t)
    cols: list[int | None] = [None] * m.num_elements
    for side in ((lay.left, left), (lay.right, right)):
        for x, col in zip(*side):
            if cols[x] is not None and cols[x] != col:
                raise ExtensionError(f"copies disagree on block element {m.element_name(x)}")
            cols[x] = col
    for x, col in fixed.items():
        if cols[x] is None:
            cols[x] = col
    return EdgeColoring(5, tuple(cols))


def block_problems(t: tuple[int, int, int], left: tuple[int, ...], right: tuple[int, ...]) -> list[str]:
    """Every way in which a candidate block coloring breaks the block contract."""
    lay = block_layout()
    m = lay.multipole
    try:
        col = assemble_block(t, left, right)
    except ExtensionError as exc:
        return [str(exc)]
    out = []
    if not is_proper(m, col):
        return ["not proper"]
    if not is_normal(m, col):
        out.append("not normal")
    fixed, domains = block_constraints(t)
    for x, c in fixed.items():
        if col[x] != c:
            out.append(f"{m.element_name(x)} should be {c}")
    if any(col[x] not in domains[x] for x in domains):
        out.append("right copy leaves the three colors at u")
    if right[LC] == right[LG]:
        out.append("right copy has equal colors on its c- and g-semiedges")
    if _right_side_chain(EdgeColoring(5, right), t[2]) is None:
        out.append("no Kempe chain joins s2 and s3 in the right copy")
    return out


def _split(col: EdgeColoring) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lay = block_layout()
    return tuple(col[x] for x in lay.left), tuple(col[x] for x in lay.right)


@lru_cache(maxsize=None)
def synthesize_block(t: tuple[int, int, int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First block coloring (in search order) meeting the block contract."""
    fixed, domains = block_constraints(t)
    p = SearchProblem(block_layout().multipole, 5, True, fixed=fixed, domains=domains)
    for col in enumerate_colorings(p):
        left, right = _split(col)
        if not block_problems(t, left, right):
            return left, right
    raise ExtensionError(f"no block coloring for triple {t}")


# the per-triple recipes act on τ (left copy): ("all", map) recolors the whole
# copy, ("P", map) only the elements of path P
RECIPES = {
    (1, 2, 3): (),
    (3, 2, 1): (("P", {1: 3, 3: 1}),),
    (4, 2, 5): (("P", {1: 4, 3: 5}),),
    (2, 1, 3): (("all", {1: 2, 2: 1}),),
    (3, 1, 2): (("all", {1: 2, 2: 1}), ("P", {2: 3, 3: 2})),
    (4, 1, 5): (("all", {1: 2, 2: 1}), ("P", {2: 4, 3: 5})),
    (1, 5, 2): (("all", {1: 4, 2: 5}), ("P", {3: 2, 4: 1})),
    (2, 5, 1): (("all", {1: 4, 2: 5}), ("P", {3: 1, 4: 2})),
    (4, 5, 3): (("all", {1: 4, 2: 5}),),
    (3, 5, 4): (("all", {1: 4, 2: 5}), ("P", {3: 4, 4: 3})),
}


def apply_recipe(t: tuple[int, int, int], kappa: tuple[int, ...], tau: tuple[int, ...]):
    """Block coloring for ``t`` derived from the seed pair (κ, τ) of ``(1, 2, 3)``."""
    swap = t not in RECIPES
    key = _swap45(t) if swap else t
    if key not in RECIPES:
        raise ExtensionError(f"triple {t} cannot follow (1, 2, 3)")
    path = set(superedge_b().path_p)
    left = list(tau)
    for where, mapping in RECIPES[key]:
        for x in range(15):
            if where == "all" or x in path:
                left[x] = mapping.get(left[x], left[x])
    right = [key[c - 1] for c in kappa]
    if swap:
        left = [{4: 5, 5: 4}.get(c, c) for c in left]
        right = [{4: 5, 5: 4}.get(c, c) for c in right]
    return tuple(left), tuple(right)


@lru_cache(maxsize=None)
def scripted_seed() -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Seed (κ, τ) for which every recipe yields a valid block, if one exists."""
    fixed, domains = block_constraints((1, 2, 3))
    p = SearchProblem(block_layout().multipole, 5, True, fixed=fixed, domains=domains)
    for col in enumerate_colorings(p):
        tau, kappa = _split(col)
        if all(not block_problems(t, *apply_recipe(t, kappa, tau)) for t in T + tuple(map(_swap45, T))):
            return kappa, tau
    return None


def scripted_block(t: tuple[int, int, int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    seed = scripted_seed()
    if seed is not None:
        left, right = apply_recipe(t, *seed)
        if not block_problems(t, left, right):
            return left, right
    return synthesize_block(t)


# -- the external part -------------------------------------------------------


def build_m_ext(result: SuperpositionResult) -> Multipole:
    keep = list(range(result.spec.base.n)) + [vs[0] for vs in result.copy_vertices]
    return induced_submultipole(result.graph, keep)


def build_m_int(result: SuperpositionResult) -> Multipole:
    cyc = set(result.spec.cycle)
    return induced_submultipole(result.graph, [v for v in range(result.spec.base.n) if v not in cyc])


def _center(j: int, g: int) -> int:
    return j if j % 2 == 0 else (j + 1) % g


def ext_edge_colors(result: SuperpositionResult, sigma: EdgeColoring) -> dict[int, int]:
    """Colors of the superposed graph's edges that lie in (or hang off) M_ext."""
    spec = result.spec
    g = spec.g
    ts = [sigma_t(spec.base, sigma, spec.cycle, i) for i in range(g)]
    out = {x: sigma[i] for i, x in result.base_edges.items()}
    for j in range(g):
        t1, t2, t3 = ts[_center(j, g)]
        els = result.copy_elements[j]
        out[els[LA]] = t2
        out[els[S1]] = t3
        out[els[0]] = t1
    return out


def sigma_ext(result: SuperpositionResult, sigma: EdgeColoring) -> tuple[Multipole, EdgeColoring]:
    if result.spec.g % 2:
        raise ValueError("the external coloring needs an even cycle")
    m_ext = build_m_ext(result)
    colors = ext_edge_colors(result, sigma)
    cols = [colors[m_ext.origin_keys()[x][1]] for x in range(m_ext.num_elements)]
    return m_ext, EdgeColoring(5, tuple(cols))


# -- A' sites and twists -----------------------------------------------------


def apply_a_prime(copies: list[tuple[int, ...]], i: int, ts: list[tuple[int, int, int]]) -> tuple[int, int, int]:
    """Re-color copies for an A' at position ``i``; return the triple whose
    colors must make up the palettes of ``u'_i`` and ``u''_i``."""
    b = superedge_b()
    g = len(copies)
    if i % 2 == 0:
        copies[i] = b.apply_I(EdgeColoring(5, copies[i])).colors
        return ts[i]
    j = (i - 1) % g
    t = ts[j]
    col = EdgeColoring(5, copies[j])
    chain = _right_side_chain(col, col[S2])
    if chain is None:
        raise ExtensionError(f"copy {j} has no Kempe chain from s2 to s3")
    copies[j] = kempe_swap(b.multipole, col, chain).colors
    return t


def reduce_twists(twists: tuple[bool, ...]) -> tuple[set[int], tuple[bool, ...]]:
    """Copies to relabel through I so that at most one twist remains, at the
    last (odd) position.  Relabeling copy ``l`` flips twists ``l`` and ``l+1``."""
    cur = list(twists)
    g = len(cur)
    toggled: set[int] = set()
    for pos in range(g - 1):
        if cur[pos]:
            toggled.add(pos)
            cur[pos] = not cur[pos]
            cur[pos + 1] = not cur[pos + 1]
    return toggled, tuple(cur)


# -- assembly ----------------------------------------------------------------


def assemble(result: SuperpositionResult, sigma: EdgeColoring,
             copies: list[tuple[int, ...]]) -> EdgeColoring:
    """Coloring of the superposed graph from σ and the per-copy colorings;
    edges ``u'u''`` get the one color that keeps their ends proper and normal."""
    m = result.graph
    cols: list[int | None] = [None] * m.num_edges
    for i, x in result.base_edges.items():
        cols[x] = sigma[i]
    for j, els in enumerate(result.copy_elements):
        for pos, x in enumerate(els):
            c = copies[j][pos]
            if cols[x] is not None and cols[x] != c:
                raise ExtensionError(f"copies {j} and its neighbor disagree on edge {m.element_name(x)}")
            cols[x] = c
    open_edges = {m.edge_index(*uv): uv for uv in result.a_prime.values()}
    for e in open_edges:
        cols[e] = 0
    for e, (u1, u2) in open_edges.items():
        for z in range(1, 6):
            cols[e] = z
            trial = EdgeColoring(5, tuple(cols))
            if _locally_normal(m, trial, (u1, u2)):
                break
        else:
            raise ExtensionError(f"no color fits edge {m.element_name(e)}")
    return EdgeColoring(5, tuple(cols))


def _locally_normal(m: Multipole, c: EdgeColoring, vertices) -> bool:
    for v in vertices:
        if len(palette(m, c, v)) != 3:
            return False
    for v in vertices:
        for e in m.incidence[v]:
            if any(0 in palette(m, c, w) for w in m.edges[e]):
                return False
            if classify_edge(m, c, e) not in ("poor", "rich"):
                return False
    return True


# -- top level ---------------------------------------------------------------


@dataclass
class Extension:
    result: SuperpositionResult
    coloring: EdgeColoring
    certificate: ColoringCertificate
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _check_sigma(base: Multipole, sigma: EdgeColoring) -> None:
    if max(sigma.colors, default=1) > 5 or not is_proper(base, sigma) or not is_normal(base, sigma):
        raise ValueError("input coloring is not a normal 5-coloring of the base graph")


def extend(sigma: EdgeColoring, spec: SuperpositionSpec, blocks: str = "search") -> Extension:
    """Normal 5-coloring of the superposition that agrees with σ off the cycle."""
    spec.validate()
    g = spec.g
    if g % 2:
        raise ValueError("extension needs an even cycle")
    base = spec.base
    _check_sigma(base, sigma)
    sigma = EdgeColoring(5, sigma.colors)
    block_fn = {"search": synthesize_block, "scripted": scripted_block}[blocks]
    ts = [sigma_t(base, sigma, spec.cycle, i) for i in range(g)]

    copies: list[tuple[int, ...]] = [()] * g
    for c in range(0, g, 2):
        pi = frame(ts[c - 2])
        inv = {v: k for k, v in pi.items()}
        left, right = block_fn(tuple(inv[x] for x in ts[c]))
        copies[c - 1] = permute_colors(EdgeColoring(5, left), pi).colors
        copies[c] = permute_colors(EdgeColoring(5, right), pi).colors
    even_before = [copies[j] for j in range(0, g, 2)]

    toggled, _ = reduce_twists(spec.twists)
    sites: dict[int, tuple[int, int, int]] = {}
    for i in range(g):
        if spec.choices[i] == A_PRIME:
            sites[i] = apply_a_prime(copies, i, ts)
    b = superedge_b()
    for j in toggled:
        copies[j] = b.apply_I(EdgeColoring(5, copies[j])).colors

    result = build(spec)
    col = assemble(result, sigma, copies)
    m = result.graph

    checks: dict[str, bool] = {}
    checks["proper"] = is_proper(m, col)
    checks["normal"] = checks["proper"] and is_normal(m, col)
    checks["agrees_outside_cycle"] = all(col[x] == sigma[i] for i, x in result.base_edges.items())
    all_a = build(SuperpositionSpec(base, spec.cycle))
    m_ext, ext = sigma_ext(all_a, sigma)
    checks["ext_normal"] = is_proper(m_ext, ext) and is_normal(m_ext, ext)
    if checks["normal"]:
        poor = poor_edges(m, col)
        checks["even_copies_poor"] = all(
            len({col[x] for x in result.copy_elements[j][:9]}) == 3
            and all(x in poor for x in result.copy_elements[j][:9])
            for j in range(0, g, 2))
        checks["a_prime_palettes"] = all(
            palette(m, col, u1) == palette(m, col, u2) == frozenset(sites[i])
            for i, (u1, u2) in result.a_prime.items())
        checks["poor_at_least_18"] = len(poor) >= 18
    else:
        checks["even_copies_poor"] = checks["a_prime_palettes"] = checks["poor_at_least_18"] = False
    cert = make_certificate(m, col)
    details = {
        "triples": ts,
        "relabeled_copies": sorted(toggled),
        "a_prime_triples": sites,
        "even_copies_before_a_prime": even_before,
        "poor_count": len(cert.poor),
    }
    return Extension(result, col, cert, checks, details)
