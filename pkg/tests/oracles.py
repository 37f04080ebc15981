"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import random
from collections import Counter

import numpy as np

from snarkcolor.catalog import B_VERTICES, superedge_b, supervertex_a, supervertex_a_prime
from snarkcolor.multipole import Multipole, Semiedge, disjoint_union, induced_submultipole, self_join
from snarkcolor.superpose import A_PRIME, SuperpositionSpec

_POP = np.array([bin(i).count("1") for i in range(1 << 8)], dtype=np.int8)


def naive_count(m: Multipole, k: int, normal: bool) -> int:
    """Filter all k^n assignments of colors to elements."""
    n = m.num_elements
    if n == 0:
        return 1
    grid = np.indices((k,) * n, dtype=np.int8).reshape(n, -1).T + 1
    ok = np.ones(len(grid), dtype=bool)
    E = m.num_edges
    for j, s in enumerate(m.semiedges):
        if s.mate is not None:
            ok &= grid[:, E + j] == grid[:, E + s.mate]
    pal = []
    for inc in m.incidence:
        cols = [grid[:, x] for x in inc]
        ok &= (cols[0] != cols[1]) & (cols[0] != cols[2]) & (cols[1] != cols[2])
        pal.append((1 << cols[0].astype(np.int16)) | (1 << cols[1].astype(np.int16))
                   | (1 << cols[2].astype(np.int16)))
    if normal:
        for u, v in m.edges:
            size = _POP[(pal[u] | pal[v]) >> 1]
            ok &= (size == 3) | (size == 5)
    return int(ok.sum())


def random_multipole(rng: random.Random, max_elements: int = 9) -> Multipole:
    """Random cubic multipole (parallel edges allowed) with few elements."""
    while True:
        n = rng.randint(0, 4)
        slots = [v for v in range(n) for _ in range(3)]
        rng.shuffle(slots)
        edges, semis = [], []
        while slots:
            v = slots.pop()
            partner = next((i for i, w in enumerate(slots) if w != v), None)
            if partner is not None and rng.random() < 0.6:
                edges.append((v, slots.pop(partner)))
            else:
                semis.append(Semiedge(v))
        for _ in range(rng.randint(0, 2)):
            j = len(semis)
            semis += [Semiedge(mate=j + 1), Semiedge(mate=j)]
        m = Multipole(n, tuple(edges), tuple(semis))
        if 0 < m.num_elements <= max_elements:
            return m


def superpose_by_join(spec: SuperpositionSpec) -> Counter:
    """Edges (as name pairs) of the superposition assembled by connector joins."""
    base, cyc, g = spec.base, spec.cycle, spec.g
    on_cycle = {u: i for i, u in enumerate(cyc)}
    inner = [v for v in range(base.n) if v not in on_cycle]
    interior = induced_submultipole(base, inner)
    labels: list = []
    conns = []
    for x in range(interior.num_edges, interior.num_elements):
        key = interior.origin_keys()[x]
        a, b = base.edges[key[1]]
        u = b if key[2] == a else a
        conns.append((x - interior.num_edges,))
        labels.append(("half", u))
    m = Multipole(interior.n, interior.edges, interior.semiedges, tuple(conns))
    vnames = [str(v) for v in inner]

    def add(part: Multipole, tag, names):
        nonlocal m
        m = disjoint_union(m, part)
        labels.extend((tag, c) for c in range(len(part.connectors)))
        vnames.extend(names)

    for i in range(g):
        if spec.choices[i] == A_PRIME:
            add(supervertex_a_prime(), ("A", i), [str(cyc[i]), f"u'{i}", f"u''{i}"])
        else:
            add(supervertex_a(), ("A", i), [str(cyc[i])])
        add(superedge_b().multipole, ("B", i), [f"{ch}{i}" for ch in B_VERTICES])

    def glue(l1, l2, perm=None):
        nonlocal m
        c1, c2 = labels.index(l1), labels.index(l2)
        m = self_join(m, c1, c2, perm)
        for c in sorted((c1, c2), reverse=True):
            del labels[c]

    for i in range(g):
        glue((("A", i), 1), (("B", i), 0))
        nxt = (i + 1) % g
        glue((("B", i), 1), (("A", nxt), 0), [0, 2, 1] if spec.twists[nxt] else None)
        u = cyc[i]
        third = [w for w in base.neighbors(u) if w not in (cyc[i - 1], cyc[(i + 1) % g])][0]
        if third in on_cycle:
            j = on_cycle[third]
            if i < j:
                glue((("A", i), 2), (("A", j), 2))
        else:
            glue((("A", i), 2), ("half", u))
    assert not m.semiedges
    return Counter(frozenset((vnames[u], vnames[v])) for u, v in m.edges)
