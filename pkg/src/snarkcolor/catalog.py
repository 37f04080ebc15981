"""Labeled constructions: Petersen graph and relatives, superedge B,
supervertices A and A', and a few small snarks and colorable graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coloring import EdgeColoring
from .multipole import (Multipole, MultipoleError, Semiedge, check, graph, is_isomorphic)


def petersen() -> Multipole:
    """Outer cycle 0..4, spokes i-(i+5), inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph(10, edges)


def petersen_truncated() -> Multipole:
    """Petersen graph with vertex 0 replaced by the triangle 0, 10, 11.

    Vertex 0 keeps its edge to 1; 10 takes over the edge to 4 and 11 the
    spoke to 5.
    """
    edges = [e for e in petersen().edges if 0 not in e]
    edges += [(0, 1), (10, 4), (11, 5), (0, 10), (10, 11), (11, 0)]
    return graph(12, edges)


def k4() -> Multipole:
    return graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def cube() -> Multipole:
    """The 3-cube; vertices are 3-bit words, edges flip one bit."""
    return graph(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def flower_snark_j5() -> Multipole:
    """Centers 0..4 with leaves b_i, c_i, d_i; b's form a 5-cycle, the c's
    and d's one 10-cycle c0..c4 d0..d4."""
    b = [5 + i for i in range(5)]
    c = [10 + i for i in range(5)]
    d = [15 + i for i in range(5)]
    edges = []
    for i in range(5):
        edges += [(i, b[i]), (i, c[i]), (i, d[i]), (b[i], b[(i + 1) % 5])]
    ring = c + d
    edges += [(ring[j], ring[(j + 1) % 10]) for j in range(10)]
    return graph(20, edges)


def _dot_product(g1: Multipole, e1: tuple[int, int], e2: tuple[int, int],
                 g2: Multipole, x: int, y: int) -> Multipole:
    """Remove independent edges ``e1, e2`` from ``g1`` and adjacent vertices
    ``x, y`` from ``g2``; reconnect the four loose ends of each side."""
    keep2 = [v for v in range(g2.n) if v not in (x, y)]
    new = {v: g1.n + i for i, v in enumerate(keep2)}
    edges = [e for e in g1.edges if set(e) not in (set(e1), set(e2))]
    edges += [(new[u], new[v]) for u, v in g2.edges if u in new and v in new]
    xs = sorted(w for w in g2.neighbors(x) if w != y)
    ys = sorted(w for w in g2.neighbors(y) if w != x)
    (a, b), (c, d) = e1, e2
    edges += [(a, new[xs[0]]), (b, new[xs[1]]), (c, new[ys[0]]), (d, new[ys[1]])]
    return graph(g1.n + g2.n - 2, edges)


@lru_cache(maxsize=None)
def _blanusa_pair() -> tuple[Multipole, Multipole]:
    from .multipole import girth
    from .search import is_3_edge_colorable

    p = petersen()
    found: list[Multipole] = []
    # edge pairs 0-1/2-3 are joined by edge 1-2; 0-1/7-9 lie at distance two
    for e1, e2 in (((0, 1), (2, 3)), ((0, 1), (3, 2)), ((0, 1), (7, 9)), ((0, 1), (9, 7))):
        cand = _dot_product(p, e1, e2, p, 0, 5)
        if girth(cand) < 5 or is_3_edge_colorable(cand):
            continue
        if not any(is_isomorphic(cand, other) for other in found):
            found.append(cand)
    if len(found) != 2:
        raise MultipoleError(f"expected two Blanuša snarks, built {len(found)}")
    found.sort(key=lambda g: -automorphism_count(g))
    return found[0], found[1]


def blanusa_1() -> Multipole:
    """First Blanuša snark (automorphism group of order 8)."""
    return _blanusa_pair()[0]


def blanusa_2() -> Multipole:
    """Second Blanuša snark (automorphism group of order 4)."""
    return _blanusa_pair()[1]


def automorphism_count(m: Multipole) -> int:
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    g = nx.Graph(list(m.edges))
    g.add_nodes_from(range(m.n))
    return sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())


# -- superedge B -------------------------------------------------------------

B_VERTICES = "abcdefgh"
B_EDGES = ("ab", "bf", "fh", "cd", "cf", "be", "de", "eg", "gh")
B_SEMIEDGES = (("la", "a"), ("lc", "c"), ("lg", "g"), ("s1", "a"), ("s2", "d"), ("s3", "h"))
B_I = {"a": "a", "b": "b", "c": "g", "g": "c", "d": "h", "h": "d", "e": "f", "f": "e"}


@dataclass(frozen=True, eq=False)
class SuperedgeB:
    """Petersen graph minus two non-adjacent vertices, as a 2-connector superedge.

    Semiedges 0..2 form the left connector (at a, c, g), 3..5 the right one
    (``s1`` at a, ``s2`` at d, ``s3`` at h).
    """

    multipole: Multipole
    i_elements: tuple[int, ...]
    path_p: tuple[int, ...]
    path_q: tuple[int, ...]

    def element(self, name: str) -> int:
        """Element by edge name (``"ab"``) or semiedge name (``"s2"``)."""
        m = self.multipole
        if m.semiedge_names and name in m.semiedge_names:
            return m.num_edges + m.semiedge_names.index(name)
        return m.edge_index(m.vertex(name[0]), m.vertex(name[1]))

    def apply_I(self, c: EdgeColoring) -> EdgeColoring:
        """``I(c)(x) = c(I(x))``; I is an involution."""
        return EdgeColoring(c.k, tuple(c.colors[self.i_elements[x]] for x in range(len(c.colors))))


def _b_multipole() -> Multipole:
    idx = {ch: i for i, ch in enumerate(B_VERTICES)}
    edges = tuple((idx[e[0]], idx[e[1]]) for e in B_EDGES)
    semis = tuple(Semiedge(idx[v]) for _, v in B_SEMIEDGES)
    return check(Multipole(8, edges, semis, ((0, 1, 2), (3, 4, 5)), tuple(B_VERTICES),
                           tuple(name for name, _ in B_SEMIEDGES)))


def _self_check(b: SuperedgeB) -> None:
    m = b.multipole
    if m.num_edges != 9 or len(m.semiedges) != 6:
        raise MultipoleError("superedge B must have 9 edges and 6 semiedges")
    # close the connectors with two extra vertices: Petersen again, x and y apart
    x, y = 8, 9
    closed = list(m.edges)
    for j, s in enumerate(m.semiedges):
        closed.append((s.vertex, x if j < 3 else y))
    rebuilt = graph(10, closed)
    if rebuilt.has_edge(x, y) or not is_isomorphic(rebuilt, petersen()):
        raise MultipoleError("superedge B does not reassemble into the Petersen graph")
    # I maps edges onto edges and fixes both connectors as sets
    for e in range(m.num_edges):
        u, v = m.edges[e]
        image = b.i_elements[e]
        if image >= m.num_edges or set(m.edges[image]) != {m.vertex(B_I[m.vertex_name(u)]),
                                                         m.vertex(B_I[m.vertex_name(v)])}:
            raise MultipoleError("I does not preserve the edges of B")
    if sorted(b.i_elements) != list(range(m.num_elements)):
        raise MultipoleError("I is not a permutation of the elements")
    if any(b.i_elements[b.i_elements[x]] != x for x in range(m.num_elements)):
        raise MultipoleError("I is not an involution")
    for path in (b.path_p, b.path_q):
        for x, y in zip(path, path[1:]):
            if not set(m.element_vertices(x)) & set(m.element_vertices(y)):
                raise MultipoleError("paths P and Q must be walks")


@lru_cache(maxsize=None)
def superedge_b() -> SuperedgeB:
    m = _b_multipole()
    names = [None] * m.num_elements
    for e, (u, v) in enumerate(m.edges):
        names[e] = m.vertex_name(u) + m.vertex_name(v)
    for j, name in enumerate(m.semiedge_names):
        names[m.num_edges + j] = name

    def lookup(name: str) -> int:
        if name in m.semiedge_names:
            return m.num_edges + m.semiedge_names.index(name)
        return m.edge_index(m.vertex(name[0]), m.vertex(name[1]))

    semi_image = {"la": "la", "lc": "lg", "lg": "lc", "s1": "s1", "s2": "s3", "s3": "s2"}
    images = []
    for x, name in enumerate(names):
        if x < m.num_edges:
            images.append(lookup(B_I[name[0]] + B_I[name[1]]))
        else:
            images.append(lookup(semi_image[name]))
    path_p = tuple(lookup(n) for n in ("s1", "ab", "bf", "fh", "s3"))
    path_q = tuple(lookup(n) for n in ("s2", "cd", "cf", "fh", "s3"))
    b = SuperedgeB(m, tuple(images), path_p, path_q)
    _self_check(b)
    return b


def apply_I(c: EdgeColoring) -> EdgeColoring:
    return superedge_b().apply_I(c)


# -- supervertices -----------------------------------------------------------


def supervertex_a() -> Multipole:
    """Vertex u with left/right/third semiedges plus two isolated edges.

    Connectors: S1 = (u-left, iso1-left, iso2-left),
    S2 = (u-right, iso1-right, iso2-right), S3 = (u-third).
    """
    semis = (Semiedge(0), Semiedge(0), Semiedge(0),
             Semiedge(mate=5), Semiedge(mate=6), Semiedge(mate=3), Semiedge(mate=4))
    return check(Multipole(1, (), semis, ((0, 3, 4), (1, 5, 6), (2,)), ("u",),
                           ("u-left", "u-right", "u-third", "iso1-left", "iso2-left",
                            "iso1-right", "iso2-right")))


def supervertex_a_prime() -> Multipole:
    """Like A, but the isolated edges are subdivided by u' and u'' joined by an edge."""
    semis = (Semiedge(0), Semiedge(0), Semiedge(0),
             Semiedge(1), Semiedge(2), Semiedge(1), Semiedge(2))
    return check(Multipole(3, ((1, 2),), semis, ((0, 3, 4), (1, 5, 6), (2,)), ("u", "u'", "u''"),
                           ("u-left", "u-right", "u-third", "u'-left", "u''-left",
                            "u'-right", "u''-right")))


NAMED_GRAPHS = {
    "P10": petersen,
    "P10T": petersen_truncated,
    "K4": k4,
    "Q3": cube,
    "J5": flower_snark_j5,
    "Blanusa1": blanusa_1,
    "Blanusa2": blanusa_2,
}
