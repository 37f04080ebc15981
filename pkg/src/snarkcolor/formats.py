"""graph6 and DOT conversion, and loading graphs from names, graph6 or JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import EdgeColoring, classify_edge, is_proper
from .multipole import Multipole, MultipoleError, graph

# one DOT color per palette index
DOT_COLORS = ("black", "red", "blue", "green4", "orange", "purple", "brown", "magenta")


def parse_graph6(text: str) -> Multipole:
    import networkx as nx

    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<"):]
    try:
        g = nx.from_graph6_bytes(raw.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as exc:
        raise MultipoleError(f"invalid graph6 string {raw!r}: {exc}") from None
    return graph(g.number_of_nodes(), sorted(tuple(sorted(e)) for e in g.edges()))


def emit_graph6(m: Multipole) -> str:
    import networkx as nx

    if not m.is_graph:
        raise MultipoleError("graph6 holds plain graphs only; use JSON for multipoles")
    if len(m._edge_lookup) != m.num_edges:
        raise MultipoleError("graph6 cannot hold parallel edges")
    g = nx.Graph()
    g.add_nodes_from(range(m.n))
    g.add_edges_from(m.edges)
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def emit_dot(m: Multipole, c: EdgeColoring | None = None, name: str = "G") -> str:
    """Undirected DOT; edges are drawn in their color, poor edges bold and
    dashed.  Semiedges become edges to small point nodes."""
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(m.n):
        lines.append(f'  v{v} [label="{m.vertex_name(v)}"];')
    classes = None
    if c is not None and is_proper(m, c):
        classes = [classify_edge(m, c, e) for e in range(m.num_edges)]

    def attrs(x: int) -> str:
        parts = [f'label="{m.element_name(x)}"']
        if c is not None:
            col = c[x]
            parts.append(f'color="{DOT_COLORS[col % len(DOT_COLORS)]}"')
            parts[0] = f'label="{m.element_name(x)}:{col}"'
            if classes is not None and x < m.num_edges and classes[x] == "poor":
                parts.append('style="bold,dashed"')
        return ", ".join(parts)

    for x, (u, v) in enumerate(m.edges):
        lines.append(f"  v{u} -- v{v} [{attrs(x)}];")
    E = m.num_edges
    for j, s in enumerate(m.semiedges):
        lines.append(f"  s{j} [shape=point];")
        if s.vertex is not None:
            lines.append(f"  v{s.vertex} -- s{j} [{attrs(E + j)}];")
        elif j < s.mate:
            lines.append(f"  s{j} -- s{s.mate} [{attrs(E + j)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(spec: str) -> Multipole:
    """A catalog name (``P10``), a path to a graph6 or JSON file, or a graph6 string."""
    from .catalog import NAMED_GRAPHS
    from .certificate import multipole_from_json

    if spec in NAMED_GRAPHS:
        return NAMED_GRAPHS[spec]()
    path = Path(spec)
    try:
        is_file = path.is_file()
    except OSError:  # e.g. a long graph6 string is not a valid file name
        is_file = False
    if is_file:
        text = path.read_text()
        if text.lstrip().startswith("{"):
            try:
                return multipole_from_json(json.loads(text))
            except json.JSONDecodeError as exc:
                raise MultipoleError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return parse_graph6(text.splitlines()[0])
    if spec.lstrip().startswith("{"):
        try:
            return multipole_from_json(json.loads(spec))
        except json.JSONDecodeError as exc:
            raise MultipoleError(f"JSON: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_graph6(spec)
