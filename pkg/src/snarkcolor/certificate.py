"""Re-verifiable records of a coloring, plus the multipole JSON format."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .coloring import ColoringError, EdgeColoring, is_normal, is_proper, poor_edges, rich_edges
from .multipole import Multipole, MultipoleError, Semiedge, validate


def multipole_to_json(m: Multipole) -> dict:
    semis = []
    for j, s in enumerate(m.semiedges):
        semis.append({"id": j, "vertex": s.vertex} if s.vertex is not None else {"id": j, "mate": s.mate})
    out = {
        "vertices": m.n,
        "edges": [list(e) for e in m.edges],
        "semiedges": semis,
        "connectors": [list(c) for c in m.connectors],
    }
    if m.vertex_names:
        out["vertex_names"] = list(m.vertex_names)
    return out


def multipole_from_json(data: dict) -> Multipole:
    try:
        n = int(data["vertices"])
        edges = tuple((int(u), int(v)) for u, v in data.get("edges", []))
        raw = sorted(data.get("semiedges", []), key=lambda s: s["id"])
        if [s["id"] for s in raw] != list(range(len(raw))):
            raise MultipoleError("semiedge ids must be 0..S-1")
        semis = tuple(Semiedge(s["vertex"]) if "vertex" in s else Semiedge(mate=s["mate"]) for s in raw)
        conns = tuple(tuple(int(j) for j in c) for c in data.get("connectors", []))
        names = tuple(data["vertex_names"]) if "vertex_names" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise MultipoleError(f"malformed multipole JSON: {exc!r}") from None
    m = Multipole(n, edges, semis, conns, names)
    problems = validate(m)
    if problems:
        raise MultipoleError("; ".join(problems))
    return m


def multipole_hash(m: Multipole) -> str:
    blob = json.dumps(multipole_to_json(m), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class ColoringCertificate:
    multipole: Multipole
    coloring: EdgeColoring
    poor: frozenset[int]
    rich: frozenset[int]
    proper: bool
    normal: bool

    def to_json(self) -> dict:
        m = self.multipole
        return {
            "multipole": multipole_to_json(m),
            "multipole_sha256": multipole_hash(m),
            "k": self.coloring.k,
            "assignment": [[m.element_name(x), c] for x, c in enumerate(self.coloring.colors)],
            "poor": [m.element_name(e) for e in sorted(self.poor)],
            "rich": [m.element_name(e) for e in sorted(self.rich)],
            "proper": self.proper,
            "normal": self.normal,
        }


def make_certificate(m: Multipole, c: EdgeColoring) -> ColoringCertificate:
    proper = is_proper(m, c)
    normal = proper and is_normal(m, c)
    poor = poor_edges(m, c) if proper else frozenset()
    rich = rich_edges(m, c) if proper else frozenset()
    return ColoringCertificate(m, c, poor, rich, proper, normal)


def verify_certificate(data: dict) -> list[str]:
    """Recompute every claim of a certificate; return the discrepancies."""
    try:
        m = multipole_from_json(data["multipole"])
        k = int(data["k"])
        cols = [0] * m.num_elements
        seen = set()
        for name, c in data["assignment"]:
            x = m.parse_element(name)
            if x in seen:
                return [f"element {name} assigned twice"]
            seen.add(x)
            cols[x] = int(c)
        if len(seen) != m.num_elements:
            return [f"assignment covers {len(seen)} of {m.num_elements} elements"]
        col = EdgeColoring(k, tuple(cols))
        claimed_poor = {m.parse_element(n) for n in data["poor"]}
        claimed_rich = {m.parse_element(n) for n in data["rich"]}
        claimed_proper, claimed_normal = bool(data["proper"]), bool(data["normal"])
    except (KeyError, TypeError, ValueError) as exc:
        return [f"malformed certificate: {exc}"]
    out = []
    if "multipole_sha256" in data and data["multipole_sha256"] != multipole_hash(m):
        out.append("multipole hash mismatch")
    try:
        proper = is_proper(m, col)
    except ColoringError as exc:
        return [str(exc)]
    normal = proper and is_normal(m, col)
    if proper != claimed_proper:
        out.append(f"proper is {proper}, certificate says {claimed_proper}")
    if normal != claimed_normal:
        out.append(f"normal is {normal}, certificate says {claimed_normal}")
    if proper:
        poor, rich = poor_edges(m, col), rich_edges(m, col)
        if poor != claimed_poor:
            out.append(f"poor edges differ: {sorted(poor ^ claimed_poor)}")
        if rich != claimed_rich:
            out.append(f"rich edges differ: {sorted(rich ^ claimed_rich)}")
    return out
