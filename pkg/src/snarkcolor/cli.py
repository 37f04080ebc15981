"""Command-line interface.

Exit status: 0 when the run succeeds and every checked claim holds, 1 on a
refutation or failed verification, 2 on bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .certificate import make_certificate, multipole_to_json, verify_certificate
from .coloring import EdgeColoring
from .formats import emit_dot, load_graph
from .multipole import MultipoleError, bridges
from .search import (SearchProblem, SearchTimeout, count, default_timeout, enumerate_colorings,
                     is_3_edge_colorable, max_poor)
from .superpose import SuperpositionSpec, build, parse_choices


class UsageError(Exception):
    pass


def _emit(args, payload: dict, extra: dict[str, str] | None = None) -> None:
    text = json.dumps(payload, indent=2, default=_json_default)
    if args.out:
        out = Path(args.out)
        out.write_text(text + "\n")
        for suffix, content in (extra or {}).items():
            out.with_suffix(suffix).write_text(content)
    else:
        print(text)


def _json_default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, EdgeColoring):
        return list(obj.colors)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _timeout(args) -> float | None:
    if args.timeout_secs is None:
        return default_timeout()
    return None if args.timeout_secs <= 0 else args.timeout_secs


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> SuperpositionSpec:
    base = load_graph(args.base)
    cycle = tuple(_int_list(args.cycle))
    choices = parse_choices(args.choices) if args.choices else ()
    twists = tuple(bool(t) for t in _int_list(args.twists)) if args.twists else ()
    spec = SuperpositionSpec(base, cycle, choices, twists)
    spec.validate()
    return spec


def _load_coloring(path: str, m) -> EdgeColoring:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    if isinstance(data, list):
        return EdgeColoring(max(data), tuple(int(c) for c in data))
    cols = [0] * m.num_elements
    for name, c in data["assignment"]:
        cols[m.parse_element(name)] = int(c)
    return EdgeColoring(int(data.get("k", 5)), tuple(cols))


# -- subcommands -------------------------------------------------------------


def cmd_catalog(args) -> int:
    b = catalog.superedge_b()
    objects = {name: fn() for name, fn in catalog.NAMED_GRAPHS.items()}
    objects["B"] = b.multipole
    objects["A"] = catalog.supervertex_a()
    objects["A_prime"] = catalog.supervertex_a_prime()
    if args.name:
        if args.name not in objects:
            raise UsageError(f"unknown catalog object {args.name!r}; known: {', '.join(objects)}")
        objects = {args.name: objects[args.name]}
    payload = {name: {"multipole": multipole_to_json(m), "dot": emit_dot(m, name=name.replace("'", "p"))}
               for name, m in objects.items()}
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, item in payload.items():
            (out / f"{name}.json").write_text(json.dumps(item["multipole"], indent=2) + "\n")
            (out / f"{name}.dot").write_text(item["dot"])
    else:
        print(json.dumps(payload, indent=2))
    return 0


def cmd_superpose(args) -> int:
    res = build(_spec(args))
    payload = {"multipole": multipole_to_json(res.graph), "names": res.name_maps(),
               "vertices": res.graph.n, "edges": res.graph.num_edges}
    _emit(args, payload, {".dot": emit_dot(res.graph)})
    return 0


def cmd_extend(args) -> int:
    from .extend import extend
    from .search import find

    spec = _spec(args)
    if args.coloring:
        sigma = _load_coloring(args.coloring, spec.base)
    else:
        sigma = find(SearchProblem(spec.base, 5, True, up_to_permutation=True, timeout=_timeout(args)))
        if sigma is None:
            print("base graph has no normal 5-coloring", file=sys.stderr)
            return 1
    ext = extend(sigma, spec, blocks=args.blocks)
    payload = ext.certificate.to_json()
    payload["checks"] = ext.checks
    payload["poor_count"] = len(ext.certificate.poor)
    _emit(args, payload, {".dot": emit_dot(ext.result.graph, ext.coloring)})
    return 0 if ext.ok else 1


def cmd_enumerate(args) -> int:
    m = load_graph(args.graph)
    p = SearchProblem(m, args.k, not args.proper, up_to_permutation=args.up_to_permutation,
                      timeout=_timeout(args), jobs=args.jobs)
    if args.list:
        cols = []
        for col in enumerate_colorings(p):
            cols.append(list(col.colors))
            if args.limit and len(cols) >= args.limit:
                break
        payload = {"colorings": cols, "listed": len(cols)}
    else:
        out = count(p)
        payload = {"count": out.count, "seconds": round(out.seconds, 3)}
        if args.up_to_permutation:
            payload["classes"] = out.classes
    _emit(args, payload)
    return 0


def cmd_poor(args) -> int:
    m = load_graph(args.graph)
    out = max_poor(m, timeout=_timeout(args))
    payload = {"poor": out.max_poor, "status": out.status,
               "normal_colorable": out.witness is not None}
    extra = {}
    if out.witness is not None:
        payload["certificate"] = make_certificate(m, out.witness).to_json()
        extra[".dot"] = emit_dot(m, out.witness)
    _emit(args, payload, extra)
    return 0 if out.witness is not None else 1


def cmd_snark_check(args) -> int:
    m = load_graph(args.graph)
    if not m.is_graph or any(len(inc) != 3 for inc in m.incidence):
        raise UsageError("snark-check needs a cubic graph")
    bridgeless = not bridges(m)
    colorable = is_3_edge_colorable(m, timeout=_timeout(args))
    _emit(args, {"bridgeless": bridgeless, "three_edge_colorable": colorable,
                 "snark": bridgeless and not colorable})
    return 0


def cmd_prop_odd(args) -> int:
    from .pipelines import verify_prop_odd

    rep = verify_prop_odd(timeout=_timeout(args))
    _emit(args, rep.to_json())
    return 0 if rep.confirmed else 1


def cmd_cycle_scan(args) -> int:
    from .pipelines import cycle_poor_scan

    rep = cycle_poor_scan(load_graph(args.graph), timeout=_timeout(args))
    _emit(args, rep.to_json())
    return 0 if not rep.violations else 1


def cmd_conjecture_probe(args) -> int:
    from .pipelines import conjecture_probe

    names = args.graph or ["P10", "P10T", "Blanusa1", "Blanusa2", "J5"]
    rows = conjecture_probe([(n, load_graph(n)) for n in names], timeout=_timeout(args))
    _emit(args, {"rows": [r.to_json() for r in rows]})
    return 1 if any(r.flag for r in rows) else 0


def cmd_verify(args) -> int:
    try:
        data = json.loads(Path(args.certificate).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{args.certificate}: {exc}") from None
    problems = verify_certificate(data)
    _emit(args, {"valid": not problems, "problems": problems})
    return 0 if not problems else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snarkcolor", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write JSON here (and sibling .dot files) instead of stdout")
    common.add_argument("--timeout-secs", type=float, default=None,
                        help="search budget; 0 disables (default: $SNARKCOLOR_TIMEOUT_SECS or 600)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for counting")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="emit the fixed constructions")
    p.add_argument("--name", help="only this object")
    p.set_defaults(func=cmd_catalog)

    def superposition_args(p):
        p.add_argument("--base", required=True, help="catalog name, graph6 or JSON")
        p.add_argument("--cycle", required=True, help="comma-separated cycle vertices")
        p.add_argument("--choices", default="", help="e.g. AA'AA (default all A)")
        p.add_argument("--twists", default="", help="comma-separated 0/1 per cycle vertex")

    p = sub.add_parser("superpose", parents=[common], help="build a superposition")
    superposition_args(p)
    p.set_defaults(func=cmd_superpose)

    p = sub.add_parser("extend", parents=[common], help="extend a normal 5-coloring along an even cycle")
    superposition_args(p)
    p.add_argument("--coloring", help="coloring JSON of the base (default: first one found)")
    p.add_argument("--blocks", choices=("search", "scripted"), default="search")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("enumerate", parents=[common], help="count or list colorings")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=5)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--normal", action="store_true", default=True)
    mode.add_argument("--proper", action="store_true", help="proper colorings, normality not required")
    p.add_argument("--up-to-permutation", action="store_true")
    p.add_argument("--list", action="store_true", help="list colorings instead of counting")
    p.add_argument("--limit", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poor", parents=[common], help="maximum number of poor edges")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_poor)

    p = sub.add_parser("snark-check", parents=[common], help="bridgeless and not 3-edge-colorable?")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_snark_check)

    p = sub.add_parser("prop-odd", parents=[common], help="the Petersen 5-cycle obstruction")
    p.set_defaults(func=cmd_prop_odd)

    p = sub.add_parser("cycle-scan", parents=[common], help="poor edges on 3- and 4-cycles")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_cycle_scan)

    p = sub.add_parser("conjecture-probe", parents=[common], help="poor(G) table")
    p.add_argument("--graph", action="append", help="repeatable; default: P10 P10T Blanusa1 Blanusa2 J5")
    p.set_defaults(func=cmd_conjecture_probe)

    p = sub.add_parser("verify", parents=[common], help="re-check a coloring certificate")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, MultipoleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchTimeout as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
