import json

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from snarkcolor.catalog import NAMED_GRAPHS, petersen, petersen_truncated
from snarkcolor.certificate import (make_certificate, multipole_from_json, multipole_hash, multipole_to_json,
                                    verify_certificate)
from snarkcolor.coloring import EdgeColoring
from snarkcolor.formats import emit_dot, emit_graph6, load_graph, parse_graph6
from snarkcolor.multipole import MultipoleError, induced_submultipole, is_isomorphic
from snarkcolor.search import max_poor
from snarkcolor.pipelines import unique_petersen_coloring


@pytest.mark.parametrize("name", sorted(NAMED_GRAPHS))
def test_graph6_round_trip(name):
    m = NAMED_GRAPHS[name]()
    text = emit_graph6(m)
    back = parse_graph6(text)
    assert sorted(map(sorted, back.edges)) == sorted(map(sorted, m.edges))
    h = nx.from_graph6_bytes(text.encode())
    assert h.number_of_edges() == m.num_edges


@given(st.integers(4, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 10**6))))
def test_graph6_against_networkx_random_regular(args):
    n, seed = args
    if n % 2:
        n += 1
    h = nx.random_regular_graph(3, n, seed=seed)
    text = nx.to_graph6_bytes(h, header=False).decode().strip()
    m = parse_graph6(text)
    assert emit_graph6(m) == text
    assert parse_graph6(">>graph6<<" + text).num_edges == m.num_edges


def test_graph6_rejects_bad_input():
    with pytest.raises(MultipoleError):
        parse_graph6("not a graph6 string")
    with pytest.raises(MultipoleError):
        emit_graph6(induced_submultipole(petersen(), [0, 1]))


def test_multipole_json_round_trip():
    sub = induced_submultipole(petersen(), [0, 1, 2])
    data = multipole_to_json(sub)
    back = multipole_from_json(json.loads(json.dumps(data)))
    assert multipole_to_json(back) == data
    assert multipole_hash(back) == multipole_hash(sub)
    with pytest.raises(MultipoleError):
        multipole_from_json({"vertices": 2, "edges": [[0, 1]]})
    with pytest.raises(MultipoleError):
        multipole_from_json({"edges": []})


def test_load_graph_sources(tmp_path):
    p10 = petersen()
    assert is_isomorphic(load_graph("P10"), p10)
    g6 = tmp_path / "p.g6"
    g6.write_text(emit_graph6(p10) + "\n")
    assert is_isomorphic(load_graph(str(g6)), p10)
    js = tmp_path / "p.json"
    js.write_text(json.dumps(multipole_to_json(p10)))
    assert is_isomorphic(load_graph(str(js)), p10)
    assert load_graph(json.dumps(multipole_to_json(p10))).num_edges == 15
    broken = tmp_path / "broken.json"
    broken.write_text("{ nope")
    with pytest.raises(MultipoleError, match="line 1"):
        load_graph(str(broken))


def test_certificate_verification_catches_tampering():
    g = petersen_truncated()
    cert = make_certificate(g, max_poor(g).witness).to_json()
    assert cert["normal"] and len(cert["poor"]) == 3
    assert verify_certificate(cert) == []
    flipped = json.loads(json.dumps(cert))
    flipped["assignment"][0][1] = flipped["assignment"][1][1]
    assert verify_certificate(flipped)
    lied = json.loads(json.dumps(cert))
    lied["poor"] = lied["poor"][:1]
    assert any("poor" in p for p in verify_certificate(lied))
    short = json.loads(json.dumps(cert))
    short["assignment"].pop()
    assert verify_certificate(short)
    assert verify_certificate({"k": 5})


def test_dot_output():
    g = petersen_truncated()
    col = max_poor(g).witness
    dot = emit_dot(g, col, name="T")
    assert dot.startswith("graph T {")
    assert dot.count('style="bold,dashed"') == 3
    assert dot.count(" -- ") == 18
    plain = emit_dot(induced_submultipole(petersen(), [0]))
    assert plain.count("shape=point") == 3
    sigma = unique_petersen_coloring()
    assert "dashed" not in emit_dot(petersen(), sigma)
    assert "dashed" not in emit_dot(petersen(), EdgeColoring(5, (1,) * 15))
