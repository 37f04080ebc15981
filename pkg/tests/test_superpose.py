from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import superpose_by_join
from snarkcolor.catalog import cube, petersen
from snarkcolor.multipole import MultipoleError, girth, is_cycle, is_isomorphic
from snarkcolor.superpose import (A, A_PRIME, SuperpositionSpec, all_choice_vectors, build, expected_order,
                                  family_size, is_snark, parse_choices)

SIX_CYCLE = (0, 1, 2, 3, 8, 5)
choice_vectors = st.lists(st.sampled_from([A, A_PRIME]), min_size=6, max_size=6)
twist_vectors = st.lists(st.booleans(), min_size=6, max_size=6)


def _edge_names(res):
    g = res.graph
    return Counter(frozenset((g.vertex_name(u), g.vertex_name(v))) for u, v in g.edges)


def test_orders_and_sizes():
    res = build(SuperpositionSpec(petersen(), SIX_CYCLE))
    assert (res.graph.n, res.graph.num_edges) == (58, 87)
    one = build(SuperpositionSpec(petersen(), SIX_CYCLE, (A_PRIME,) + (A,) * 5))
    assert (one.graph.n, one.graph.num_edges) == (60, 90)
    assert expected_order(petersen(), one.spec.choices) == 60
    odd = build(SuperpositionSpec(petersen(), (0, 1, 2, 3, 4)))
    assert odd.graph.n == 50


@given(choice_vectors, twist_vectors)
def test_build_matches_join_construction(choices, twists):
    spec = SuperpositionSpec(petersen(), SIX_CYCLE, tuple(choices), tuple(twists))
    res = build(spec)
    assert _edge_names(res) == superpose_by_join(spec)
    assert res.graph.n == expected_order(petersen(), choices)


def test_result_bookkeeping():
    res = build(SuperpositionSpec(petersen(), SIX_CYCLE, parse_choices("AA'AA'AA")))
    g = res.graph
    assert set(res.a_prime) == {1, 3}
    assert all(len(xs) == 15 and len(set(xs)) == 15 for xs in res.copy_elements)
    # every copy's strand edges: la at a_i, s1 at a_i
    for i, xs in enumerate(res.copy_elements):
        a_i = res.copy_vertices[i][0]
        assert a_i in g.edges[xs[9]] and a_i in g.edges[xs[12]]
    assert len(res.base_edges) == 15 - 6
    for i, x in res.base_edges.items():
        assert {g.vertex_name(v) for v in g.edges[x]} == {str(v) for v in petersen().edges[i]}
    assert res.name_maps()["a_prime"]["1"] == ["u'1", "u''1"]


def test_strands_form_a_2g_cycle():
    # the a-strand alternates cycle vertices and the copies' a-vertices
    res = build(SuperpositionSpec(petersen(), SIX_CYCLE))
    g = res.graph
    cyc = []
    for i in range(6):
        cyc += [res.copy_vertices[i][0], SIX_CYCLE[(i + 1) % 6]]
    assert is_cycle(g, [SIX_CYCLE[0]] + cyc[:-1])


def test_family_size_and_distinct_members():
    assert family_size(4) == 16 and len(all_choice_vectors(4)) == 16
    with pytest.raises(ValueError):
        family_size(2)
    members = {frozenset(_edge_names(build(SuperpositionSpec(cube(), (0, 1, 3, 2), ch))).items())
               for ch in all_choice_vectors(4)}
    assert len(members) == 16


def test_twist_parity_decides_isomorphism_class():
    base, cyc = cube(), (0, 1, 3, 2)
    plain = build(SuperpositionSpec(base, cyc)).graph
    even = build(SuperpositionSpec(base, cyc, twists=(1, 1, 0, 0))).graph
    odd_a = build(SuperpositionSpec(base, cyc, twists=(1, 0, 0, 0))).graph
    odd_b = build(SuperpositionSpec(base, cyc, twists=(0, 0, 0, 1))).graph
    assert is_isomorphic(plain, even)
    assert is_isomorphic(odd_a, odd_b)


@pytest.mark.parametrize("choices", ["AAAAAA", "A'AAAAA", "A'A'A'A'A'A'", "AA'AA'AA'"])
def test_superpositions_of_petersen_are_snarks(choices):
    res = build(SuperpositionSpec(petersen(), SIX_CYCLE, parse_choices(choices)))
    assert is_snark(res.graph)
    assert girth(res.graph) >= 4


def test_invalid_specs():
    with pytest.raises(MultipoleError):
        build(SuperpositionSpec(petersen(), (0, 1, 2, 3)))
    with pytest.raises(MultipoleError):
        build(SuperpositionSpec(petersen(), SIX_CYCLE, (A,) * 5))
    with pytest.raises(ValueError):
        parse_choices("AB")
