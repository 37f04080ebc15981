import random

import pytest
from hypothesis import given, strategies as st

from oracles import naive_count, random_multipole
from snarkcolor.catalog import cube, flower_snark_j5, k4, petersen, petersen_truncated
from snarkcolor.coloring import canonical_form, find_kempe_chain, kempe_swap, poor_edges
from snarkcolor.multipole import graph
from snarkcolor.search import (SearchProblem, SearchTimeout, count, default_timeout, enumerate_colorings,
                               exists, find, is_3_edge_colorable, max_poor, solve)
from snarkcolor.superpose import SuperpositionSpec, build

seeds = st.integers(0, 10**6)


@given(seeds, st.sampled_from([3, 4, 5]), st.booleans())
def test_count_matches_naive_enumeration(seed, k, normal):
    m = random_multipole(random.Random(seed), max_elements=7 if k == 5 else 8)
    assert count(SearchProblem(m, k, normal)).count == naive_count(m, k, normal)


@given(seeds, st.booleans())
def test_classes_match_distinct_canonical_forms(seed, normal):
    m = random_multipole(random.Random(seed), max_elements=7)
    labeled = list(enumerate_colorings(SearchProblem(m, 5, normal)))
    out = count(SearchProblem(m, 5, normal, up_to_permutation=True))
    assert out.count == len(labeled) == len(set(labeled))
    assert out.classes == len({canonical_form(m, c) for c in labeled})
    reps = list(enumerate_colorings(SearchProblem(m, 5, normal, up_to_permutation=True)))
    assert {canonical_form(m, c) for c in reps} == {canonical_form(m, c) for c in labeled}


@given(seeds)
def test_fixed_colors_and_domains_filter_the_full_set(seed):
    rng = random.Random(seed)
    m = random_multipole(rng, max_elements=7)
    labeled = list(enumerate_colorings(SearchProblem(m, 5, True)))
    x = rng.randrange(m.num_elements)
    c = rng.randint(1, 5)
    want = [col for col in labeled if col[x] == c]
    got = sorted(col.colors for col in enumerate_colorings(SearchProblem(m, 5, True, fixed={x: c})))
    assert got == sorted(col.colors for col in want)
    y = rng.randrange(m.num_elements)
    dom = frozenset(rng.sample(range(1, 6), 3))
    want = sorted(col.colors for col in labeled if col[y] in dom)
    got = sorted(col.colors for col in enumerate_colorings(SearchProblem(m, 5, True, domains={y: dom})))
    assert got == want


def test_known_counts():
    assert count(SearchProblem(petersen(), 5, True)).count == 120
    assert count(SearchProblem(petersen(), 3, False)).count == 0
    assert count(SearchProblem(k4(), 3, False)).count == 6
    out = count(SearchProblem(cube(), 5, True, up_to_permutation=True))
    assert out.classes == 7 and out.count == len(list(enumerate_colorings(SearchProblem(cube(), 5, True))))


def test_jobs_split_gives_same_count():
    p = SearchProblem(petersen_truncated(), 5, True)
    assert count(SearchProblem(p.multipole, 5, True, jobs=2)).count == count(p).count
    q = SearchProblem(cube(), 5, True, up_to_permutation=True, jobs=3)
    assert count(q).classes == 7


def test_kempe_closure_of_semiedge_chains():
    # colorings of a cut Petersen graph are closed under semiedge-to-semiedge swaps
    from snarkcolor.multipole import induced_submultipole
    m = induced_submultipole(petersen(), range(6))
    cols = set(enumerate_colorings(SearchProblem(m, 5, True)))
    swaps = 0
    for c in list(cols)[:200]:
        for s in range(m.num_edges, m.num_elements):
            for other in range(1, 6):
                if other == c[s]:
                    continue
                chain = find_kempe_chain(m, c, s, {c[s], other})
                if chain is not None:
                    d = kempe_swap(m, c, chain)
                    assert d in cols and poor_edges(m, d) == poor_edges(m, c)
                    swaps += 1
    assert swaps > 0


def _brute_max_poor(m):
    best = None
    for c in enumerate_colorings(SearchProblem(m, 5, True, up_to_permutation=True)):
        n = len(poor_edges(m, c))
        best = n if best is None else max(best, n)
    return best


@pytest.mark.parametrize("make", [petersen, petersen_truncated, cube, k4])
def test_max_poor_matches_enumeration(make):
    m = make()
    out = max_poor(m)
    assert out.status == "exact"
    assert out.max_poor == _brute_max_poor(m)
    assert len(poor_edges(m, out.witness)) == out.max_poor


@given(st.permutations(list(range(12))))
def test_max_poor_ignores_vertex_labels(perm):
    m = petersen_truncated()
    relabeled = graph(12, [(perm[u], perm[v]) for u, v in m.edges])
    assert max_poor(relabeled).max_poor == 3


def test_max_poor_with_fixed_colors_skips_three_coloring_shortcut():
    out = max_poor(cube(), fixed={0: 4})
    assert out.witness[0] == 4
    assert out.max_poor == max(len(poor_edges(cube(), c))
                               for c in enumerate_colorings(SearchProblem(cube(), 5, True, fixed={0: 4})))


def test_existence_and_snark_checks():
    assert find(SearchProblem(petersen(), 5, True)) is not None
    out = exists(SearchProblem(flower_snark_j5(), 5, True, up_to_permutation=True))
    assert out.count == 1 and out.nodes > 0
    assert not is_3_edge_colorable(petersen()) and is_3_edge_colorable(cube())
    assert solve(SearchProblem(petersen(), 5, True), "count").count == 120
    assert solve(SearchProblem(petersen(), 5, True), "max_poor").max_poor == 0
    with pytest.raises(ValueError):
        solve(SearchProblem(petersen()), "bogus")


def test_timeout():
    big = build(SuperpositionSpec(petersen(), (0, 1, 2, 3, 8, 5))).graph
    with pytest.raises(SearchTimeout):
        count(SearchProblem(big, 5, True, timeout=0.05))
    out = max_poor(big, fixed={0: 1}, timeout=0.05)
    assert out.status == "timeout"


def test_default_timeout_reads_environment(monkeypatch):
    monkeypatch.delenv("SNARKCOLOR_TIMEOUT_SECS", raising=False)
    assert default_timeout() == 600.0
    monkeypatch.setenv("SNARKCOLOR_TIMEOUT_SECS", "0")
    assert default_timeout() is None
    monkeypatch.setenv("SNARKCOLOR_TIMEOUT_SECS", "2.5")
    assert default_timeout() == 2.5
