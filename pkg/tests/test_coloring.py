import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from snarkcolor.catalog import cube, petersen, petersen_truncated
from snarkcolor.coloring import (ABNORMAL, POOR, RICH, ColoringError, EdgeColoring, IncompatibleColorings,
                                 StaleChainError, are_compatible, canonical_form, canonical_order, canonical_form_brute,
                                 classify_edge, complete_color, edge_classes, find_kempe_chain, is_normal,
                                 is_proper, kempe_swap, merge_compatible, permute_colors, poor_edges, restrict,
                                 rich_edges)
from snarkcolor.multipole import induced_submultipole
from snarkcolor.pipelines import unique_petersen_coloring
from snarkcolor.search import SearchProblem, enumerate_colorings

seeds = st.integers(0, 10**6)
Q3_COLORINGS = list(enumerate_colorings(SearchProblem(cube(), 5, True)))
P10_SIGMA = unique_petersen_coloring()


def theta_like():
    # two vertices joined by an edge, four semiedges
    from snarkcolor.multipole import Multipole, Semiedge
    return Multipole(2, ((0, 1),), tuple(Semiedge(v) for v in (0, 0, 1, 1)))


@pytest.mark.parametrize("colors, expected", [
    ((1, 2, 3, 2, 3), POOR),
    ((1, 2, 3, 4, 5), RICH),
    ((1, 2, 3, 2, 4), ABNORMAL),
])
def test_classify_edge(colors, expected):
    m = theta_like()
    c = EdgeColoring(5, colors)
    assert is_proper(m, c)
    assert classify_edge(m, c, 0) == expected
    assert is_normal(m, c) == (expected != ABNORMAL)


def test_improper_and_out_of_range():
    m = theta_like()
    assert not is_proper(m, EdgeColoring(5, (1, 1, 3, 2, 3)))
    with pytest.raises(ColoringError):
        is_normal(m, EdgeColoring(5, (1, 1, 3, 2, 3)))
    with pytest.raises(ColoringError):
        is_proper(m, EdgeColoring(5, (1, 2, 6, 2, 3)))
    with pytest.raises(ColoringError):
        is_proper(m, EdgeColoring(5, (1, 2, 3)))


def test_petersen_coloring_is_all_rich():
    g = petersen()
    assert is_normal(g, P10_SIGMA)
    assert poor_edges(g, P10_SIGMA) == frozenset()
    assert rich_edges(g, P10_SIGMA) == frozenset(range(15))
    assert set(edge_classes(g, P10_SIGMA)) == {RICH}


@given(seeds, st.permutations([1, 2, 3, 4, 5]))
def test_permutation_invariance(seed, perm):
    m = cube()
    c = random.Random(seed).choice(Q3_COLORINGS)
    d = permute_colors(c, perm)
    assert is_normal(m, d)
    assert poor_edges(m, d) == poor_edges(m, c)
    assert canonical_form(m, d) == canonical_form(m, c)


@given(seeds)
def test_canonical_form_matches_brute_force(seed):
    rng = random.Random(seed)
    m = cube()
    c = rng.choice(Q3_COLORINGS)
    assert canonical_form(m, c) == canonical_form_brute(m, c)


def test_complete_color():
    m = theta_like()
    c = EdgeColoring(5, (1, 2, 3, 4, 5))
    assert complete_color(m, c, 1) == (2, frozenset({1, 3}))
    with pytest.raises(ColoringError):
        complete_color(m, c, 0)


def _random_cut(seed):
    rng = random.Random(seed)
    g = petersen_truncated()
    cols = list(enumerate_colorings(SearchProblem(g, 5, True, up_to_permutation=True)))
    full = permute_colors(rng.choice(cols), rng.sample(range(1, 6), 5))
    verts = rng.sample(range(g.n), rng.randint(2, g.n - 1))
    sub = induced_submultipole(g, verts)
    return g, full, sub, restrict(full, g, sub), rng


@given(seeds)
def test_kempe_swap_preserves_normality_and_poor_set(seed):
    g, full, sub, c, rng = _random_cut(seed)
    assert is_normal(sub, c)
    semis = list(range(sub.num_edges, sub.num_elements))
    if not semis:
        return
    start = rng.choice(semis)
    other = rng.choice([k for k in range(1, 6) if k != c[start]])
    chain = find_kempe_chain(sub, c, start, {c[start], other})
    if chain is None:
        return
    assert not sub.is_edge_element(chain.end)
    d = kempe_swap(sub, c, chain)
    assert is_proper(sub, d) and is_normal(sub, d)
    assert poor_edges(sub, d) == poor_edges(sub, c)
    back = find_kempe_chain(sub, d, start, chain.pair)
    assert kempe_swap(sub, d, back) == c
    with pytest.raises(StaleChainError):
        kempe_swap(sub, d, chain)


@given(seeds)
def test_restrict_then_merge_recovers_coloring(seed):
    g, full, sub, c, rng = _random_cut(seed)
    rest = induced_submultipole(g, [v for v in range(g.n) if v not in sub.vertex_origin])
    if rest.n == 0:
        return
    merged = merge_compatible(g, (sub, c), (rest, restrict(full, g, rest)))
    assert merged == full


def test_merge_witnesses():
    g = petersen()
    a = induced_submultipole(g, range(5))
    b = induced_submultipole(g, range(5, 10))
    ca, cb = restrict(P10_SIGMA, g, a), restrict(P10_SIGMA, g, b)
    assert are_compatible(g, (a, ca), (b, cb))
    with pytest.raises(IncompatibleColorings) as err:
        merge_compatible(g, (a, ca))
    assert err.value.kind == "uncovered element"
    # rename colors on one side: the halves of the spokes no longer agree
    with pytest.raises(IncompatibleColorings) as err:
        merge_compatible(g, (a, ca), (b, permute_colors(cb, (2, 3, 4, 5, 1))))
    assert err.value.kind == "color mismatch"
    with pytest.raises(ColoringError):
        restrict(P10_SIGMA, petersen(), a)


def test_merge_flags_abnormal_boundary_edge():
    from snarkcolor.multipole import Multipole, Semiedge
    parent = Multipole(2, ((0, 1),), tuple(Semiedge(v) for v in (0, 0, 1, 1)))
    left, right = induced_submultipole(parent, [0]), induced_submultipole(parent, [1])
    cl = EdgeColoring(5, (2, 3, 1))
    cr = EdgeColoring(5, (2, 4, 1))
    with pytest.raises(IncompatibleColorings) as err:
        merge_compatible(parent, (left, cl), (right, cr))
    assert err.value.kind == "abnormal boundary edge"


def test_canonical_form_brute_is_minimal():
    m = cube()
    c = Q3_COLORINGS[0]
    order = canonical_order(m)
    cf = canonical_form(m, c)
    key = [cf[x] for x in order]
    assert all(key <= [permute_colors(c, p)[x] for x in order] for p in permutations(range(1, 6)))
    assert sorted(set(cf.colors)) == list(range(1, len(set(cf.colors)) + 1))
