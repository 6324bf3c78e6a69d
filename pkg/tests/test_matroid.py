from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidsweep import catalan, f_vector, from_bases, graphic, h_vector, minor, uniform
from matroidsweep.errors import (
    BadParameters,
    DependentContraction,
    EmptyBases,
    NotAMatroid,
    OverlappingSets,
    RankMismatch,
)

from conftest import GRAPHIC13_BASES


def brute_force_exchange_ok(n, bases):
    bset = {frozenset(b) for b in bases}
    for b1 in bset:
        for b2 in bset:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bset for y in b2 - b1):
                    return False
    return True


def test_from_bases_uniform42():
    m = from_bases(4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
    assert m.r == 2
    assert m.bases == uniform(4, 2).bases


def test_from_bases_rank_mismatch():
    with pytest.raises(RankMismatch):
        from_bases(3, [[0, 1], [2]])


def test_from_bases_exchange_fails():
    bad = [[0, 1], [2, 3]]
    assert not brute_force_exchange_ok(4, bad)
    with pytest.raises(NotAMatroid):
        from_bases(4, bad)


def test_from_bases_errors():
    with pytest.raises(EmptyBases):
        from_bases(3, [])
    with pytest.raises(BadParameters):
        from_bases(2, [[0, 5]])
    with pytest.raises(BadParameters):
        from_bases(0, [[0]])


def test_uniform_counts():
    assert len(uniform(4, 2).bases) == 6
    assert len(uniform(4, 4).bases) == 1
    assert len(uniform(6, 3).bases) == 20
    with pytest.raises(BadParameters):
        uniform(4, 0)
    with pytest.raises(BadParameters):
        uniform(3, 4)


def brute_force_spanning_trees(vertices, edges):
    count = 0
    for k in range(len(edges), -1, -1):
        hits = []
        for combo in combinations(range(len(edges)), k):
            parent = list(range(vertices))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            acyclic = True
            comp = vertices
            for i in combo:
                u, v = edges[i]
                ru, rv = find(u), find(v)
                if ru == rv:
                    acyclic = False
                    break
                parent[ru] = rv
                comp -= 1
            if acyclic:
                hits.append(combo)
        if hits:
            return hits
    return []


def test_graphic_k4_cayley():
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    m = graphic(4, edges)
    assert len(m.bases) == 16  # 4^(4-2) spanning trees
    oracle = brute_force_spanning_trees(4, edges)
    assert {frozenset(c) for c in oracle} == set(m.bases)


def test_graphic_small():
    tri = graphic(3, [(0, 1), (1, 2), (2, 0)])
    assert len(tri.bases) == 3 and tri.r == 2
    path = graphic(3, [(0, 1), (1, 2)])
    assert path.bases == (frozenset({0, 1}),)


def test_graphic_loops_and_parallels():
    m = graphic(3, [(0, 0), (0, 1), (1, 2)])
    assert m.loops == frozenset({0})
    p = graphic(3, [(0, 1), (0, 1), (1, 2)])
    assert len(p.bases) == 2


def test_catalan_members():
    m = catalan(3)
    assert len(m.bases) == 14
    assert frozenset({0, 1, 2}) in m.basis_index
    assert frozenset({1, 3, 5}) in m.basis_index
    assert all(min(b) <= 1 for b in m.bases)
    # the defining constraint b_i <= 2i-1 at rank 1 admits both singletons
    assert catalan(1).bases == (frozenset({0}), frozenset({1}))
    assert len(catalan(2).bases) == 5
    with pytest.raises(BadParameters):
        catalan(0)


def test_minor_examples():
    m = uniform(4, 2)
    mm, emap = minor(m, {2}, {0, 1})
    assert emap == (0, 1)
    assert mm.bases == uniform(2, 1).bases
    free, _ = minor(m, frozenset(), {0, 1})
    assert free.bases == (frozenset({0, 1}),)
    zero, emap0 = minor(m, {0, 1}, {2, 3})
    assert zero.bases == (frozenset(),) and zero.r == 0 and emap0 == (2, 3)


def test_minor_errors():
    m = uniform(4, 2)
    with pytest.raises(OverlappingSets):
        minor(m, {0}, {0, 1})
    with pytest.raises(DependentContraction):
        minor(m, {0, 1, 2}, {3})


def test_minor_matches_brute_force_independence():
    m = catalan(3)
    mm, emap = minor(m, {1}, {2, 3, 4, 5})
    for k in range(mm.r + 1):
        for combo in combinations(range(mm.n), k):
            original = {emap[i] for i in combo} | {1}
            assert mm.independent(combo) == m.independent(original)


def test_h_vector_u42():
    # f = (1, 4, 6); expand (1-x)^2 + 4x(1-x) + 6x^2
    m = uniform(4, 2)
    assert f_vector(m) == (1, 4, 6)
    assert tuple(h_vector(m)) == (1, 2, 3)


def test_h_vector_reference_matroids(graphic13, catalan3):
    assert tuple(h_vector(graphic13)) == (1, 3, 5, 4)
    # histogram of the published line-shelling table sizes: 1,3,5,5
    assert tuple(h_vector(catalan3)) == (1, 3, 5, 5)


def test_h_vector_sum_is_basis_count(pool):
    for m in pool:
        assert h_vector(m).total() == len(m.bases)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.data())
def test_exchange_axiom_reassertion(n, data):
    k = data.draw(st.integers(1, n))
    m = uniform(n, k)
    b1 = data.draw(st.sampled_from(m.bases))
    b2 = data.draw(st.sampled_from(m.bases))
    for x in b1 - b2:
        assert any((b1 - {x}) | {y} in m.basis_index for y in b2 - b1)


def test_pool_matroids_pass_validation(pool):
    for m in pool:
        assert brute_force_exchange_ok(m.n, m.bases)
        rebuilt = from_bases(m.n, [sorted(b) for b in m.bases])
        assert rebuilt.bases == m.bases


def test_graphic13_is_a_matroid():
    m = from_bases(6, GRAPHIC13_BASES)
    assert m.r == 3 and len(m.bases) == 13 and not m.loops
