import pytest

from matchcover import (
    GStar,
    Matching,
    StarCover,
    brute_md,
    build_forest,
    build_gstar,
    decompose,
    effective_degree,
    find_switching_path,
    initial_cover,
    maximum_matching,
    optimize,
    random_connected_graph,
    transform,
)
from matchcover.dstar import SwitchingPath
from matchcover.oracle import OracleBudget

from conftest import path_graph, star_graph

BUDGET = OracleBudget(max_vertices=12, max_edges=66)


def _matching(n, pairs):
    mate = [-1] * n
    for u, v in pairs:
        mate[u] = v
        mate[v] = u
    return Matching(mate)


def test_gstar_validation():
    with pytest.raises(ValueError, match="disjoint"):
        GStar([0, 1], [1, 2], [])
    with pytest.raises(ValueError, match="two sides"):
        GStar([0], [1], [(0, 0)])
    with pytest.raises(ValueError, match="no A-neighbour"):
        GStar([0], [1, 2], [(0, 1)])


def test_build_gstar_p3():
    g = path_graph(3)
    ge = decompose(g, maximum_matching(g))
    gs = build_gstar(g, ge)
    assert gs.a_vertices == (1,)
    assert gs.d_vertices == (0, 2)
    assert gs.edges == ((0, 1), (1, 2))


def test_build_gstar_star():
    g = star_graph(3)
    ge = decompose(g, maximum_matching(g))
    gs = build_gstar(g, ge)
    assert gs.a_vertices == (0,)
    assert gs.d_vertices == (1, 2, 3)
    assert gs.size == 4


def test_build_gstar_rejects_empty_a():
    g = path_graph(4)
    ge = decompose(g, maximum_matching(g))
    with pytest.raises(ValueError, match="empty A"):
        build_gstar(g, ge)


def test_initial_cover_p3():
    gs = GStar([1], [0, 2], [(0, 1), (1, 2)])
    sc = initial_cover(gs, _matching(3, [(0, 1)]))
    assert sc.center == {0: 1, 2: 1}
    assert sc.max_degree() == 2


def test_initial_cover_star_forced():
    gs = GStar([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)])
    sc = initial_cover(gs, _matching(4, [(0, 1)]))
    assert sc.center == {1: 0, 2: 0, 3: 0}
    assert sc.max_degree() == 3


def test_initial_cover_two_disjoint_edges():
    gs = GStar([0, 1], [2, 3], [(0, 2), (1, 3)])
    sc = initial_cover(gs, _matching(4, [(0, 2), (1, 3)]))
    assert sc.max_degree() == 1
    assert sc.edges() == [(0, 2), (1, 3)]


def test_effective_degree():
    gs = GStar([1, 3], [0, 2], [(0, 1), (1, 2), (2, 3)])
    sc = StarCover(gs, {0: 1, 2: 1})
    assert effective_degree(sc, 1) == 2
    assert effective_degree(sc, 3) == 0
    with pytest.raises(ValueError, match="not an A-vertex"):
        effective_degree(sc, 0)


def test_single_edge_star_degree():
    gs = GStar([0], [1], [(0, 1)])
    sc = StarCover(gs, {1: 0})
    assert effective_degree(sc, 0) == 1


# A small instance used repeatedly below: center u=0 carries d-vertices
# 2,3,4 while A-vertex 1 sits idle, adjacent only to 4.
def _lopsided():
    gs = GStar([0, 1], [2, 3, 4], [(0, 2), (0, 3), (0, 4), (1, 4)])
    sc = StarCover(gs, {2: 0, 3: 0, 4: 0})
    return gs, sc


def test_build_forest_pulls_in_idle_center():
    gs, sc = _lopsided()
    f = build_forest(gs, sc)
    assert f.roots == (0,)
    assert f.a_members == {0, 1}
    assert f.d_members == {2, 3, 4}
    assert f.pred[1] == 4


def test_build_forest_no_growth_on_full_star():
    gs = GStar([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)])
    sc = StarCover(gs, {1: 0, 2: 0, 3: 0})
    f = build_forest(gs, sc)
    assert f.roots == (0,)
    assert f.a_members == {0}


def test_build_forest_two_components_two_trees():
    gs = GStar(
        [0, 1], [2, 3, 4, 5], [(0, 2), (0, 3), (1, 4), (1, 5)]
    )
    sc = StarCover(gs, {2: 0, 3: 0, 4: 1, 5: 1})
    f = build_forest(gs, sc)
    assert f.roots == (0, 1)
    assert f.root_of[0] == 0 and f.root_of[1] == 1


def test_forest_closure():
    """No derived-graph edge may leave the forest's D side for an A-vertex
    outside the forest once building finishes."""
    for seed in range(60):
        g = random_connected_graph(9, p=0.3, seed=seed)
        ge = decompose(g, maximum_matching(g))
        if not ge.a or not ge.d_star:
            continue
        gs = build_gstar(g, ge)
        sc = initial_cover(gs, Matching.empty(g.n))
        if sc.max_degree() < 2:
            continue
        f = build_forest(gs, sc)
        for d in f.d_members:
            for a in gs.adj[d]:
                assert a in f.a_members


def test_find_switching_path_lopsided():
    gs, sc = _lopsided()
    path = find_switching_path(build_forest(gs, sc), sc)
    assert path is not None
    assert path.vertices == (0, 4, 1)


def test_find_switching_path_none_on_full_star():
    gs = GStar([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)])
    sc = StarCover(gs, {1: 0, 2: 0, 3: 0})
    assert find_switching_path(build_forest(gs, sc), sc) is None


def test_find_switching_path_none_when_degrees_close():
    gs = GStar(
        [0, 1], [2, 3, 4], [(0, 2), (0, 3), (1, 4), (3, 1)]
    )
    sc = StarCover(gs, {2: 0, 3: 0, 4: 1})
    assert find_switching_path(build_forest(gs, sc), sc) is None


def test_transform_lopsided():
    gs, sc = _lopsided()
    sc2 = transform(sc, SwitchingPath((0, 4, 1)))
    assert sc2.center == {2: 0, 3: 0, 4: 1}
    assert sc2.effective_degree(0) == 2
    assert sc2.effective_degree(1) == 1
    # untouched original
    assert sc.effective_degree(0) == 3


def test_transform_degree_bookkeeping():
    """Four centers with star sizes (3, 3, 2, 1); the switching path from
    the first to the last moves one unit: sizes become (2, 3, 2, 2)."""
    gs = GStar(
        [0, 1, 2, 3],
        [4, 5, 6, 7, 8, 9, 10, 11, 12],
        [
            (0, 4), (0, 5), (0, 6),
            (1, 7), (1, 8), (1, 9),
            (2, 10), (2, 11),
            (3, 12),
            (1, 6), (2, 9), (3, 11),
        ],
    )
    sc = StarCover(
        gs,
        {4: 0, 5: 0, 6: 0, 7: 1, 8: 1, 9: 1, 10: 2, 11: 2, 12: 3},
    )
    before = [sc.effective_degree(a) for a in (0, 1, 2, 3)]
    assert before == [3, 3, 2, 1]
    sc2 = transform(sc, SwitchingPath((0, 6, 1, 9, 2, 11, 3)))
    after = [sc2.effective_degree(a) for a in (0, 1, 2, 3)]
    assert after == [2, 3, 2, 2]
    assert sc2.max_degree() == 3


def test_transform_rejects_bad_paths():
    gs, sc = _lopsided()
    with pytest.raises(ValueError, match="even edge count"):
        transform(sc, SwitchingPath((0, 4)))
    with pytest.raises(ValueError, match="not in the cover"):
        transform(sc, SwitchingPath((1, 4, 0)))
    balanced = StarCover(
        GStar([0, 1], [2, 3], [(0, 2), (0, 3), (1, 3)]), {2: 0, 3: 1}
    )
    with pytest.raises(ValueError, match="too close"):
        transform(balanced, SwitchingPath((1, 3, 0)))


def test_optimize_lopsided_reaches_two():
    gs, sc = _lopsided()
    res = optimize(gs, sc)
    assert res.cover.max_degree() == 2
    assert res.cover.max_degree() == brute_md(gs)
    assert res.transforms == 1


def test_optimize_perfect_cover_unchanged():
    gs = GStar([0, 1], [2, 3], [(0, 2), (1, 3)])
    sc = StarCover(gs, {2: 0, 3: 1})
    res = optimize(gs, sc)
    assert res.transforms == 0
    assert res.cover.center == sc.center
    assert res.cover.max_degree() == 1


def test_optimize_full_star_stuck_at_three():
    gs = GStar([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)])
    sc = StarCover(gs, {1: 0, 2: 0, 3: 0})
    res = optimize(gs, sc)
    assert res.cover.max_degree() == 3
    assert brute_md(gs) == 3


def test_optimize_matches_brute_md_random():
    checked = 0
    for seed in range(400):
        g = random_connected_graph(10, p=0.3, seed=seed)
        ge = decompose(g, maximum_matching(g))
        if not ge.a or not ge.d_star:
            continue
        gs = build_gstar(g, ge)
        deltas = []
        res = optimize(
            gs,
            initial_cover(gs, Matching.empty(g.n)),
            trace=lambda path, delta: deltas.append(delta),
        )
        assert res.cover.max_degree() == brute_md(gs, BUDGET)
        assert res.transforms <= gs.size
        # the maximum star size never increases between transforms
        assert all(b <= a for a, b in zip(deltas, deltas[1:]))
        checked += 1
    assert checked >= 50


def test_star_cover_validation():
    gs = GStar([0], [1, 2], [(0, 1), (0, 2)])
    with pytest.raises(ValueError, match="exactly the D-vertices"):
        StarCover(gs, {1: 0})
    gs2 = GStar([0, 3], [1, 2], [(0, 1), (0, 2), (3, 2)])
    with pytest.raises(ValueError, match="not an A-neighbour"):
        StarCover(gs2, {1: 3, 2: 0})
