import random
from itertools import combinations

import pytest

from firefight import (
    Graph, reduce_clique_to_diameter2, reduce_clique_to_split,
    reduce_cliqueVC_to_stars, decide_saving_k, solve_exact, recognize,
    induced_subgraph, gen_random,
)
from oracles import brute_has_clique, brute_min_vertex_cover, edge_count

# a triangle with two pendants: the smallest graph with interesting gadgets
G5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
K2 = Graph.from_edges(2, [(0, 1)])
K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def residual(out):
    g = out.instance.graph
    keep = sorted(set(range(g.n)) - out.instance.modulator)
    sub, _ = induced_subgraph(g, keep)
    return sub


def test_diam2_triangle_with_pendants():
    out = reduce_clique_to_diameter2(G5, 3)
    inst = out.instance
    assert inst.graph.n == 2 + 3 * 4 + 5 + 5 == 24
    assert inst.demand == 8
    assert inst.source == 0
    # graph has the triangle {2,3,4} (1-based), so the gadget is a yes
    assert decide_saving_k(inst.graph, 0, 8, max_n=24) is True


def test_diam2_structure():
    out = reduce_clique_to_diameter2(G5, 3)
    g = out.instance.graph
    n, m = 5, 5
    k = 3
    # id layout: source, vertex copies, edge vertices, grid, hub
    assert sorted(out.vertex_ids.values()) == list(range(1, 1 + n))
    assert sorted(out.edge_ids.values()) == list(range(1 + n, 1 + n + m))
    assert out.hub == g.n - 1
    assert len(out.grid_rows) == k and all(len(r) == k + 1 for r in out.grid_rows)
    # source sees exactly the first layer
    assert g.adjacency[0] == frozenset(out.grid_rows[0])
    # hub covers all copies and edge vertices, nothing else
    hub_want = set(out.vertex_ids.values()) | set(out.edge_ids.values())
    assert g.adjacency[out.hub] == frozenset(hub_want)
    # last layer reaches every vertex copy
    for a in out.grid_rows[-1]:
        assert set(out.vertex_ids.values()) <= g.adjacency[a]
    # edge vertices touch their two endpoints plus the hub
    for (u, v), ev in out.edge_ids.items():
        assert g.adjacency[ev] == {out.vertex_ids[u], out.vertex_ids[v], out.hub}
    # declared modulator leaves diameter-2 components and matches the size formula
    assert inst_mod_ok(out, "diameter2_components")
    assert len(out.instance.modulator) == k * (k + 1) + 1


def inst_mod_ok(out, tag):
    assert out.instance.class_tag == tag
    return recognize(residual(out), tag)


def test_diam2_no_instance():
    # P3 is triangle-free and sparse enough that the gadget cannot fake a win
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not brute_has_clique(p3, 3)
    out = reduce_clique_to_diameter2(p3, 3)
    assert decide_saving_k(out.instance.graph, 0, out.instance.demand,
                           max_n=out.instance.graph.n) is False


def test_diam2_k2():
    out = reduce_clique_to_diameter2(K2, 2)
    inst = out.instance
    assert inst.demand == 5
    res = solve_exact(inst.graph, 0, max_n=inst.graph.n)
    assert res.best_saved == 5
    assert decide_saving_k(inst.graph, 0, 5, max_n=inst.graph.n) is True


def test_diam2_rejects_small_k():
    with pytest.raises(ValueError):
        reduce_clique_to_diameter2(G5, 1)


def test_split_triangle_with_pendants():
    out = reduce_clique_to_split(G5, 3)
    inst = out.instance
    assert inst.graph.n == 1 + 2 * 3 + 5 + 5 == 17
    assert inst.demand == 7
    assert out.hub is None
    assert decide_saving_k(inst.graph, 0, 7, max_n=17) is True
    # vertex copies are pairwise adjacent in the split gadget
    copies = sorted(out.vertex_ids.values())
    g = inst.graph
    for a, b in combinations(copies, 2):
        assert b in g.adjacency[a]
    assert inst_mod_ok(out, "split")
    assert len(inst.modulator) == (3 - 1) * 3 + 1


def test_split_no_and_k2():
    out = reduce_clique_to_split(K13, 3)
    assert decide_saving_k(out.instance.graph, 0, out.instance.demand,
                           max_n=out.instance.graph.n) is False
    # K2 at k=2 has only the clique edge, no spare edge vertex: a no-instance
    out2 = reduce_clique_to_split(K2, 2)
    assert out2.instance.demand == 4
    best = solve_exact(out2.instance.graph, 0, max_n=out2.instance.graph.n).best_saved
    assert best == 3
    assert decide_saving_k(out2.instance.graph, 0, 4, max_n=out2.instance.graph.n) is False


def test_stars_triangle_with_pendants():
    out = reduce_cliqueVC_to_stars(G5, frozenset({1, 3}), 3)
    inst = out.instance
    assert inst.graph.n == 1 + 2 * 3 + 5 + 5 == 17
    assert inst.demand == 7
    assert decide_saving_k(inst.graph, 0, 7, max_n=17) is True
    # original edges live on inside the gadget
    g = inst.graph
    for u in range(G5.n):
        for v in G5.adjacency[u]:
            assert out.vertex_ids[v] in g.adjacency[out.vertex_ids[u]]
    assert inst_mod_ok(out, "star_forest")
    # modulator {s} + grid + vertex-cover copies, within the stated bound
    l = 2
    assert len(inst.modulator) == 1 + (3 - 1) * 3 + l
    assert len(inst.modulator) <= (l + 1) ** 2 + 1


def test_stars_requires_cover_and_range():
    with pytest.raises(ValueError):
        reduce_cliqueVC_to_stars(G5, frozenset({1}), 3)
    # K1,3 with its center cover only admits k <= |X|+1 = 2
    with pytest.raises(ValueError):
        reduce_cliqueVC_to_stars(K13, frozenset({0}), 3)
    # at k=2 any edge is a clique, so the gadget is a yes
    out = reduce_cliqueVC_to_stars(K13, frozenset({0}), 2)
    assert decide_saving_k(out.instance.graph, 0, out.instance.demand,
                           max_n=out.instance.graph.n) is True


def test_vertex_count_formulas():
    rng = random.Random(137)
    for t in range(25):
        g = gen_random(rng.randint(2, 6), rng.random(), 8800 + t)
        n, m = g.n, edge_count(g)
        for k in (2, 3):
            d2 = reduce_clique_to_diameter2(g, k)
            assert d2.instance.graph.n == 2 + k * (k + 1) + n + m
            sp = reduce_clique_to_split(g, k)
            assert sp.instance.graph.n == 1 + k * (k - 1) + n + m
            xc = brute_min_vertex_cover(g)
            if k <= len(xc) + 1:
                st = reduce_cliqueVC_to_stars(g, xc, k)
                assert st.instance.graph.n == 1 + k * (k - 1) + n + m
            for out, tag in ((d2, "diameter2_components"), (sp, "split")):
                assert recognize(residual(out), tag), (t, k, tag)
