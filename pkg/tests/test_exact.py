import random

import pytest

from firefight import (
    Graph, solve_exact, decide_saving_k, simulate, longest_induced_path_from,
    gen_random,
)
from oracles import brute_best


def test_p3_defend_neighbor():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    res = solve_exact(g, 0)
    assert res.best_saved == 2
    assert res.best_strategy == (1,)


def test_k4_one_defend_matters():
    g = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    res = solve_exact(g, 0)
    assert res.best_saved == 1
    assert res.best_strategy == (1,)


def test_fig_graph_cut_vertex():
    # 0-based edges of the 5-vertex graph 1-2,2-3,3-4,4-5,2-4
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    res = solve_exact(g, 0)
    assert res.best_saved == 4
    assert res.best_strategy == (1,)


def test_decide_examples():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert decide_saving_k(p3, 0, 2) is True
    assert decide_saving_k(p3, 0, 3) is False
    k4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert decide_saving_k(k4, 0, 1) is True
    assert decide_saving_k(k4, 0, 2) is False


def test_matches_plain_enumeration():
    rng = random.Random(41)
    done = 0
    while done < 200:
        n = rng.randint(2, 12)
        p = rng.uniform(0.25, 0.95) if n >= 10 else rng.random()
        g = gen_random(n, p, 2000 + done)
        want_saved, want_seq = brute_best(g, 0)
        res = solve_exact(g, 0)
        assert res.best_saved == want_saved, (n, p, done)
        assert res.best_strategy == want_seq, (n, p, done)
        done += 1


def test_strategy_is_valid_and_minimal():
    rng = random.Random(43)
    for t in range(80):
        g = gen_random(rng.randint(2, 10), rng.random(), 2400 + t)
        res = solve_exact(g, 0)
        out = simulate(g, 0, res.best_strategy)
        assert out.valid
        assert out.saved_count == res.best_saved
        # dropping any single defend must strictly hurt
        for i in range(len(res.best_strategy)):
            shorter = res.best_strategy[:i] + res.best_strategy[i + 1:]
            cut = simulate(g, 0, shorter)
            assert (not cut.valid) or cut.saved_count < res.best_saved


def test_strategy_length_within_induced_path_bound():
    rng = random.Random(47)
    for t in range(60):
        g = gen_random(rng.randint(2, 11), rng.random(), 2600 + t)
        res = solve_exact(g, 0)
        assert len(res.best_strategy) <= longest_induced_path_from(g, 0)


def test_length_bound_truncates():
    g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)])
    full = solve_exact(g, 0)
    capped = solve_exact(g, 0, length_bound=1)
    assert capped.best_saved <= full.best_saved
    assert len(capped.best_strategy) <= 1


def test_size_guard():
    g = gen_random(25, 0.3, 99)
    with pytest.raises(ValueError):
        solve_exact(g, 0)
    g_small = gen_random(8, 0.3, 99)
    solve_exact(g_small, 0, max_n=8)


def test_burned_smaller_twin_does_not_mask_branch():
    # source 0 is a false twin of vertex 2 (both adjacent to exactly 1);
    # skipping 2 because its twin 0 is "available" would lose the optimum
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    res = solve_exact(g, 0)
    assert res.best_saved == 3
    assert res.best_strategy == (1,)
    # heavier regression: a grid layer whose twins all burned early
    g2 = Graph.from_edges(
        7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)])
    want_saved, want_seq = brute_best(g2, 0)
    res2 = solve_exact(g2, 0)
    assert res2.best_saved == want_saved
    assert res2.best_strategy == want_seq


def test_monotone_under_disconnection():
    # delete the bridge 1-2: everything past the bridge is pre-saved
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    cut = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    assert solve_exact(cut, 0).best_saved >= solve_exact(g, 0).best_saved


def test_decide_with_length_bound():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert decide_saving_k(g, 0, 3) is True
    assert decide_saving_k(g, 0, 3, length_bound=1) is True
    assert decide_saving_k(g, 0, 5) is False
