"""Seeded instance generators for the benchmark corpora.

Randomness comes from numpy's PCG64 so corpora reproduce bit-for-bit
across platforms given the same parameters and seed.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, Instance, components

PLANTED_TAGS = ("clique", "threshold", "star_forest")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic per seed."""
    if n < 0 or not (0.0 <= p <= 1.0):
        raise ValueError("need n >= 0 and p in [0, 1]")
    rng = _rng(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def _inner_threshold(size: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    edges = []
    for v in range(1, size):
        if rng.random() < 0.5:
            edges.extend((u, v) for u in range(v))
    return edges


def _inner_star_forest(size: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    edges = []
    at = 0
    while at < size:
        take = int(rng.integers(1, size - at + 1))
        edges.extend((at, at + j) for j in range(1, take))
        at += take
    return edges


def gen_planted(
    class_tag: str, inner_size: int, k: int, p: float, seed: int
) -> Instance:
    """Random class member plus k modulator vertices wired with probability p.

    Inner vertices come first (0 .. inner_size-1), then the modulator; the
    source is the first modulator vertex and gets an edge to every
    component it would otherwise miss, so the fire can reach the graph.
    """
    if class_tag not in PLANTED_TAGS:
        raise ValueError(f"unsupported class tag {class_tag!r}")
    if inner_size < 1 or k < 1 or not (0.0 <= p <= 1.0):
        raise ValueError("need inner_size >= 1, k >= 1, p in [0, 1]")
    rng = _rng(seed)
    if class_tag == "clique":
        edges = [(u, v) for u in range(inner_size) for v in range(u + 1, inner_size)]
    elif class_tag == "threshold":
        edges = _inner_threshold(inner_size, rng)
    else:
        edges = _inner_star_forest(inner_size, rng)

    n = inner_size + k
    source = inner_size
    for x in range(inner_size, n):
        for u in range(x):
            if rng.random() < p:
                edges.append((u, x))

    g = Graph.from_edges(n, edges)
    extra = [
        (min(source, min(comp)), max(source, min(comp)))
        for comp in components(g)
        if source not in comp
    ]
    if extra:
        g = Graph.from_edges(n, sorted(set(map(tuple, edges)) | set(extra)))
    return Instance(
        g,
        source,
        modulator=frozenset(range(inner_size, n)),
        class_tag=class_tag,
        demand=None,
    )
