"""Bitmask fire-spread primitives shared by the search-based solvers.

Vertex sets are ints with bit v standing for vertex v.  All solvers verify
their winning sequences against engine.simulate in the test suite; this
module only exists to make the inner search loops cheap.
"""

from __future__ import annotations

from .graph import Graph


def adjacency_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def spread_once(adj: list[int], frontier: int, burned: int, defended: int) -> int:
    """One round of spreading: unprotected neighbors of the frontier."""
    hit = 0
    m = frontier
    while m:
        low = m & -m
        hit |= adj[low.bit_length() - 1]
        m ^= low
    return hit & ~(burned | defended)


def finish_fire(adj: list[int], frontier: int, burned: int, defended: int) -> int:
    """Let the fire run to a fixpoint with no further defenses."""
    while frontier:
        frontier = spread_once(adj, frontier, burned, defended)
        burned |= frontier
    return burned
