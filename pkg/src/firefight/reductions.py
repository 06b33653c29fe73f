"""Gadget constructions turning clique-finding into firefighting instances.

All three share a layout: source first, then one copy per input vertex,
then one vertex per input edge (sorted by endpoints), then a layered grid
the fire must march through, then an optional hub.  Consecutive grid
layers are completely joined, so defending inside the grid is pointless
and the fire reaches the vertex copies after a fixed number of rounds.
A clique of the right size is exactly what a defender needs to hit the
demanded save count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, Instance


@dataclass(frozen=True)
class ReductionOutput:
    """Gadget instance plus id maps back to the input graph.

    vertex_ids and edge_ids locate the copies of input vertices and
    edges, grid_rows holds the layer ids outward from the source, hub is
    the near-universal vertex where the construction has one.
    """

    instance: Instance
    vertex_ids: dict[int, int]
    edge_ids: dict[tuple[int, int], int]
    grid_rows: tuple[tuple[int, ...], ...]
    hub: int | None


def _sorted_edges(g: Graph) -> list[tuple[int, int]]:
    return sorted(
        (v, u) for v in range(g.n) for u in g.adjacency[v] if v < u
    )


def _layout(g: Graph, rows: int, cols: int, with_hub: bool):
    edges_g = _sorted_edges(g)
    vertex_ids = {v: 1 + v for v in range(g.n)}
    edge_ids = {e: 1 + g.n + i for i, e in enumerate(edges_g)}
    base = 1 + g.n + len(edges_g)
    grid = tuple(
        tuple(base + r * cols + c for c in range(cols)) for r in range(rows)
    )
    hub = base + rows * cols if with_hub else None
    total = base + rows * cols + (1 if with_hub else 0)

    edges = []
    for (u, v), ev in edge_ids.items():
        edges.append((vertex_ids[u], ev))
        edges.append((vertex_ids[v], ev))
    for r in range(rows - 1):
        edges.extend((a, b) for a in grid[r] for b in grid[r + 1])
    edges.extend((0, a) for a in grid[0])
    edges.extend((a, c) for a in grid[-1] for c in vertex_ids.values())
    return vertex_ids, edge_ids, grid, hub, total, edges


def reduce_clique_to_diameter2(g: Graph, k: int) -> ReductionOutput:
    """Gadget whose residual (after source and grid) has diameter two.

    Grid of k layers of k+1; a hub adjacent to every vertex and edge copy
    keeps the residual diameter at two.  Demand k + C(k,2) + 2: a save
    that large needs k vertex copies forming a clique, their C(k,2) edge
    copies, the hub, and one extra vertex or edge copy.
    """
    if k < 2:
        raise ValueError("demand parameter must be at least 2")
    vertex_ids, edge_ids, grid, hub, total, edges = _layout(g, k, k + 1, True)
    for ev in edge_ids.values():
        edges.append((ev, hub))
    for cv in vertex_ids.values():
        edges.append((cv, hub))
    modulator = frozenset({0}) | frozenset(a for row in grid for a in row)
    inst = Instance(
        Graph.from_edges(total, edges),
        0,
        modulator=modulator,
        class_tag="diameter2_components",
        demand=k + k * (k - 1) // 2 + 2,
    )
    return ReductionOutput(inst, vertex_ids, edge_ids, grid, hub)


def reduce_clique_to_split(g: Graph, k: int) -> ReductionOutput:
    """Gadget whose residual is a split graph: cliqued vertex copies plus
    an independent set of edge copies.  Grid of k-1 layers of k, no hub,
    demand k + C(k,2) + 1."""
    if k < 2:
        raise ValueError("demand parameter must be at least 2")
    vertex_ids, edge_ids, grid, _, total, edges = _layout(g, k - 1, k, False)
    ids = sorted(vertex_ids.values())
    for i, a in enumerate(ids):
        edges.extend((a, b) for b in ids[i + 1:])
    inst = Instance(
        Graph.from_edges(total, edges),
        0,
        modulator=frozenset({0}) | frozenset(a for row in grid for a in row),
        class_tag="split",
        demand=k + k * (k - 1) // 2 + 1,
    )
    return ReductionOutput(inst, vertex_ids, edge_ids, grid, None)


def reduce_cliqueVC_to_stars(
    g: Graph, x_cover: frozenset[int], k: int
) -> ReductionOutput:
    """Gadget whose residual is a star forest, parameterized by a vertex
    cover of the input.  The input graph is copied verbatim (edge copies
    become pendants on covered vertices), grid of k-1 layers of k, demand
    k + C(k,2) + 1, modulator = source + grid + cover copies."""
    x_cover = frozenset(x_cover)
    for u, v in _sorted_edges(g):
        if u not in x_cover and v not in x_cover:
            raise ValueError("the given set is not a vertex cover")
    if not (2 <= k <= len(x_cover) + 1):
        raise ValueError(
            f"demand parameter {k} outside [2, {len(x_cover) + 1}]"
        )
    vertex_ids, edge_ids, grid, _, total, edges = _layout(g, k - 1, k, False)
    for u, v in _sorted_edges(g):
        edges.append((vertex_ids[u], vertex_ids[v]))
    modulator = (
        frozenset({0})
        | frozenset(a for row in grid for a in row)
        | frozenset(vertex_ids[x] for x in x_cover)
    )
    inst = Instance(
        Graph.from_edges(total, edges),
        0,
        modulator=modulator,
        class_tag="star_forest",
        demand=k + k * (k - 1) // 2 + 1,
    )
    return ReductionOutput(inst, vertex_ids, edge_ids, grid, None)
