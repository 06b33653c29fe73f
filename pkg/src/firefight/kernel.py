"""Kernelization for instances whose residual is a clique.

With modulator X (source included) of size l and residual clique C, only
the clique vertices adjacent to low-contact modulator vertices matter
individually; the rest of the clique is interchangeable bulk.  The bulk
is replaced by two small cliques, leaving at most l^2 + 4l + 3 vertices,
and the demand is remapped so yes-instances stay yes-instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import decide_saving_k
from .graph import Graph, Instance


@dataclass(frozen=True)
class KernelOutput:
    """Reduced instance plus the certificate of how it was built.

    low_contact / high_contact split the modulator by whether a vertex has
    at most l+1 clique neighbors; junction is the kept set of clique
    neighbors of the low side; added_core and added_tail are the ids of
    the two replacement cliques.  All certificate sets use the reduced
    instance's ids; id_map sends surviving original ids to reduced ids.
    """

    reduced: Instance
    low_contact: frozenset[int]
    high_contact: frozenset[int]
    junction: frozenset[int]
    added_core: tuple[int, ...]
    added_tail: tuple[int, ...]
    applied: bool
    id_map: dict[int, int]


def kernelize(g: Graph, source: int, x_set: frozenset[int], k: int) -> KernelOutput:
    """Shrink a clique-residual instance to at most l^2+4l+3 vertices.

    The source is folded into the modulator first, so l counts it.  When
    the removable bulk has at most 2l+3 vertices the instance is already
    small and is returned unchanged with applied=False.
    """
    x_all = frozenset(x_set) | {source}
    if any(not (0 <= v < g.n) for v in x_all):
        raise ValueError("modulator vertex out of range")
    l = len(x_all)
    clique = frozenset(range(g.n)) - x_all
    for v in clique:
        if not (clique - {v}) <= g.adjacency[v]:
            raise ValueError("deleting the given set does not leave a clique")
    c_size = len(clique)
    if not (1 <= k <= c_size + l - 1):
        raise ValueError(f"demand {k} outside the admissible range [1, {c_size + l - 1}]")

    low = frozenset(x for x in x_all if len(g.adjacency[x] & clique) <= l + 1)
    high = x_all - low
    junction: set[int] = set()
    for x in low:
        junction |= g.adjacency[x] & clique
    removed = clique - junction

    if len(removed) <= 2 * l + 3:
        inst = Instance(g, source, modulator=x_all, class_tag="clique", demand=k)
        return KernelOutput(
            inst, low, high, frozenset(junction), (), (), False,
            {v: v for v in range(g.n)},
        )

    keep = sorted(frozenset(range(g.n)) - removed)
    id_map = {old: new for new, old in enumerate(keep)}
    core_size = l + 2
    tail_size = min(l + 1, len(removed))
    core = tuple(range(len(keep), len(keep) + core_size))
    tail = tuple(range(len(keep) + core_size, len(keep) + core_size + tail_size))
    n_new = len(keep) + core_size + tail_size

    edges = []
    for old in keep:
        for u in g.adjacency[old]:
            if u in id_map and old < u:
                edges.append((id_map[old], id_map[u]))
    junction_new = frozenset(id_map[v] for v in junction)
    high_new = frozenset(id_map[v] for v in high)
    for i, a in enumerate(core):
        edges.extend((a, b) for b in core[i + 1:])
        edges.extend((min(a, v), max(a, v)) for v in junction_new | high_new)
    for i, a in enumerate(tail):
        edges.extend((a, b) for b in tail[i + 1:])
        edges.extend((min(a, v), max(a, v)) for v in junction_new)
        edges.extend((b, a) for b in core)

    if k >= c_size:
        k_new = k - c_size + len(junction) + core_size + tail_size
    elif k >= 2 * l + 1:
        k_new = 2 * l + 1
    else:
        k_new = k

    h = Graph.from_edges(n_new, edges)
    inst = Instance(
        h,
        id_map[source],
        modulator=frozenset(id_map[v] for v in x_all),
        class_tag="clique",
        demand=k_new,
    )
    return KernelOutput(
        inst, frozenset(id_map[v] for v in low), high_new, junction_new,
        core, tail, True, id_map,
    )


def check_kernel_equivalence(
    original: Instance, out: KernelOutput, *, max_n: int = 24
) -> bool:
    """Decide both instances exactly and compare the answers."""
    if original.demand is None or out.reduced.demand is None:
        raise ValueError("both instances need a demand to compare")
    before = decide_saving_k(
        original.graph, original.source, original.demand, max_n=max_n
    )
    after = decide_saving_k(
        out.reduced.graph, out.reduced.source, out.reduced.demand, max_n=max_n
    )
    return before == after
