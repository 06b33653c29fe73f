"""Finding small vertex sets whose deletion lands in a target graph class.

Bounded-depth branching on forbidden induced subgraphs; every minimal
deletion set must hit each forbidden pattern, so branching over one
pattern's vertices is exhaustive.  Budgets are tried in increasing order,
which makes the returned set a minimum one, not just any set within the
budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, induced_subgraph, recognize

# Forbidden induced subgraphs, by class.  Each pattern is identified by a
# predicate on (vertex count, induced edge count, sorted degree sequence).
_PATTERNS: dict[str, tuple[str, ...]] = {
    "cluster": ("P3",),
    "threshold": ("P4", "C4", "2K2"),
    "star_forest": ("K3", "C4", "P4"),
    "split": ("2K2", "C4", "C5"),
}

_PATTERN_SHAPE: dict[str, tuple[int, int, tuple[int, ...]]] = {
    "P3": (3, 2, (1, 1, 2)),
    "K3": (3, 3, (2, 2, 2)),
    "P4": (4, 3, (1, 1, 2, 2)),
    "C4": (4, 4, (2, 2, 2, 2)),
    "2K2": (4, 2, (1, 1, 1, 1)),
    "C5": (5, 5, (2, 2, 2, 2, 2)),
}


@dataclass(frozen=True)
class Modulator:
    vertices: frozenset[int]
    class_tag: str
    budget: int


def _matches(g: Graph, vs: tuple[int, ...], shape: tuple[int, int, tuple[int, ...]]) -> bool:
    size, edges, degseq = shape
    sub = [g.adjacency[v] for v in vs]
    vset = set(vs)
    degs = sorted(len(nb & vset) for nb in sub)
    return sum(degs) // 2 == edges and tuple(degs) == degseq


def find_forbidden_subgraph(g: Graph, tag: str) -> tuple[int, ...] | None:
    """First forbidden induced pattern for `tag`, or None if class member.

    Deterministic: smallest pattern first (then pattern list order), and
    the lexicographically first vertex tuple for that pattern.
    """
    try:
        names = _PATTERNS[tag]
    except KeyError:
        raise ValueError(f"no obstruction set for class {tag!r}") from None
    for name in sorted(names, key=lambda p: (_PATTERN_SHAPE[p][0], names.index(p))):
        shape = _PATTERN_SHAPE[name]
        for vs in combinations(range(g.n), shape[0]):
            if _matches(g, vs, shape):
                return vs
    return None


def _branch(g: Graph, tag: str, deleted: set[int], budget: int) -> frozenset[int] | None:
    rest = sorted(set(range(g.n)) - deleted)
    sub, old_ids = induced_subgraph(g, rest)
    obstruction = find_forbidden_subgraph(sub, tag)
    if obstruction is None:
        return frozenset(deleted)
    if budget == 0:
        return None
    for v_new in obstruction:
        v = old_ids[v_new]
        deleted.add(v)
        found = _branch(g, tag, deleted, budget - 1)
        deleted.remove(v)
        if found is not None:
            return found
    return None


def find_modulator(g: Graph, tag: str, k: int) -> Modulator | None:
    """Minimum-size deletion set into `tag`, or None if more than k is needed."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    if tag not in _PATTERNS:
        raise ValueError(f"unsupported class for modulator search: {tag!r}")
    for budget in range(k + 1):
        found = _branch(g, tag, set(), budget)
        if found is not None:
            return Modulator(found, tag, k)
    return None


def _clique_branch(g: Graph, deleted: set[int], budget: int) -> frozenset[int] | None:
    rest = sorted(set(range(g.n)) - deleted)
    pair = None
    for i, u in enumerate(rest):
        for v in rest[i + 1:]:
            if not g.has_edge(u, v):
                pair = (u, v)
                break
        if pair:
            break
    if pair is None:
        return frozenset(deleted)
    if budget == 0:
        return None
    for v in pair:
        deleted.add(v)
        found = _clique_branch(g, deleted, budget - 1)
        deleted.remove(v)
        if found is not None:
            return found
    return None


def find_clique_modulator(g: Graph, k: int) -> Modulator | None:
    """Minimum vertex set whose deletion leaves a clique (at most k), else None.

    Equivalent to vertex cover on the complement graph; branches two ways
    on a non-adjacent pair.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    for budget in range(k + 1):
        found = _clique_branch(g, set(), budget)
        if found is not None:
            return Modulator(found, "clique", k)
    return None


def verify_modulator(g: Graph, mod: Modulator) -> bool:
    """Check the deletion lands in the declared class within the budget."""
    if len(mod.vertices) > mod.budget:
        return False
    if any(not (0 <= v < g.n) for v in mod.vertices):
        return False
    rest = sorted(set(range(g.n)) - mod.vertices)
    sub, _ = induced_subgraph(g, rest)
    return recognize(sub, mod.class_tag)
