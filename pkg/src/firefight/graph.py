"""Graph primitives, instance text format, and graph class recognizers.

Vertices are integers 0..n-1 internally.  The text format ("p ff" header)
uses 1-based ids; conversion happens at the parse/serialize boundary and
nowhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

CLASS_TAGS = (
    "clique",
    "cluster",
    "threshold",
    "star_forest",
    "split",
    "diameter2_components",
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph; adjacency[v] is the neighbor set of v."""

    adjacency: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(s) for s in adj))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)


@dataclass(frozen=True)
class Instance:
    """A firefighter instance: graph, fire source, and optional annotations."""

    graph: Graph
    source: int
    modulator: frozenset[int] | None = None
    class_tag: str | None = None
    demand: int | None = None

    def __post_init__(self) -> None:
        n = self.graph.n
        if not (0 <= self.source < n):
            raise ValueError(f"source {self.source} out of range")
        if self.modulator is not None:
            bad = [v for v in self.modulator if not (0 <= v < n)]
            if bad:
                raise ValueError(f"modulator vertices out of range: {sorted(bad)}")
        if self.class_tag is not None and self.class_tag not in CLASS_TAGS:
            raise ValueError(f"unknown class tag {self.class_tag!r}")


# ---------------------------------------------------------------------------
# instance text format


def parse_instance(text: str) -> Instance:
    """Parse the "p ff" text format (1-based ids) into an Instance."""
    n = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()
    source = None
    modulator: frozenset[int] | None = None
    class_tag = None
    demand = None

    def vertex(tok: str) -> int:
        try:
            raw = int(tok)
        except ValueError:
            raise ValueError(f"bad vertex id {tok!r}") from None
        if n is None:
            raise ValueError("record before 'p ff' header")
        if not (1 <= raw <= n):
            raise ValueError(f"vertex id {raw} out of range 1..{n}")
        return raw - 1

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        kind = toks[0]
        try:
            if kind == "p":
                if n is not None:
                    raise ValueError("duplicate 'p' header")
                if len(toks) != 4 or toks[1] != "ff":
                    raise ValueError("header must be 'p ff <n> <m>'")
                n, m_declared = int(toks[2]), int(toks[3])
                if n < 0 or m_declared < 0:
                    raise ValueError("negative count in header")
            elif kind == "e":
                if len(toks) != 3:
                    raise ValueError("edge line must be 'e <u> <v>'")
                u, v = vertex(toks[1]), vertex(toks[2])
                if u == v:
                    raise ValueError("self-loop")
                key = (min(u, v), max(u, v))
                if key in edge_seen:
                    raise ValueError(f"duplicate edge {u + 1} {v + 1}")
                edge_seen.add(key)
                edges.append(key)
            elif kind == "s":
                if source is not None:
                    raise ValueError("duplicate source line")
                if len(toks) != 2:
                    raise ValueError("source line must be 's <v>'")
                source = vertex(toks[1])
            elif kind == "x":
                if modulator is not None:
                    raise ValueError("duplicate modulator line")
                modulator = frozenset(vertex(t) for t in toks[1:])
            elif kind == "c":
                if class_tag is not None:
                    raise ValueError("duplicate class line")
                if len(toks) != 2 or toks[1] not in CLASS_TAGS:
                    raise ValueError(f"unknown class tag in {line!r}")
                class_tag = toks[1]
            elif kind == "k":
                if demand is not None:
                    raise ValueError("duplicate demand line")
                if len(toks) != 2:
                    raise ValueError("demand line must be 'k <int>'")
                demand = int(toks[1])
            else:
                raise ValueError(f"unknown record {kind!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None

    if n is None:
        raise ValueError("missing 'p ff' header")
    if source is None:
        raise ValueError("missing source line")
    if len(edges) != m_declared:
        raise ValueError(f"header declares {m_declared} edges, found {len(edges)}")
    return Instance(Graph.from_edges(n, edges), source, modulator, class_tag, demand)


def serialize_instance(inst: Instance) -> str:
    """Write an Instance in canonical line order (header, edges, s, x, c, k)."""
    g = inst.graph
    lines = [f"p ff {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    lines.append(f"s {inst.source + 1}")
    if inst.modulator is not None:
        lines.append(("x " + " ".join(str(v + 1) for v in sorted(inst.modulator))).rstrip())
    if inst.class_tag is not None:
        lines.append(f"c {inst.class_tag}")
    if inst.demand is not None:
        lines.append(f"k {inst.demand}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# basic graph utilities


def bfs_distances(g: Graph, src: int, blocked: frozenset[int] | set[int] = frozenset()) -> dict[int, float]:
    """Distances from src in g minus `blocked`; unreachable vertices map to inf.

    Vertices in `blocked` are absent from the result.  src must not be blocked.
    """
    if src in blocked:
        raise ValueError("source is blocked")
    dist: dict[int, float] = {v: math.inf for v in range(g.n) if v not in blocked}
    dist[src] = 0
    queue = [src]
    while queue:
        nxt: list[int] = []
        for u in queue:
            du = dist[u]
            for w in g.adjacency[u]:
                if w not in blocked and dist[w] == math.inf:
                    dist[w] = du + 1
                    nxt.append(w)
        queue = nxt
    return dist


def connected_component_of(g: Graph, v: int, removed: frozenset[int] | set[int] = frozenset()) -> set[int]:
    """Vertex set of the component of v in g minus `removed`."""
    if v in removed:
        raise ValueError("vertex is removed")
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def components(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> list[set[int]]:
    """Connected components of g minus `removed`, ordered by smallest member."""
    out: list[set[int]] = []
    seen: set[int] = set()
    for v in range(g.n):
        if v in removed or v in seen:
            continue
        comp = connected_component_of(g, v, removed)
        seen |= comp
        out.append(comp)
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on `vertices` with a monotone relabeling.

    Returns (subgraph, old_ids) where old_ids[new] is the original id; the
    relabeling preserves id order.
    """
    old_ids = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(old_ids)}
    keep = set(old_ids)
    edges = [
        (pos[u], pos[v])
        for u, v in g.edges()
        if u in keep and v in keep
    ]
    return Graph.from_edges(len(old_ids), edges), old_ids


def smaller_twins(g: Graph) -> list[tuple[int, ...]]:
    """For each v, the vertices u < v with N(u) = N(v) or N[u] = N[v].

    Twin vertices are interchangeable by a graph automorphism, which lets
    search code branch on the smallest available representative only.
    """
    out: list[tuple[int, ...]] = []
    opens = [g.adjacency[v] for v in range(g.n)]
    for v in range(g.n):
        nv = opens[v]
        nv_closed = nv | {v}
        tw = []
        for u in range(v):
            if opens[u] == nv or (opens[u] | {u}) == nv_closed:
                tw.append(u)
        out.append(tuple(tw))
    return out


def longest_induced_path_from(g: Graph, src: int, max_n: int = 25) -> int:
    """Length in edges of the longest induced path starting at src.

    Exhaustive search over induced extensions within the component of src.
    Branches on one representative per twin class; raises if the component
    exceeds max_n vertices.
    """
    if not (0 <= src < g.n):
        raise ValueError(f"source {src} out of range")
    comp = connected_component_of(g, src)
    if len(comp) > max_n:
        raise ValueError(
            f"component size {len(comp)} exceeds guard {max_n}; pass max_n to override"
        )
    twins = smaller_twins(g)
    adj = g.adjacency
    best = 0
    path = [src]
    on_path = {src}

    def extend() -> None:
        nonlocal best
        if len(path) - 1 > best:
            best = len(path) - 1
        last = path[-1]
        earlier = path[:-1]
        for v in sorted(adj[last]):
            if v in on_path:
                continue
            if any(w in adj[v] for w in earlier):
                continue
            if any(u not in on_path for u in twins[v]):
                continue
            path.append(v)
            on_path.add(v)
            extend()
            path.pop()
            on_path.remove(v)

    extend()
    return best


# ---------------------------------------------------------------------------
# class recognizers


def is_clique_graph(g: Graph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in range(g.n))


def _is_clique_set(g: Graph, vs: set[int]) -> bool:
    return all(len(g.adjacency[v] & vs) == len(vs) - 1 for v in vs)


def is_cluster(g: Graph) -> bool:
    return all(_is_clique_set(g, comp) for comp in components(g))


def threshold_partition(g: Graph) -> tuple[set[int], set[int]] | None:
    """Split a threshold graph into (clique part, independent part).

    Peels a currently universal or isolated vertex until the graph is empty;
    returns None when neither exists, i.e. g is not a threshold graph.
    Universal peels win ties, so a clique lands entirely in the clique part.
    """
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    cliq: set[int] = set()
    indep: set[int] = set()
    while remaining:
        pick = None
        full = len(remaining) - 1
        for v in sorted(remaining):
            if deg[v] == full:
                pick = (v, cliq)
                break
        if pick is None:
            for v in sorted(remaining):
                if deg[v] == 0:
                    pick = (v, indep)
                    break
        if pick is None:
            return None
        v, side = pick
        side.add(v)
        remaining.remove(v)
        for w in g.adjacency[v]:
            if w in remaining:
                deg[w] -= 1
    return cliq, indep


def is_threshold(g: Graph) -> bool:
    return threshold_partition(g) is not None


def _is_star_set(g: Graph, comp: set[int]) -> bool:
    if len(comp) == 1:
        return True
    edges = sum(len(g.adjacency[v] & comp) for v in comp) // 2
    maxdeg = max(len(g.adjacency[v] & comp) for v in comp)
    return edges == len(comp) - 1 and maxdeg == len(comp) - 1


def is_star_forest(g: Graph) -> bool:
    return all(_is_star_set(g, comp) for comp in components(g))


def is_split(g: Graph) -> bool:
    """Degree-sequence split test (Hammer-Simeone)."""
    if g.n == 0:
        return True
    d = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    h = max((i + 1 for i in range(g.n) if d[i] >= i), default=0)
    return sum(d[:h]) == h * (h - 1) + sum(d[h:])


def is_diameter2_components(g: Graph) -> bool:
    """Every connected component has diameter at most 2."""
    for comp in components(g):
        for v in comp:
            dist = bfs_distances(g, v, blocked=frozenset(range(g.n)) - comp)
            if any(dist[w] > 2 for w in comp):
                return False
    return True


_RECOGNIZERS = {
    "clique": is_clique_graph,
    "cluster": is_cluster,
    "threshold": is_threshold,
    "star_forest": is_star_forest,
    "split": is_split,
    "diameter2_components": is_diameter2_components,
}


def recognize(g: Graph, tag: str) -> bool:
    """Membership test for the named graph class; unknown tags raise."""
    try:
        pred = _RECOGNIZERS[tag]
    except KeyError:
        raise ValueError(f"unknown class tag {tag!r}") from None
    return pred(g)
