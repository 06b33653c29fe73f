"""Fixed-parameter solver for graphs close to a threshold graph.

With modulator X (deletion set into the threshold class, source folded in),
the residual graph carries a total neighborhood-nesting order.  Vertices
outside X are grouped by (side, modulator anchor); within a group, any
defense can be shifted to the highest-degree member still available without
losing saved vertices.  That collapses the search to sequences over group
symbols plus individual modulator vertices, of length at most 2|X| + 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._burn import adjacency_masks, finish_fire, spread_once
from .exact import SolveResult
from .graph import Graph, connected_component_of, induced_subgraph, is_threshold, threshold_partition


@dataclass(frozen=True)
class TypeSymbol:
    """One defendable unit: a residual vertex group or a single modulator vertex."""

    kind: str                       # "group" or "single"
    side: str = ""                  # "C" or "I" for groups
    anchor: frozenset[int] = frozenset()
    vertex: int = -1                # for singles


@dataclass(frozen=True)
class TypePartition:
    symbols: tuple[TypeSymbol, ...]
    members: dict[TypeSymbol, tuple[int, ...]] = field(hash=False)


def build_type_partition(g: Graph, x_set: frozenset[int]) -> TypePartition:
    """Group vertices of G - X by (nesting side, neighborhood inside X).

    Group members are ordered by degree in G - X descending (ids break
    ties), which is the order greedy instantiation consumes them in.
    """
    rest = sorted(v for v in range(g.n) if v not in x_set)
    sub, old_ids = induced_subgraph(g, rest)
    part = threshold_partition(sub)
    if part is None:
        raise ValueError("deleting the given set does not leave a threshold graph")
    side_of = {}
    for i in part[0]:
        side_of[old_ids[i]] = "C"
    for i in part[1]:
        side_of[old_ids[i]] = "I"
    groups: dict[TypeSymbol, list[int]] = {}
    for i, v in enumerate(rest):
        anchor = frozenset(g.adjacency[v] & x_set)
        sym = TypeSymbol("group", side_of[v], anchor)
        groups.setdefault(sym, []).append(v)
    members: dict[TypeSymbol, tuple[int, ...]] = {}
    for sym, vs in groups.items():
        deg = {v: len(g.adjacency[v]) - len(g.adjacency[v] & x_set) for v in vs}
        members[sym] = tuple(sorted(vs, key=lambda v: (-deg[v], v)))
    symbols = tuple(sorted(members, key=lambda s: (s.side, sorted(s.anchor))))
    return TypePartition(symbols, members)


def _greedy_pick(members: tuple[int, ...], burned: int, defended: int) -> int | None:
    for v in members:
        if not (burned >> v) & 1 and not (defended >> v) & 1:
            return v
    return None


def instantiate_and_simulate(
    g: Graph,
    source: int,
    x_set: frozenset[int],
    symbols: list[TypeSymbol],
):
    """Replay a template greedily and simulate the concrete strategy.

    Group symbols pick the highest residual degree member still unburned
    and undefended; single symbols defend their vertex literally.  If a
    symbol cannot be instantiated the partial outcome comes back with
    valid=False, which rejects the template.
    """
    import dataclasses

    from .engine import simulate

    part = build_type_partition(g, frozenset(x_set) | {source})
    adj = adjacency_masks(g)
    burned = 1 << source
    defended = 0
    strategy: list[int] = []
    for sym in symbols:
        if sym.kind == "single":
            v = sym.vertex
            if (burned >> v) & 1 or (defended >> v) & 1:
                return dataclasses.replace(simulate(g, source, strategy), valid=False)
        else:
            v = _greedy_pick(part.members[sym], burned, defended)
            if v is None:
                return dataclasses.replace(simulate(g, source, strategy), valid=False)
            if __debug__:
                # Greedy soundness: every same-type alternative still open is
                # neighborhood-dominated by the pick.
                for u in part.members[sym]:
                    if u != v and not (burned >> u) & 1 and not (defended >> u) & 1:
                        assert g.adjacency[u] - {v} <= g.adjacency[v], (sym, v, u)
        strategy.append(v)
        defended |= 1 << v
        burned |= spread_once(adj, burned, burned, defended)
    return simulate(g, source, strategy)


def solve_threshold(g: Graph, source: int, x_set: frozenset[int]) -> SolveResult:
    """Best saved count for an instance with a threshold modulator.

    Only the source's component matters for the fire; everything outside it
    counts as saved up front.
    """
    x_all = frozenset(x_set) | {source}
    rest = sorted(v for v in range(g.n) if v not in x_all)
    sub, _ = induced_subgraph(g, rest)
    if not is_threshold(sub):
        raise ValueError("deleting the given set does not leave a threshold graph")

    comp = connected_component_of(g, source)
    comp_list = sorted(comp)
    h, old_ids = induced_subgraph(g, comp_list)
    new_id = {v: i for i, v in enumerate(comp_list)}
    src = new_id[source]
    x_local = frozenset(new_id[v] for v in x_all if v in comp)
    outside = g.n - len(comp_list)

    part = build_type_partition(h, x_local)
    alphabet: list[TypeSymbol] = list(part.symbols)
    alphabet += [TypeSymbol("single", vertex=v) for v in sorted(x_local) if v != src]
    depth_cap = 2 * len(x_local) + 2

    adj = adjacency_masks(h)
    n_local = h.n
    explored = 0
    best_saved = -1
    best_seq: tuple[int, ...] = ()
    best_len = 0

    def consider(prefix: list[int], burned: int, frontier: int, defended: int) -> None:
        nonlocal best_saved, best_seq, best_len
        final = finish_fire(adj, frontier, burned, defended)
        saved = n_local - final.bit_count()
        if saved > best_saved or (
            saved == best_saved and (len(prefix), prefix) < (best_len, list(best_seq))
        ):
            best_saved = saved
            best_seq = tuple(prefix)
            best_len = len(prefix)

    def search(prefix: list[int], burned: int, frontier: int, defended: int) -> None:
        nonlocal explored
        explored += 1
        consider(prefix, burned, frontier, defended)
        if len(prefix) >= depth_cap or not frontier:
            return
        incoming = spread_once(adj, frontier, burned, defended)
        if not incoming:
            return
        if n_local - burned.bit_count() - (incoming.bit_count() - 1) < best_saved:
            return
        for v in _candidates(alphabet, part, burned, defended):
            ndef = defended | (1 << v)
            nfrontier = incoming & ~ndef
            prefix.append(v)
            search(prefix, burned | nfrontier, nfrontier, ndef)
            prefix.pop()

    search([], 1 << src, 1 << src, 0)

    strategy = tuple(old_ids[v] for v in best_seq)
    return SolveResult(strategy, best_saved + outside, explored)


def _candidates(alphabet, part, burned: int, defended: int):
    """Current greedy representative of each admissible symbol, deduplicated."""
    seen = set()
    for sym in alphabet:
        if sym.kind == "single":
            v = sym.vertex
            if (burned >> v) & 1 or (defended >> v) & 1:
                continue
        else:
            v = _greedy_pick(part.members[sym], burned, defended)
            if v is None:
                continue
        if v not in seen:
            seen.add(v)
            yield v
    return
