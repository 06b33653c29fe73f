"""Exact optimal firefighting by pruned enumeration of defense sequences.

Enumerates ordered defense sequences up to the longest-induced-path length
bound, with three exactness-preserving prunes:

  * never extend a sequence through an already burning vertex,
  * never extend once the fire has stopped (the prefix already realizes
    the same outcome and wins the shorter-sequence tie-break),
  * drop a subtree when even saving every currently unburned vertex,
    minus the inevitable next-round burns, cannot beat the incumbent,
  * branch only on the smallest available twin of interchangeable vertices.

Ties are broken toward higher saved count, then shorter sequences, then
lexicographically smaller vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._burn import adjacency_masks, finish_fire, spread_once
from .graph import Graph, longest_induced_path_from, smaller_twins


@dataclass(frozen=True)
class SolveResult:
    best_strategy: tuple[int, ...]
    best_saved: int
    explored: int


def _twin_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in tw) for tw in smaller_twins(g)]


def solve_exact(
    g: Graph,
    source: int,
    length_bound: int | None = None,
    *,
    max_n: int = 20,
) -> SolveResult:
    """Best achievable save count and a witness strategy.

    The guard max_n bounds the instance size; pass a larger value
    explicitly for bigger inputs.  length_bound overrides the induced-path
    depth cap (useful when the caller already knows a better one).
    """
    n = g.n
    if not (0 <= source < n):
        raise ValueError(f"source {source} out of range")
    if n > max_n:
        raise ValueError(f"n={n} exceeds guard {max_n}; pass max_n to override")
    depth_cap = (
        length_bound
        if length_bound is not None
        else longest_induced_path_from(g, source, max_n=max(max_n, n))
    )

    adj = adjacency_masks(g)
    twin = _twin_masks(g)
    full = (1 << n) - 1
    src_bit = 1 << source

    best_saved = -1
    best_len = 0
    best_seq: tuple[int, ...] = ()
    explored = 0
    prefix: list[int] = []

    def consider(saved: int) -> None:
        nonlocal best_saved, best_len, best_seq
        if saved > best_saved or (
            saved == best_saved
            and (len(prefix), prefix) < (best_len, list(best_seq))
        ):
            best_saved = saved
            best_len = len(prefix)
            best_seq = tuple(prefix)

    def search(burned: int, frontier: int, defended: int) -> None:
        nonlocal explored
        explored += 1
        consider(n - finish_fire(adj, frontier, burned, defended).bit_count())
        if len(prefix) >= depth_cap or not frontier:
            return
        incoming = spread_once(adj, frontier, burned, defended)
        if not incoming:
            return
        # Any continuation loses all but at most one of the incoming burns.
        if n - burned.bit_count() - (incoming.bit_count() - 1) < best_saved:
            return
        open_vertices = full & ~(burned | defended)
        m = open_vertices
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            # Swapping v for an open smaller twin preserves the outcome, so
            # the twin's branch already covers this one.
            if twin[v] & ~defended & ~burned:
                continue
            ndef = defended | low
            nfrontier = spread_once(adj, frontier, burned, ndef)
            prefix.append(v)
            search(burned | nfrontier, nfrontier, ndef)
            prefix.pop()

    search(src_bit, src_bit, 0)
    return SolveResult(best_seq, best_saved, explored)


def decide_saving_k(
    g: Graph,
    source: int,
    k: int,
    length_bound: int | None = None,
    *,
    max_n: int = 20,
) -> bool:
    """True when some valid strategy saves at least k vertices.

    Same search as solve_exact but pruned against the fixed target,
    stopped at the first witness, and memoized on the (burned, defended)
    state, since interleavings of the same defenses meet again there.
    The default depth cap is n rather than the induced-path bound:
    defenses after the fire has stopped never change the outcome, so the
    search self-terminates and the cap is only a formality.
    """
    n = g.n
    if not (0 <= source < n):
        raise ValueError(f"source {source} out of range")
    if n > max_n:
        raise ValueError(f"n={n} exceeds guard {max_n}; pass max_n to override")
    if k <= 0:
        return True
    depth_cap = length_bound if length_bound is not None else n

    adj = adjacency_masks(g)
    twin = _twin_masks(g)
    full = (1 << n) - 1
    src_bit = 1 << source
    # A binding depth cap makes the answer depth-dependent; n never binds
    # because every round defends a distinct vertex.
    depth_in_key = depth_cap < n
    refuted: set = set()
    memo_cap = 4_000_000

    def search(burned: int, frontier: int, defended: int, depth: int) -> bool:
        if n - finish_fire(adj, frontier, burned, defended).bit_count() >= k:
            return True
        if depth >= depth_cap or not frontier:
            return False
        incoming = spread_once(adj, frontier, burned, defended)
        if not incoming:
            return False
        if n - burned.bit_count() - (incoming.bit_count() - 1) < k:
            return False
        key = (burned, defended, depth) if depth_in_key else (burned, defended)
        if key in refuted:
            return False
        m = full & ~(burned | defended)
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if twin[v] & ~defended & ~burned:
                continue
            ndef = defended | low
            nfrontier = spread_once(adj, frontier, burned, ndef)
            if search(burned | nfrontier, nfrontier, ndef, depth + 1):
                return True
        if len(refuted) < memo_cap:
            refuted.add(key)
        return False

    return search(src_bit, src_bit, 0, 0)
