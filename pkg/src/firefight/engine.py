"""Fire spread simulation and strategy validity checking.

The game: the fire starts at the source at time 0.  In round i the
firefighter defends one unburned vertex, then the fire spreads to every
undefended neighbor of a burning vertex.  Once the strategy is exhausted
the fire keeps spreading until it stops.  Defended vertices never burn;
a strategy is valid when every defended vertex was unburned at its turn.
Trailing defenses after the fire has stopped are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bfs_distances


@dataclass(frozen=True)
class SimOutcome:
    """Result of playing a defense sequence against the fire."""

    burned: frozenset[int]
    defended: frozenset[int]
    burn_time: dict[int, int]
    valid: bool
    saved_count: int


def _check_well_formed(g: Graph, source: int, strategy: Sequence[int]) -> None:
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range")
    seen: set[int] = set()
    for v in strategy:
        if not (0 <= v < g.n):
            raise ValueError(f"strategy vertex {v} out of range")
        if v in seen:
            raise ValueError(f"strategy defends {v} twice")
        seen.add(v)


def simulate(g: Graph, source: int, strategy: Sequence[int]) -> SimOutcome:
    """Play `strategy` from `source` and report the outcome.

    An attempt to defend an already burning vertex stops the run with
    valid=False and the outcome carries the state at that failure.
    Out-of-range or repeated entries are input errors, not invalid play.
    """
    _check_well_formed(g, source, strategy)
    burned = {source}
    burn_time = {source: 0}
    defended: set[int] = set()
    frontier = [source]

    def spread(time: int) -> list[int]:
        new: list[int] = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in burned and w not in defended:
                    burned.add(w)
                    burn_time[w] = time
                    new.append(w)
        return new

    for i, v in enumerate(strategy, start=1):
        if v in burned:
            return SimOutcome(
                frozenset(burned), frozenset(defended), dict(burn_time),
                valid=False, saved_count=g.n - len(burned),
            )
        defended.add(v)
        frontier = spread(i)

    time = len(strategy)
    while frontier:
        time += 1
        frontier = spread(time)

    return SimOutcome(
        frozenset(burned), frozenset(defended), dict(burn_time),
        valid=True, saved_count=g.n - len(burned),
    )


def sav(outcome: SimOutcome) -> int:
    """Number of vertices the strategy saved (n minus burned)."""
    return outcome.saved_count


def fast_validity_check(g: Graph, source: int, strategy: Sequence[int]) -> bool:
    """Validity without simulation: one distance query per defended vertex.

    The sequence v_1..v_k is valid exactly when, for every i, the distance
    from the source to v_i is at least i in the graph with all other
    strategy vertices removed.
    """
    _check_well_formed(g, source, strategy)
    others = set(strategy)
    if source in others:
        return False
    for i, v in enumerate(strategy, start=1):
        others.discard(v)
        dist = bfs_distances(g, source, blocked=others)
        if dist[v] < i:
            return False
        others.add(v)
    return True


def strategy_from_text(text: str) -> tuple[int, ...]:
    """Parse a comma-separated list of 1-based vertex ids."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        try:
            raw = int(part.strip())
        except ValueError:
            raise ValueError(f"bad strategy entry {part.strip()!r}") from None
        if raw < 1:
            raise ValueError(f"strategy entry {raw} is not a positive id")
        out.append(raw - 1)
    return tuple(out)


def strategy_to_text(strategy: Sequence[int]) -> str:
    """Format internal 0-based ids as a comma-separated 1-based list."""
    return ",".join(str(v + 1) for v in strategy)
