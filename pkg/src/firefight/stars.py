"""Fixed-parameter solver for graphs whose residual is a star forest.

The modulator X (source folded in) is small; each vertex of X is guessed
to burn, stay safe undefended, or get defended.  Under a guess, the fire
is confined to the component of the source once the defended vertices are
removed, structurally identical stars are interchangeable, and the only
defenses worth making inside a star are its border vertices, its center,
and at most one plain leaf.  Defense sequences are capped at 4|X| + 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from ._burn import adjacency_masks, finish_fire, spread_once
from .exact import SolveResult
from .graph import Graph, bfs_distances, components, induced_subgraph


@dataclass(frozen=True)
class Star:
    """One component of G - X: a center, its leaves, and modulator contacts."""

    center: int
    leaves: frozenset[int]
    border: frozenset[int]
    center_anchor: frozenset[int]
    by_anchor: tuple[tuple[frozenset[int], frozenset[int]], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return self.leaves | {self.center}

    @property
    def size(self) -> int:
        return len(self.leaves) + 1

    @property
    def union_anchor(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for anchor, _ in self.by_anchor:
            out |= anchor
        return out

    def burn_border(self, x_burn: frozenset[int]) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for anchor, group in self.by_anchor:
            if anchor & x_burn:
                out |= group
        return out

    def signature(self) -> tuple:
        counts = sorted(
            (tuple(sorted(anchor)), len(group)) for anchor, group in self.by_anchor
        )
        return (
            tuple(sorted(self.center_anchor)),
            tuple(sorted(self.union_anchor)),
            len(self.border),
            tuple(counts),
        )


@dataclass(frozen=True)
class StarDecomposition:
    stars: tuple[Star, ...]
    max_border: int


@dataclass(frozen=True)
class StarEquivClass:
    """Stars sharing a border signature, plus the merged large-border class."""

    kind: str                     # "regular", "T_new", "T_prime", or "T_star"
    members: tuple[Star, ...]
    signature: tuple | None
    b_t: int | None


@dataclass(frozen=True)
class ModulatorGuess:
    """Guessed fate of each modulator vertex; burn always contains the source."""

    burn: frozenset[int]
    save: frozenset[int]
    defend: frozenset[int]


def decompose_stars(g: Graph, x_set: frozenset[int]) -> StarDecomposition:
    """Split G - X into stars with border bookkeeping.

    Centers: a lone vertex is its own center, the smaller endpoint wins in
    a single edge, otherwise the unique max-degree vertex.  Raises when a
    component is not a star.
    """
    x_set = frozenset(x_set)
    stars: list[Star] = []
    for comp in components(g, removed=x_set):
        deg = {v: len(g.adjacency[v] & comp) for v in comp}
        edges = sum(deg.values()) // 2
        top = max(deg.values(), default=0)
        if len(comp) > 1 and (edges != len(comp) - 1 or top != len(comp) - 1):
            raise ValueError("deleting the given set does not leave a star forest")
        if len(comp) == 1:
            center = next(iter(comp))
        elif len(comp) == 2:
            center = min(comp)
        else:
            center = next(v for v in sorted(comp) if deg[v] == len(comp) - 1)
        anchors = {v: frozenset(g.adjacency[v] & x_set) for v in comp}
        border = frozenset(v for v in comp if anchors[v])
        groups: dict[frozenset[int], set[int]] = {}
        for v in border:
            groups.setdefault(anchors[v], set()).add(v)
        by_anchor = tuple(
            sorted(
                ((anchor, frozenset(group)) for anchor, group in groups.items()),
                key=lambda item: sorted(item[0]),
            )
        )
        stars.append(
            Star(center, frozenset(comp) - {center}, border, anchors[center], by_anchor)
        )
    stars.sort(key=lambda st: st.center)
    max_border = max((len(st.border) for st in stars), default=0)
    return StarDecomposition(tuple(stars), max_border)


def vulnerable_stars(
    dec: StarDecomposition, x_burn: frozenset[int], x_save: frozenset[int]
) -> list[Star]:
    """Stars bordering both the burning and the safe guess sides.

    Each such star needs a defense inside it to keep the safe side safe, so
    a guess with more of them than the sequence length bound is hopeless.
    """
    return [
        st
        for st in dec.stars
        if st.burn_border(x_burn) and st.burn_border(x_save)
    ]


def build_equiv_classes(
    dec: StarDecomposition, x_burn: frozenset[int], k: int
) -> list[StarEquivClass]:
    """Group stars by signature; merge large-border classes into one T_new.

    Classes the fire cannot enter (no border on the burning side) are
    T_star regardless of border size.
    """
    limit = 4 * k + 2
    by_sig: dict[tuple, list[Star]] = {}
    for st in dec.stars:
        by_sig.setdefault(st.signature(), []).append(st)
    regular: list[StarEquivClass] = []
    merged: list[Star] = []
    for sig, members in sorted(by_sig.items()):
        members.sort(key=lambda st: st.center)
        b_t = len(members[0].border)
        if not members[0].union_anchor & x_burn:
            regular.append(StarEquivClass("T_star", tuple(members), sig, b_t))
        elif b_t > limit:
            merged.extend(members)
        else:
            regular.append(StarEquivClass("regular", tuple(members), sig, b_t))
    if merged:
        merged.sort(key=lambda st: st.center)
        regular.append(StarEquivClass("T_new", tuple(merged), None, None))
    return regular


def _ranked(members: tuple[Star, ...]) -> list[Star]:
    return sorted(members, key=lambda st: (-(st.size - len(st.border)), st.center))


def _selected_stars(
    cls: StarEquivClass, k: int, distances: dict[int, float] | None
) -> list[Star]:
    limit = 4 * k + 2
    if cls.kind in ("regular", "T_prime"):
        ranked = _ranked(cls.members)
        return ranked if cls.kind == "T_prime" else ranked[:limit]
    if cls.kind == "T_star":
        return [cls.members[0]]
    if distances is None:
        raise ValueError("T_new candidate selection needs center distances")
    chosen: list[Star] = []
    for i in range(1, limit + 1):
        at_i = [st for st in cls.members if distances.get(st.center, math.inf) == i]
        chosen.extend(_ranked(tuple(at_i))[:i])
    return chosen


def candidate_set(
    cls: StarEquivClass,
    k: int,
    source: int,
    g: Graph,
    *,
    distances: dict[int, float] | None = None,
) -> frozenset[int]:
    """Vertices worth defending for this class.

    Regular: borders and centers of the 4k+2 largest members (by non-border
    size).  T_new: centers only, the top i members whose center sits at
    distance i from the source.  T_prime: borders and centers of every
    member.  T_star: one arbitrary representative.
    """
    if cls.kind == "T_star":
        return frozenset({cls.members[0].center})
    picked = _selected_stars(cls, k, distances)
    if cls.kind == "T_new":
        return frozenset(st.center for st in picked)
    out: set[int] = set()
    for st in picked:
        out |= st.border
        out.add(st.center)
    return frozenset(out)


def solve_stars(g: Graph, source: int, x_set: frozenset[int], on_accept=None) -> SolveResult:
    """Best saved count for an instance with a star-forest modulator.

    Enumerates modulator guesses; per guess, searches defense sequences
    over per-class candidate pools, keeping outcomes consistent with the
    guess (safe side unburned, burning side burned, defended side fully
    defended).  The pools are wider than candidate_set in two ways, both
    needed for exactness: the merged large-border class contributes full
    borders and centers of every member (its members are not mutually
    interchangeable, so no representative selection is sound), and every
    fire-reachable pooled star contributes one plain leaf (rescuing a
    last leaf after a center burns is sometimes optimal and has no other
    representative).

    on_accept, when given, is called with (guess, strategy, saved) for
    every consistent outcome that improves or ties the incumbent.
    """
    x_all = frozenset(x_set) | {source}
    if any(not (0 <= v < g.n) for v in x_all):
        raise ValueError("modulator vertex out of range")
    k = len(x_all)
    limit = 4 * k + 2
    dec_full = decompose_stars(g, x_all)

    n = g.n
    adj = adjacency_masks(g)
    others = sorted(x_all - {source})
    best_saved = -1
    best_len = 0
    best_seq: tuple[int, ...] = ()
    explored = 0

    for labels in product("bsd", repeat=len(others)):
        x_burn = frozenset(v for v, c in zip(others, labels) if c == "b") | {source}
        x_save = frozenset(v for v, c in zip(others, labels) if c == "s")
        x_def = frozenset(v for v, c in zip(others, labels) if c == "d")
        if x_save & g.adjacency[source]:
            continue
        dist = bfs_distances(g, source, blocked=x_def)
        comp_stars = tuple(
            st for st in dec_full.stars if dist.get(st.center, math.inf) < math.inf
        )
        dec = StarDecomposition(
            comp_stars, max((len(st.border) for st in comp_stars), default=0)
        )
        vul_stars = tuple(vulnerable_stars(dec, x_burn, x_save))
        if len(vul_stars) > limit:
            continue
        vul_set = {st.center for st in vul_stars}
        classes = build_equiv_classes(
            StarDecomposition(
                tuple(st for st in dec.stars if st.center not in vul_set),
                dec.max_border,
            ),
            x_burn,
            k,
        )
        if vul_stars:
            classes.append(StarEquivClass("T_prime", vul_stars, None, None))

        pool: set[int] = set()
        included: list[Star] = []
        for cls in classes:
            if cls.kind == "T_star":
                pool.add(cls.members[0].center)
            elif cls.kind == "regular":
                included.extend(_selected_stars(cls, k, dist))
            else:
                included.extend(cls.members)
        for st in included:
            pool |= st.border
            pool.add(st.center)
            if st.burn_border(x_burn):
                plain = sorted(st.leaves - st.border)
                if plain:
                    pool.add(plain[0])
        pool |= x_def

        alphabet = sorted(pool)
        save_mask = sum(1 << v for v in x_save)
        burn_mask = sum(1 << v for v in x_burn)
        def_mask = sum(1 << v for v in x_def)
        guess = ModulatorGuess(x_burn, x_save, x_def)

        def consider(prefix: list[int], burned: int, frontier: int, defended: int) -> None:
            nonlocal best_saved, best_len, best_seq
            final = finish_fire(adj, frontier, burned, defended)
            if final & save_mask or burn_mask & ~final or def_mask & ~defended:
                return
            saved = n - final.bit_count()
            if saved > best_saved or (
                saved == best_saved
                and (len(prefix), prefix) < (best_len, list(best_seq))
            ):
                best_saved = saved
                best_len = len(prefix)
                best_seq = tuple(prefix)
                if on_accept is not None:
                    on_accept(guess, tuple(prefix), saved)

        def search(prefix: list[int], burned: int, frontier: int, defended: int) -> None:
            nonlocal explored
            explored += 1
            if burned & save_mask or burned & def_mask & ~defended:
                return
            consider(prefix, burned, frontier, defended)
            pending = (def_mask & ~defended).bit_count()
            if len(prefix) + max(1, pending) > limit or not frontier:
                return
            incoming = spread_once(adj, frontier, burned, defended)
            if not incoming:
                return
            if n - burned.bit_count() - (incoming.bit_count() - 1) < best_saved:
                return
            for v in alphabet:
                bit = 1 << v
                if (burned | defended) & bit:
                    continue
                ndef = defended | bit
                nfrontier = incoming & ~ndef
                prefix.append(v)
                search(prefix, burned | nfrontier, nfrontier, ndef)
                prefix.pop()

        search([], 1 << source, 1 << source, 0)

    return SolveResult(best_seq, best_saved, explored)
