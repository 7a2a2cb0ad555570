"""Round mechanics shared by the burning, cooling and liminal games.

Everything here is pure: a graph plus a source sequence determines the
whole game.  Rounds are counted so that a game ends on the round in
which the last vertex catches fire, whether that happens during the
propagation step or when a source is placed.  Round 1 places the first
source; every later round first propagates and then, if unburned
vertices remain, places the next source.  A sequence may run out early,
in which case propagation continues source-free until completion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidSequenceError
from .graphs import Graph, bits, coord_to_vertex, mask_of

#: A source sequence is just an ordered tuple of vertex indices; validity
#: (each source unburned at the moment it is placed) is checked by replay.
SourceSequence = tuple[int, ...]


@dataclass(frozen=True)
class BurnState:
    """Burned vertex set plus the current round number."""

    burned: frozenset[int]
    round: int = 1


@dataclass(frozen=True)
class ReplayResult:
    rounds: int
    placed: int
    #: size of the burned set at the end of each round, index 0 = round 1
    burned_per_round: tuple[int, ...]


def spread(g: Graph, mask: int) -> int:
    """One propagation step on a bitmask state: burned plus all neighbors."""
    out = mask
    masks = g.adj_masks
    m = mask
    while m:
        low = m & -m
        out |= masks[low.bit_length() - 1]
        m ^= low
    return out


def propagate(g: Graph, state: BurnState) -> BurnState:
    """Burn every neighbor of a burned vertex and advance the round counter."""
    burned = set(state.burned)
    for v in state.burned:
        burned.update(g.adj[v])
    return BurnState(burned=frozenset(burned), round=state.round + 1)


def replay(g: Graph, sources: Sequence[int]) -> ReplayResult:
    """Simulate a full game and report rounds, sources placed and growth.

    Raises InvalidSequenceError if a source index is out of range or is
    already burned at its placement time.  Sources left over after the
    graph completes are ignored (they are never placed, hence never
    validated).
    """
    seq = list(sources)
    if not seq:
        raise InvalidSequenceError("a game needs at least one source")
    for v in seq:
        if not 0 <= v < g.n:
            raise InvalidSequenceError(f"source {v} out of range for {g.n} vertices")
    burned = {seq[0]}
    frontier = {seq[0]}
    placed = 1
    sizes = [1]
    rounds = 1
    n = g.n
    if len(burned) == n:
        return ReplayResult(rounds=1, placed=1, burned_per_round=(1,))
    while True:
        rounds += 1
        new = set()
        for v in frontier:
            for w in g.adj[v]:
                if w not in burned:
                    new.add(w)
        burned |= new
        if len(burned) == n:
            sizes.append(n)
            return ReplayResult(rounds=rounds, placed=placed, burned_per_round=tuple(sizes))
        frontier = new
        if placed < len(seq):
            v = seq[placed]
            if v in burned:
                raise InvalidSequenceError(
                    f"source {v} is already burned when placed in round {rounds}"
                )
            placed += 1
            burned.add(v)
            frontier = frontier | {v}
            if len(burned) == n:
                sizes.append(n)
                return ReplayResult(rounds=rounds, placed=placed, burned_per_round=tuple(sizes))
        sizes.append(len(burned))


def play_sequence(g: Graph, sources: Sequence[int]) -> int:
    """Round on which the burned set first equals the whole vertex set."""
    return replay(g, sources).rounds


def covering_value(g: Graph, sources: Sequence[int], m: int) -> bool:
    """True iff the (m - i)-balls around sources[i] (1-indexed) cover V.

    This is the standard covering reformulation of an m-round game: the
    source placed in round i has propagated for m - i rounds by the end
    of round m.  It ignores the unburned-at-placement constraint, so it
    is a relaxation used for fast pruning; exact answers are always
    re-validated by replay.
    """
    seq = list(sources)
    if m < 1:
        raise ValueError("m must be at least 1")
    if len(seq) > m:
        raise ValueError(f"{len(seq)} sources cannot be placed within {m} rounds")
    covered = 0
    for j, v in enumerate(seq):
        if not 0 <= v < g.n:
            raise InvalidSequenceError(f"source {v} out of range for {g.n} vertices")
        covered |= g.ball(v, m - 1 - j)
        if covered == g.full_mask:
            return True
    return covered == g.full_mask


def _cheb_spread(cooled: set[tuple[int, int]], side: int) -> set[tuple[int, int]]:
    out = set(cooled)
    for x, y in cooled:
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                xx, yy = x + dx, y + dy
                if 1 <= xx <= side and 1 <= yy <= side:
                    out.add((xx, yy))
    return out


def cooling_sequence_strong(n: int, d: int = 2) -> SourceSequence:
    """Chessboard cooling sequence for the d-fold strong product of P_n.

    All sources live in the 2-face spanned by the first two axes (other
    coordinates pinned to 1).  The candidate order is: black cells of the
    bottom row left to right, then white cells of the rightmost column
    bottom to top, where the bottom-left cell (1, 1) is black.  A
    candidate that is already cooled when its turn comes is skipped, so
    the returned sequence contains exactly the placements that the game
    permits.  Replaying it burns the graph in exactly n rounds.
    """
    if n < 2 or d < 2:
        raise ValueError("cooling_sequence_strong needs n, d >= 2")
    blacks = [(x, 1) for x in range(1, n + 1) if (x + 1) % 2 == 0]
    whites = [(n, y) for y in range(1, n + 1) if (n + y) % 2 == 1]
    candidates = deque(blacks + whites)

    # Simulate the game restricted to the 2-face; Chebyshev distance in the
    # full product restricted to in-plane vertices equals plane distance, so
    # placements are legal in the product iff they are legal here.
    first = candidates.popleft()
    cooled = {first}
    sequence = [first]
    total = n * n
    while len(cooled) < total:
        cooled = _cheb_spread(cooled, n)
        if len(cooled) == total:
            break
        while candidates and candidates[0] in cooled:
            candidates.popleft()
        if not candidates:
            break
        nxt = candidates.popleft()
        cooled.add(nxt)
        sequence.append(nxt)

    return tuple(coord_to_vertex((x, y) + (1,) * (d - 2), n) for x, y in sequence)


__all__ = [
    "BurnState",
    "ReplayResult",
    "SourceSequence",
    "spread",
    "propagate",
    "replay",
    "play_sequence",
    "covering_value",
    "cooling_sequence_strong",
    "bits",
    "mask_of",
]
