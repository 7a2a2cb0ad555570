"""Tiling and packing views of burning, and the k* machinery for paths.

An m-round burn of P_{n^2} that wastes nothing is a tiling of the
interval [1, n^2] by sub-paths of odd lengths 2n-1, 2n-3, ..., 1.  Once
the largest tile is pinned with its left endpoint after cell l, the
remaining tiles T = {1, 3, ..., 2n-3} must split into a subset tiling
the left gap of size l and its complement tiling the right gap.  The
generating function

    P(x, y) = prod_{i=1}^{n-1} (1 + x^{2i-1} y) = sum c_{l,r} x^l y^r

counts the r-subsets of T composing l, and

    f(n, l) = sum_r c_{l,r} * r! * (n-1-r)!

counts the complete tilings with the big tile at offset l (each side's
distinct tiles may be arranged in any order).  Offsets with f > 0 are
the only first moves the burner can ever complete, which yields a lower
bound on k*, the smallest reveal quota at which the two-player game
collapses to plain burning.

Everything in this module is exact big-integer arithmetic; there is no
floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import BudgetExceededError


def pack_1d(n: int, sides: Sequence[int]) -> list[tuple[int, int]] | None:
    """Disjoint placement of the given tiles inside [1, n], or None.

    Tiles are sub-intervals; a placement assigns each side a 1-based
    start so that [start, start + side - 1] fits in [1, n] and tiles are
    pairwise disjoint.  Returns placements in the order the sides were
    given.  Backtracking runs over gap compositions, largest tile first.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    tiles = list(sides)
    if any(s < 1 or s % 2 == 0 for s in tiles):
        raise ValueError("sides must be odd positive integers")
    if sum(tiles) > n:
        return None
    order = sorted(range(len(tiles)), key=lambda i: -tiles[i])
    placement: dict[int, int] = {}

    def place(idx: int, gaps: list[tuple[int, int]]) -> bool:
        if idx == len(order):
            return True
        side = tiles[order[idx]]
        remaining = sum(tiles[order[j]] for j in range(idx, len(order)))
        if remaining > sum(length for _, length in gaps):
            return False
        for gi, (start, length) in enumerate(gaps):
            if length < side:
                continue
            for offset in range(length - side + 1):
                left = (start, offset)
                right = (start + offset + side, length - offset - side)
                new_gaps = gaps[:gi] + [g for g in (left, right) if g[1] > 0] + gaps[gi + 1 :]
                placement[order[idx]] = start + offset
                if place(idx + 1, new_gaps):
                    return True
        return False

    if not place(0, [(1, n)]):
        return None
    return [(tiles[i], placement[i]) for i in range(len(tiles))]


@dataclass(frozen=True)
class Pack2DResult:
    """Placements of odd squares in [1, n]^2, with the covering flag.

    is_tiling distinguishes a mere packing (disjoint, possibly leaving
    cells uncovered) from a tiling (disjoint and covering); the volume
    bound only ever needs packing.
    """

    n: int
    placements: tuple[tuple[int, tuple[int, int]], ...]
    is_tiling: bool


def pack_small_2d(n: int, m: int, node_limit: int = 2_000_000) -> Pack2DResult | None:
    """Pack squares of sides 2m-1, 2m-3, ..., 1 into [1, n]^2, or None.

    Backtracking with area pruning, largest square first; corners are
    1-based bottom-left cells.  Raises BudgetExceededError when the
    search exceeds node_limit expansions.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    sides = [2 * k - 1 for k in range(m, 0, -1)]
    area = sum(s * s for s in sides)
    if area > n * n:
        return None

    full_cols = (1 << n) - 1

    def square_mask(side: int, x: int, y: int) -> int:
        rows = ((1 << side) - 1) << (x - 1)
        mask = 0
        for yy in range(y - 1, y - 1 + side):
            mask |= rows << (yy * n)
        return mask

    nodes = 0
    placements: list[tuple[int, tuple[int, int]]] = []

    def place(idx: int, occupied: int, free_cells: int) -> bool:
        nonlocal nodes
        if idx == len(sides):
            return True
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceededError(
                f"pack_small_2d exceeded {node_limit} nodes", nodes=nodes
            )
        side = sides[idx]
        if sum(s * s for s in sides[idx:]) > free_cells:
            return False
        for y in range(1, n - side + 2):
            for x in range(1, n - side + 2):
                mask = square_mask(side, x, y)
                if occupied & mask:
                    continue
                placements.append((side, (x, y)))
                if place(idx + 1, occupied | mask, free_cells - side * side):
                    return True
                placements.pop()
        return False

    if not place(0, 0, n * n):
        return None
    return Pack2DResult(n=n, placements=tuple(placements), is_tiling=area == n * n)


@dataclass(frozen=True)
class GenFunTable:
    """Coefficients c[(l, r)] of prod_{i=1}^{n-1} (1 + x^{2i-1} y)."""

    n: int
    c: dict[tuple[int, int], int]

    def coefficient(self, l: int, r: int) -> int:
        return self.c.get((l, r), 0)

    @property
    def total(self) -> int:
        """Sum of all coefficients; every subset of tiles counted once."""
        return sum(self.c.values())


@lru_cache(maxsize=None)
def genfun(n: int) -> GenFunTable:
    """Expand the subset generating function over tiles {1, 3, ..., 2n-3}.

    The product's upper index is n - 1: the big tile 2n - 1 is placed
    separately, and only the remaining n - 1 tiles are distributed.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > 40:
        raise ValueError("n capped at 40")
    c: dict[tuple[int, int], int] = {(0, 0): 1}
    for i in range(1, n):
        side = 2 * i - 1
        items = list(c.items())
        for (l, r), v in items:
            key = (l + side, r + 1)
            c[key] = c.get(key, 0) + v
    return GenFunTable(n=n, c=c)


def f_value(n: int, l: int) -> int:
    """Number of tilings of [1, n^2] with the big tile starting after cell l.

    Exactly sum_r c_{l,r} * r! * (n-1-r)!: choose the subset tiling the
    left gap, then order each side's distinct tiles freely.
    """
    if not 0 <= l <= (n - 1) ** 2:
        raise ValueError(f"offset {l} outside [0, {(n - 1) ** 2}]")
    table = genfun(n)
    total = 0
    for r in range(n):
        coeff = table.coefficient(l, r)
        if coeff:
            total += coeff * math.factorial(r) * math.factorial(n - 1 - r)
    return total


@dataclass(frozen=True)
class KStarBound:
    """Lower bound data for k* on P_{n^2}.

    lower_bound uses offsets 0..(n-1)^2 (the range the tiling argument
    actually supports); lower_bound_statement_range restricts the sum to
    offsets 0..n and is reported only for comparison.
    """

    n: int
    lower_bound: int
    lower_bound_statement_range: int
    good_offsets: tuple[int, ...]


def k_star_lower_bound(n: int) -> KStarBound:
    """k* > n^2 - #{offsets l with f(n, l) > 0}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    good = tuple(l for l in range((n - 1) ** 2 + 1) if f_value(n, l) > 0)
    good_stmt = sum(1 for l in good if l <= n)
    return KStarBound(
        n=n,
        lower_bound=n * n - len(good),
        lower_bound_statement_range=n * n - good_stmt,
        good_offsets=good,
    )
