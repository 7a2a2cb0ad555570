"""Ground-truth oracles: exact burning, cooling and liminal game values.

burning_number runs iterative deepening on the round count m.  Finishing
in m rounds is equivalent to covering the vertex set with balls of radii
m-1, m-2, ..., 0: if a chosen center is already burned when its round
comes, its ball is contained in the ball of whichever earlier source
burned it, so any unburned vertex can be substituted without losing
coverage.  The cover search assigns radii to centers, always branching
on the lowest-index uncovered vertex (every way some remaining radius
could cover it), with a ball-size capacity prune and a memo of failed
(uncovered, radii) states.  Because the covering formulation ignores the
unburned-at-placement rule, the final cover is converted back into a
legal source sequence and re-validated by replay before it is returned.

cooling_number and the liminal minimax are memoized searches over
bitmask states.  The liminal game value depends only on (burned,
revealed, phase), not on the round number, so transposition tables are
keyed on the packed state.  Saboteur reveal moves enumerate subsets of
the unrevealed unburned vertices; when the quota exceeds what is
available (or burned reveals are explicitly allowed), already-burned
vertices are interchangeable wasted picks, so only the lowest-indexed
ones are generated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .engine import play_sequence, spread
from .errors import BudgetExceededError
from .graphs import Graph, bits, mask_of


@dataclass(frozen=True)
class SolveResult:
    """Value of a game under optimal play, with a certificate line."""

    value: int
    kind: str
    nodes_expanded: int
    principal_line: tuple = ()
    k: int | None = None


class _Budget:
    """Node and wall-clock budget shared by one solve."""

    __slots__ = ("node_limit", "deadline", "nodes")

    def __init__(self, node_limit: int | None, time_limit: float | None):
        self.node_limit = node_limit
        self.deadline = time.monotonic() + time_limit if time_limit else None
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceededError(
                f"node limit {self.node_limit} exhausted", nodes=self.nodes
            )
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError("time limit exhausted", nodes=self.nodes)


def _require_size(g: Graph, max_vertices: int, what: str) -> None:
    if g.n > max_vertices:
        raise BudgetExceededError(
            f"{what} is exact only up to {max_vertices} vertices; "
            f"{g.label} has {g.n} (raise max_vertices to force it)"
        )


def burning_number(
    g: Graph,
    *,
    max_vertices: int = 64,
    node_limit: int | None = None,
    time_limit: float | None = None,
) -> SolveResult:
    """Minimum number of rounds needed to burn the whole graph."""
    _require_size(g, max_vertices, "burning_number")
    n = g.n
    if n == 1:
        return SolveResult(value=1, kind="burning", nodes_expanded=0, principal_line=(0,))
    budget = _Budget(node_limit, time_limit)
    dist = g.distance_matrix
    radius = min(max(row) for row in dist)
    full = g.full_mask

    # ball_masks[r][v]; grown one propagation step at a time
    ball_masks: list[list[int]] = [[1 << v for v in range(n)]]
    max_ball = [1]

    def ensure_radius(r: int) -> None:
        while len(ball_masks) <= r:
            prev = ball_masks[-1]
            row = [spread(g, m) for m in prev]
            ball_masks.append(row)
            max_ball.append(max(m.bit_count() for m in row))

    def search(m: int) -> dict[int, int] | None:
        """Assign centers to radii m-1..0 covering V, or None."""
        ensure_radius(m - 1)
        failed: set[tuple[int, int]] = set()

        def go(uncovered: int, avail: int, chosen: dict[int, int]) -> bool:
            # avail is a bitmask of still-unassigned radii
            budget.tick()
            key = (uncovered, avail)
            if key in failed:
                return False
            capacity = 0
            for r in bits(avail):
                capacity += max_ball[r]
            if capacity < uncovered.bit_count():
                failed.add(key)
                return False
            u = (uncovered & -uncovered).bit_length() - 1
            options: list[tuple[int, int, int]] = []
            for r in bits(avail):
                row = ball_masks[r]
                for c in range(n):
                    if dist[u][c] <= r:
                        options.append((row[c] & uncovered, r, c))
            options.sort(key=lambda t: (-t[0].bit_count(), -t[1], t[2]))
            for gain, r, c in options:
                chosen[r] = c
                rest = uncovered & ~ball_masks[r][c]
                if rest == 0 or go(rest, avail & ~(1 << r), chosen):
                    return True
                del chosen[r]
            failed.add(key)
            return False

        chosen: dict[int, int] = {}
        avail = (1 << m) - 1  # radii 0..m-1
        if go(full, avail, chosen):
            return chosen
        return None

    # Smallest m whose total ball capacity can reach n at all.
    m = 1
    ensure_radius(0)
    while True:
        ensure_radius(m - 1)
        if sum(max_ball[:m]) >= n:
            break
        m += 1
    while m <= radius + 1:
        chosen = search(m)
        if chosen is not None:
            sequence = _cover_to_sequence(g, chosen, m)
            rounds = play_sequence(g, sequence)
            if rounds != m:  # pragma: no cover - internal consistency
                raise AssertionError(f"cover for m={m} replayed to {rounds}")
            return SolveResult(
                value=m,
                kind="burning",
                nodes_expanded=budget.nodes,
                principal_line=tuple(sequence),
            )
        m += 1
    raise AssertionError("unreachable: a radius+1 cover always exists")  # pragma: no cover


def _cover_to_sequence(g: Graph, chosen: dict[int, int], m: int) -> list[int]:
    """Turn a radius->center cover into a legal source sequence.

    The center scheduled for round i gets radius m - i; if it is already
    burned when its round comes (or the radius was never assigned), the
    lowest-index unburned vertex is substituted, which can only add
    coverage.
    """
    burned = 0
    full = g.full_mask
    sequence: list[int] = []
    for round_no in range(1, m + 1):
        if round_no > 1:
            burned = spread(g, burned)
            if burned == full:
                break
        v = chosen.get(m - round_no)
        if v is None or burned >> v & 1:
            v = ((~burned & full) & -(~burned & full)).bit_length() - 1
        sequence.append(v)
        burned |= 1 << v
        if burned == full:
            break
    return sequence


def cooling_number(
    g: Graph,
    *,
    max_vertices: int = 16,
    node_limit: int | None = None,
    time_limit: float | None = None,
) -> SolveResult:
    """Maximum number of rounds the single player can stretch the game to.

    The player must place on an unburned vertex every round while one
    exists; exhaustive memoized search over burned-set states.
    """
    _require_size(g, max_vertices, "cooling_number")
    n = g.n
    if n == 1:
        return SolveResult(value=1, kind="cooling", nodes_expanded=0, principal_line=(0,))
    budget = _Budget(node_limit, time_limit)
    full = g.full_mask
    memo: dict[int, int] = {}

    def after_placement(mask: int) -> int:
        """Rounds remaining counting the next round; mask is not full."""
        cached = memo.get(mask)
        if cached is not None:
            return cached
        budget.tick()
        nxt = spread(g, mask)
        if nxt == full:
            value = 1
        else:
            best = 0
            for v in bits(full & ~nxt):
                m2 = nxt | 1 << v
                best = max(best, 1 if m2 == full else 1 + after_placement(m2))
            value = best
        memo[mask] = value
        return value

    value = 1 + max(after_placement(1 << v) for v in range(n))
    line = _cooling_line(g, after_placement, value)
    return SolveResult(
        value=value,
        kind="cooling",
        nodes_expanded=budget.nodes,
        principal_line=tuple(line),
    )


def _cooling_line(g: Graph, after_placement, value: int) -> list[int]:
    """Reconstruct a lowest-index optimal cooling sequence from the memo."""
    full = g.full_mask
    best_v = min(v for v in range(g.n) if 1 + after_placement(1 << v) == value)
    line = [best_v]
    mask = 1 << best_v
    while True:
        target = after_placement(mask)
        nxt = spread(g, mask)
        if nxt == full:
            break
        for v in bits(full & ~nxt):
            m2 = nxt | 1 << v
            child = 1 if m2 == full else 1 + after_placement(m2)
            if child == target:
                line.append(v)
                mask = m2
                break
        if mask == full:
            break
    return line


class LiminalSolver:
    """Memoized minimax for the k-liminal game on one graph.

    Round structure: round 1 reveals min(k, n) vertices and burns one of
    them; every later round propagates, then reveals min(k, #unrevealed)
    vertices, then burns one revealed unburned vertex if any exists
    (otherwise the burner passes).  The revealer maximizes the completion
    round, the burner minimizes it.

    With reveal_burned=False (the default) the reveal must use unburned
    vertices whenever enough are unrevealed; burned vertices are only
    filler once the unburned pool runs dry.  Allowing burned reveals
    hands the revealer a stalling move (burn nothing this round), which
    lifts the k=1 value above the cooling number, so it is opt-in.
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        *,
        reveal_burned: bool = False,
        max_vertices: int = 14,
        node_limit: int | None = None,
        time_limit: float | None = None,
    ):
        if k < 1:
            raise ValueError("k must be >= 1")
        _require_size(g, max_vertices, "liminal_value")
        self.g = g
        self.k = k
        self.reveal_burned = reveal_burned
        self.full = g.full_mask
        self.n = g.n
        self._budget = _Budget(node_limit, time_limit)
        self._reveal_memo: dict[int, int] = {}
        self._burn_memo: dict[int, int] = {}

    # -- state values ------------------------------------------------

    def value(self) -> int:
        """Game value from the initial position."""
        return self._reveal(0, 0)

    @property
    def nodes_expanded(self) -> int:
        return self._budget.nodes

    def reveal_moves(self, burned: int, revealed: int) -> list[int]:
        """Legal reveal masks, canonical burned filler only."""
        unrevealed = self.full & ~revealed
        quota = min(self.k, unrevealed.bit_count())
        if quota == 0:
            return [0]
        avail = unrevealed & ~burned
        burned_unrev = unrevealed & burned
        moves: list[int] = []
        if self.reveal_burned:
            max_filler = min(quota, burned_unrev.bit_count())
            for filler_count in range(max_filler + 1):
                want = quota - filler_count
                if want > avail.bit_count():
                    continue
                filler = _lowest_bits(burned_unrev, filler_count)
                if want == 0:
                    moves.append(filler)
                else:
                    for combo in combinations(list(bits(avail)), want):
                        moves.append(filler | mask_of(combo))
        else:
            want = min(quota, avail.bit_count())
            filler = _lowest_bits(burned_unrev, quota - want)
            if want == 0:
                moves.append(filler)
            else:
                for combo in combinations(list(bits(avail)), want):
                    moves.append(filler | mask_of(combo))
        return moves

    def _reveal(self, burned: int, revealed: int) -> int:
        """Rounds remaining (counting the current one); revealer to move."""
        key = (burned << self.n) | revealed
        cached = self._reveal_memo.get(key)
        if cached is not None:
            return cached
        self._budget.tick()
        best = 0
        for move in self.reveal_moves(burned, revealed):
            best = max(best, self._burn(burned, revealed | move))
        self._reveal_memo[key] = best
        return best

    def _burn(self, burned: int, revealed: int) -> int:
        """Rounds remaining (counting the current one); burner to move."""
        key = (burned << self.n) | revealed
        cached = self._burn_memo.get(key)
        if cached is not None:
            return cached
        self._budget.tick()
        options = revealed & ~burned
        if options == 0:
            value = 1 + self._round_start(burned, revealed)
        else:
            value = None
            for v in bits(options):
                nb = burned | 1 << v
                if nb == self.full:
                    value = 1
                    break
                child = 1 + self._round_start(nb, revealed)
                if value is None or child < value:
                    value = child
                    if value == 1:
                        break
        self._burn_memo[key] = value
        return value

    def _round_start(self, burned: int, revealed: int) -> int:
        """Rounds remaining counting the upcoming round; burned != full."""
        nxt = spread(self.g, burned)
        if nxt == self.full:
            return 1
        return self._reveal(nxt, revealed)

    def state_value(self, burned: int, revealed: int, phase: str) -> int:
        """Rounds remaining (counting the current one) from a mid-game state.

        phase is "reveal" (revealer to move, propagation already applied)
        or "burn" (burner to move, reveal already applied).
        """
        if phase == "reveal":
            return self._reveal(burned, revealed)
        if phase == "burn":
            return self._burn(burned, revealed)
        raise ValueError(f"unknown phase {phase!r}")

    # -- principal moves ----------------------------------------------

    def best_reveal(self, burned: int, revealed: int) -> int:
        """Optimal reveal mask, smallest vertex tuple on ties."""
        target = self._reveal(burned, revealed)
        best = None
        for move in self.reveal_moves(burned, revealed):
            if self._burn(burned, revealed | move) == target:
                key = tuple(bits(move))
                if best is None or key < best[0]:
                    best = (key, move)
        assert best is not None
        return best[1]

    def best_burn(self, burned: int, revealed: int) -> int | None:
        """Optimal vertex to burn, lowest index on ties; None means pass."""
        options = revealed & ~burned
        if options == 0:
            return None
        target = self._burn(burned, revealed)
        for v in bits(options):
            nb = burned | 1 << v
            child = 1 if nb == self.full else 1 + self._round_start(nb, revealed)
            if child == target:
                return v
        raise AssertionError("no burn move achieves the memoized value")

    def principal_line(self) -> tuple:
        """Optimal play transcript as (actor move) tuples."""
        line: list[tuple] = []
        burned, revealed = 0, 0
        while True:
            move = self.best_reveal(burned, revealed)
            line.append(("reveal", tuple(bits(move))))
            revealed |= move
            v = self.best_burn(burned, revealed)
            if v is None:
                line.append(("pass",))
            else:
                line.append(("burn", v))
                burned |= 1 << v
                if burned == self.full:
                    return tuple(line)
            burned = spread(self.g, burned)
            if burned == self.full:
                return tuple(line)


def _lowest_bits(mask: int, count: int) -> int:
    out = 0
    for _ in range(count):
        low = mask & -mask
        out |= low
        mask ^= low
    return out


def liminal_value(
    g: Graph,
    k: int,
    *,
    reveal_burned: bool = False,
    max_vertices: int = 14,
    node_limit: int | None = None,
    time_limit: float | None = None,
) -> SolveResult:
    """Minimax value of the k-liminal game, with a principal line."""
    solver = LiminalSolver(
        g,
        k,
        reveal_burned=reveal_burned,
        max_vertices=max_vertices,
        node_limit=node_limit,
        time_limit=time_limit,
    )
    value = solver.value()
    return SolveResult(
        value=value,
        kind="liminal",
        nodes_expanded=solver.nodes_expanded,
        principal_line=solver.principal_line(),
        k=k,
    )


@dataclass(frozen=True)
class SweepResult:
    """Liminal values for k = 1..k_max plus the derived thresholds.

    k_star is the smallest k whose value equals the burning number,
    k_prime the largest k whose value equals the cooling number; either
    is None when the sweep does not reach it.
    """

    values: tuple[tuple[int, int], ...]
    k_star: int | None
    k_prime: int | None
    burning: int
    cooling: int


def liminal_sweep(
    g: Graph,
    k_max: int,
    *,
    reveal_burned: bool = False,
    max_vertices: int = 14,
    node_limit: int | None = None,
    time_limit: float | None = None,
) -> SweepResult:
    """Liminal values for every k in 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    values = []
    for k in range(1, k_max + 1):
        result = liminal_value(
            g,
            k,
            reveal_burned=reveal_burned,
            max_vertices=max_vertices,
            node_limit=node_limit,
            time_limit=time_limit,
        )
        values.append((k, result.value))
    b = burning_number(g, node_limit=node_limit, time_limit=time_limit).value
    cl = cooling_number(g, node_limit=node_limit, time_limit=time_limit).value
    k_star = next((k for k, v in values if v == b), None)
    k_prime = max((k for k, v in values if v == cl), default=None)
    return SweepResult(values=tuple(values), k_star=k_star, k_prime=k_prime, burning=b, cooling=cl)
