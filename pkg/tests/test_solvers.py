"""Exact solvers against brute-force oracles on tiny instances."""

from itertools import combinations

import pytest

from burngames.bounds import classical_bounds
from burngames.engine import play_sequence
from burngames.errors import BudgetExceededError
from burngames.graphs import Graph, eccentricity_stats, from_edges, path, strong_path
from burngames.solvers import (
    burning_number,
    cooling_number,
    liminal_sweep,
    liminal_value,
)

# ---------------------------------------------------------------------------
# brute-force oracles (sets and plain recursion, no masks, no memo sharing)
# ---------------------------------------------------------------------------


def neighbors_closed(g: Graph, s: frozenset) -> frozenset:
    return s | {w for v in s for w in g.adj[v]}


def brute_burning(g: Graph) -> int:
    """Breadth-first search over burned sets, one level per round."""
    full = frozenset(range(g.n))
    states = {frozenset({v}) for v in range(g.n)}
    if full in states:
        return 1
    rounds = 1
    while True:
        rounds += 1
        nxt = set()
        for s in states:
            p = neighbors_closed(g, s)
            if p == full:
                return rounds
            for u in full - p:
                s2 = p | {u}
                if s2 == full:
                    return rounds
                nxt.add(s2)
        states = nxt


def brute_cooling(g: Graph) -> int:
    full = frozenset(range(g.n))
    if g.n == 1:
        return 1
    memo: dict[frozenset, int] = {}

    def value_after(s: frozenset) -> int:
        if s in memo:
            return memo[s]
        p = neighbors_closed(g, s)
        if p == full:
            out = 1
        else:
            out = max(
                1 if p | {u} == full else 1 + value_after(p | {u}) for u in full - p
            )
        memo[s] = out
        return out

    return 1 + max(value_after(frozenset({v})) for v in range(g.n))


def brute_liminal(g: Graph, k: int, reveal_burned: bool = False) -> int:
    """Plain game-tree minimax; enumerates every filler choice explicitly."""
    full = frozenset(range(g.n))

    def reveal_phase(burned: frozenset, revealed: frozenset) -> int:
        unrevealed = full - revealed
        quota = min(k, len(unrevealed))
        if quota == 0:
            return burn_phase(burned, revealed)
        avail = sorted(unrevealed - burned)
        fillers = sorted(unrevealed & burned)
        choices = []
        if reveal_burned:
            for j in range(min(quota, len(fillers)) + 1):
                want = quota - j
                if want > len(avail):
                    continue
                for combo in combinations(avail, want):
                    for fill in combinations(fillers, j):
                        choices.append(frozenset(combo) | frozenset(fill))
        else:
            want = min(quota, len(avail))
            for combo in combinations(avail, want):
                for fill in combinations(fillers, quota - want):
                    choices.append(frozenset(combo) | frozenset(fill))
        return max(burn_phase(burned, revealed | c) for c in choices)

    def burn_phase(burned: frozenset, revealed: frozenset) -> int:
        options = revealed - burned
        if not options:
            return 1 + round_start(burned, revealed)
        return min(
            1 if burned | {v} == full else 1 + round_start(burned | {v}, revealed)
            for v in options
        )

    def round_start(burned: frozenset, revealed: frozenset) -> int:
        p = neighbors_closed(g, burned)
        if p == full:
            return 1
        return reveal_phase(p, revealed)

    return reveal_phase(frozenset(), frozenset())


def replay_liminal_line(g: Graph, line: tuple) -> int:
    """Validate a principal line against the round structure and count rounds."""
    full = set(range(g.n))
    burned: set[int] = set()
    revealed: set[int] = set()
    rounds = 1
    moves = list(line)
    while moves:
        move = moves.pop(0)
        assert move[0] == "reveal"
        assert not (set(move[1]) & revealed)
        revealed |= set(move[1])
        move = moves.pop(0)
        if move[0] == "burn":
            v = move[1]
            assert v in revealed and v not in burned
            burned.add(v)
            if burned == full:
                return rounds
        else:
            assert move[0] == "pass"
            assert not (revealed - burned)
        burned = set(neighbors_closed(g, frozenset(burned)))
        rounds += 1
        if burned == full:
            return rounds
    raise AssertionError("line ended before the graph burned")


def spanning_trees(g: Graph):
    edges = sorted({(v, w) for v in range(g.n) for w in g.adj[v] if v < w})
    for subset in combinations(edges, g.n - 1):
        try:
            yield from_edges(list(subset), n=g.n)
        except Exception:
            continue


# ---------------------------------------------------------------------------
# burning
# ---------------------------------------------------------------------------


class TestBurningNumber:
    def test_examples(self):
        assert burning_number(path(9)).value == 3
        assert burning_number(strong_path(2, 2)).value == 2
        assert burning_number(strong_path(3, 2)).value == 2
        assert burning_number(path(1)).value == 1

    @pytest.mark.parametrize(
        "g",
        [path(n) for n in range(1, 8)]
        + [strong_path(2, 2), strong_path(3, 2), from_edges([(0, 1), (1, 2), (2, 0), (2, 3)])],
        ids=lambda g: g.label,
    )
    def test_matches_brute_force(self, g):
        assert burning_number(g).value == brute_burning(g)

    @pytest.mark.parametrize(
        "g", [path(9), path(16), strong_path(4, 2), strong_path(2, 3)], ids=lambda g: g.label
    )
    def test_principal_line_replays_to_value(self, g):
        result = burning_number(g)
        assert play_sequence(g, result.principal_line) == result.value

    def test_upper_bounds_hold(self):
        zoo = [path(n) for n in (1, 2, 5, 9, 16)] + [
            strong_path(3, 2),
            strong_path(4, 2),
            strong_path(2, 3),
        ]
        for g in zoo:
            radius, _ = eccentricity_stats(g)
            ref = classical_bounds(g.n, radius)
            b = burning_number(g).value
            assert b <= ref.land_bound
            assert b <= ref.radius_bound

    @pytest.mark.parametrize(
        "g",
        [
            strong_path(2, 2),
            from_edges([(0, 1), (1, 2), (2, 3), (3, 0)]),
            from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
        ],
        ids=["K4", "C4", "C5", "paw+tail"],
    )
    def test_spanning_tree_reduction(self, g):
        b = burning_number(g).value
        tree_values = [burning_number(t).value for t in spanning_trees(g)]
        assert b == min(tree_values)

    def test_vertex_budget(self):
        with pytest.raises(BudgetExceededError):
            burning_number(path(65))

    def test_node_budget(self):
        with pytest.raises(BudgetExceededError):
            burning_number(strong_path(8, 2), node_limit=10)


# ---------------------------------------------------------------------------
# cooling
# ---------------------------------------------------------------------------


class TestCoolingNumber:
    def test_examples(self):
        assert cooling_number(path(3)).value == 2
        assert cooling_number(path(1)).value == 1
        assert cooling_number(strong_path(3, 2)).value == 3

    @pytest.mark.parametrize(
        "g",
        [path(n) for n in range(1, 9)] + [strong_path(2, 2), strong_path(3, 2)],
        ids=lambda g: g.label,
    )
    def test_matches_brute_force(self, g):
        assert cooling_number(g).value == brute_cooling(g)

    @pytest.mark.parametrize("g", [path(6), path(9), strong_path(3, 2)], ids=lambda g: g.label)
    def test_principal_line_replays_to_value(self, g):
        result = cooling_number(g)
        assert play_sequence(g, result.principal_line) == result.value

    def test_vertex_budget(self):
        with pytest.raises(BudgetExceededError):
            cooling_number(path(17))


# ---------------------------------------------------------------------------
# liminal
# ---------------------------------------------------------------------------


class TestLiminalValue:
    def test_examples(self):
        assert liminal_value(path(3), 3).value == 2
        assert liminal_value(path(1), 1).value == 1
        assert liminal_value(path(3), 1).value == 2

    def test_reveal_burned_enables_stalling(self):
        # revealing a burned vertex forces the burner to pass, which beats
        # the cooling number; this is exactly why the flag defaults off
        assert liminal_value(path(3), 1, reveal_burned=True).value == 3
        assert liminal_value(path(3), 1).value == cooling_number(path(3)).value

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_brute_force(self, n, k):
        assert liminal_value(path(n), k).value == brute_liminal(path(n), k)

    @pytest.mark.parametrize("k", [1, 2])
    def test_matches_brute_force_reveal_burned(self, k):
        for n in range(1, 5):
            g = path(n)
            assert (
                liminal_value(g, k, reveal_burned=True).value
                == brute_liminal(g, k, reveal_burned=True)
            )

    def test_matches_brute_force_on_k4(self):
        g = strong_path(2, 2)
        for k in (1, 2, 4):
            assert liminal_value(g, k).value == brute_liminal(g, k)

    @pytest.mark.parametrize(
        "g", [path(4), path(6), strong_path(2, 2)], ids=lambda g: g.label
    )
    def test_principal_line_replays_to_value(self, g):
        for k in (1, 2):
            result = liminal_value(g, k)
            assert replay_liminal_line(g, result.principal_line) == result.value

    def test_endpoint_identities_small(self):
        for g in [path(n) for n in range(1, 7)] + [strong_path(2, 2)]:
            assert liminal_value(g, 1).value == cooling_number(g).value
            assert liminal_value(g, g.n).value == burning_number(g).value

    def test_k_exceeding_size(self):
        assert liminal_value(path(1), 2).value == 1
        assert liminal_value(path(3), 9).value == burning_number(path(3)).value

    def test_vertex_budget(self):
        with pytest.raises(BudgetExceededError):
            liminal_value(path(15), 2)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            liminal_value(path(3), 0)


class TestLiminalSweep:
    def test_p4_sweep(self):
        result = liminal_sweep(path(4), 4)
        assert result.values == ((1, 3), (2, 3), (3, 2), (4, 2))
        assert result.k_star == 3
        assert result.k_prime == 2
        assert result.burning == 2 and result.cooling == 3

    def test_p1_sweep(self):
        result = liminal_sweep(path(1), 2)
        assert result.values == ((1, 1), (2, 1))

    def test_p3_endpoints(self):
        result = liminal_sweep(path(3), 3)
        assert result.values[0][1] == result.cooling == 2
        assert result.values[-1][1] == result.burning == 2

    @pytest.mark.parametrize("n", range(1, 8))
    def test_monotone_non_increasing(self, n):
        values = [v for _, v in liminal_sweep(path(n), n).values]
        assert all(a >= b for a, b in zip(values, values[1:]))
