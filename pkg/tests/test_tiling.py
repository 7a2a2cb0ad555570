"""Odd-tile packing, the subset generating function, and the k* bound."""

import math
from itertools import combinations

import pytest

from burngames.tiling import (
    f_value,
    genfun,
    k_star_lower_bound,
    pack_1d,
    pack_small_2d,
)


def enumerate_1d_packings(n: int, sides: list[int]) -> list[dict[int, int]]:
    """Brute-force all disjoint placements of the given tiles in [1, n]."""
    out = []

    def go(idx: int, occupied: set[int], chosen: dict[int, int]):
        if idx == len(sides):
            out.append(dict(chosen))
            return
        side = sides[idx]
        for start in range(1, n - side + 2):
            cells = set(range(start, start + side))
            if cells & occupied:
                continue
            chosen[idx] = start
            go(idx + 1, occupied | cells, chosen)
            del chosen[idx]

    go(0, set(), {})
    return out


class TestPack1D:
    def test_p9_tiling(self):
        placement = pack_1d(9, [5, 3, 1])
        assert placement is not None
        cells = set()
        for side, start in placement:
            tile = set(range(start, start + side))
            assert not tile & cells
            assert tile <= set(range(1, 10))
            cells |= tile
        assert cells == set(range(1, 10))

    def test_two_placements_for_n4(self):
        assert pack_1d(4, [3, 1]) is not None
        assert len(enumerate_1d_packings(4, [3, 1])) == 2

    def test_oversized_tile(self):
        assert pack_1d(2, [3]) is None

    @pytest.mark.parametrize("m", range(1, 31))
    def test_square_identity(self, m):
        sides = [2 * j - 1 for j in range(m, 0, -1)]
        assert pack_1d(m * m, sides) is not None
        if m > 1:
            assert pack_1d(m * m - 1, sides) is None

    def test_even_side_rejected(self):
        with pytest.raises(ValueError):
            pack_1d(5, [2])

    def test_matches_enumeration(self):
        for n in range(1, 11):
            for sides in ([1], [3], [3, 1], [5, 1], [5, 3, 1]):
                exists = pack_1d(n, list(sides)) is not None
                assert exists == bool(enumerate_1d_packings(n, list(sides)))


class TestPackSmall2D:
    def test_area_pruned(self):
        assert pack_small_2d(2, 2) is None  # tiles 3,1 have area 10 > 4

    def test_trivial(self):
        result = pack_small_2d(3, 1)
        assert result is not None and result.is_tiling is False

    def test_n4_m2_packs_without_tiling(self):
        result = pack_small_2d(4, 2)
        assert result is not None
        assert result.is_tiling is False  # 16 - 10 = 6 cells uncovered
        cells: set[tuple[int, int]] = set()
        for side, (x, y) in result.placements:
            tile = {(x + i, y + j) for i in range(side) for j in range(side)}
            assert not tile & cells
            assert all(1 <= a <= 4 and 1 <= b <= 4 for a, b in tile)
            cells |= tile
        assert len(cells) == 10

    def test_area_fit_does_not_imply_pack(self):
        # tiles 5,3,1 have area 35 <= 36 but the 3x3 cannot fit next to the 5x5
        assert pack_small_2d(6, 3) is None

    def test_unit_tiling(self):
        result = pack_small_2d(1, 1)
        assert result is not None and result.is_tiling is True


class TestGenFun:
    def test_n2_table(self):
        assert genfun(2).c == {(0, 0): 1, (1, 1): 1}

    def test_n3_table(self):
        assert genfun(3).c == {(0, 0): 1, (1, 1): 1, (3, 1): 1, (4, 2): 1}

    @pytest.mark.parametrize("n", range(2, 13))
    def test_empty_subset(self, n):
        assert genfun(n).coefficient(0, 0) == 1

    @pytest.mark.parametrize("n", range(2, 13))
    def test_total_counts_subsets(self, n):
        assert genfun(n).total == 2 ** (n - 1)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_subset_sum_consistency(self, n):
        tiles = [2 * i - 1 for i in range(1, n)]
        table = genfun(n)
        for r in range(n):
            reachable = {sum(c) for c in combinations(tiles, r)}
            for l in range((n - 1) ** 2 + 1):
                assert (table.coefficient(l, r) > 0) == (l in reachable)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            genfun(1)


def brute_force_tilings(n: int, offset: int) -> int:
    """Count tilings of [1, n^2] minus the big tile by {1, 3, ..., 2n-3}.

    The big tile occupies [offset+1, offset+2n-1]; remaining cells must
    be exactly covered.  Pure geometric enumeration, fills the leftmost
    empty cell first so each tiling is counted once.
    """
    total = n * n
    big = set(range(offset + 1, offset + 2 * n))
    free = [c for c in range(1, total + 1) if c not in big]
    tiles = [2 * i - 1 for i in range(1, n)]

    def count(free_cells: tuple[int, ...], remaining: tuple[int, ...]) -> int:
        if not remaining:
            return 0 if free_cells else 1
        if not free_cells:
            return 0
        first = free_cells[0]
        free_set = set(free_cells)
        found = 0
        for i, t in enumerate(remaining):
            span = set(range(first, first + t))
            if span <= free_set:
                rest = tuple(c for c in free_cells if c not in span)
                found += count(rest, remaining[:i] + remaining[i + 1 :])
        return found

    return count(tuple(free), tuple(tiles))


class TestFValue:
    def test_n2_values(self):
        assert f_value(2, 0) == 1
        assert f_value(2, 1) == 1

    def test_n3_values(self):
        assert f_value(3, 0) == 2
        assert f_value(3, 2) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            f_value(3, 5)
        with pytest.raises(ValueError):
            f_value(3, -1)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_matches_geometric_enumeration(self, n):
        for offset in range((n - 1) ** 2 + 1):
            assert f_value(n, offset) == brute_force_tilings(n, offset)

    def test_factorial_structure(self):
        # f(n, 0): only the empty left set works, so (n-1)! right orderings
        for n in range(2, 8):
            assert f_value(n, 0) == math.factorial(n - 1)


class TestKStarBound:
    def test_n2(self):
        result = k_star_lower_bound(2)
        assert result.lower_bound == 2
        assert result.good_offsets == (0, 1)
        assert result.lower_bound_statement_range == 2

    def test_n3(self):
        result = k_star_lower_bound(3)
        assert result.lower_bound == 5
        assert result.good_offsets == (0, 1, 3, 4)

    def test_rejects_n1(self):
        with pytest.raises(ValueError):
            k_star_lower_bound(1)
