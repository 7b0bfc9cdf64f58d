"""Siteswap validity, the board bijections, and the pattern transforms."""

from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, strategies as st

from eulerian_rooks.juggling import (
    MultiplexPattern,
    ball_count,
    complement,
    is_minimal,
    is_valid,
    parse_pattern,
    pattern_text,
    pattern_to_placement,
    placement_to_pattern,
    scale_pattern,
    shift_pattern,
)
from eulerian_rooks.placements import (
    RookPlacement,
    count_by_drops,
    drops,
    enumerate_placements,
)
from tests.test_placements import BOARD_24234, BOARD_MULTIPLEX

PATTERN_24234 = MultiplexPattern(5, 1, ((2,), (4,), (2,), (3,), (4,)))
PATTERN_MULTIPLEX = MultiplexPattern(
    5, 2, ((2, 4), (0, 2), (1, 4), (2, 2), (0, 3))
)


def all_minimal_patterns(n, cap):
    beats = list(combinations_with_replacement(range(n), cap))
    for combo in product(beats, repeat=n):
        t = MultiplexPattern(n, cap, combo)
        if is_valid(t):
            yield t


@st.composite
def valid_patterns(draw, max_n=6, max_cap=3):
    # a sum of cap permutation matrices is always a valid placement, and its
    # pattern is therefore valid and minimal
    n = draw(st.integers(1, max_n))
    cap = draw(st.integers(1, max_cap))
    grid = [[0] * n for _ in range(n)]
    for _ in range(cap):
        perm = draw(st.permutations(range(n)))
        for i, j in enumerate(perm):
            grid[i][j] += 1
    placement = RookPlacement.from_rows(grid, cap)
    return placement_to_pattern(placement)


class TestValidity:
    def test_classic_pattern(self):
        assert is_valid(PATTERN_24234)

    def test_all_zero(self):
        for n, cap in [(1, 1), (3, 2), (5, 3)]:
            assert is_valid(MultiplexPattern.all_zero(n, cap))

    def test_collision(self):
        assert not is_valid(MultiplexPattern(2, 1, ((1,), (0,))))

    def test_multiplex_pattern(self):
        assert is_valid(PATTERN_MULTIPLEX)

    def test_minimality(self):
        assert is_minimal(PATTERN_24234)
        assert not is_minimal(MultiplexPattern(2, 1, ((2,), (2,))))


class TestBallCount:
    def test_classic_pattern(self):
        assert ball_count(PATTERN_24234) == 3

    def test_multiplex_pattern(self):
        assert ball_count(PATTERN_MULTIPLEX) == 4

    def test_all_zero(self):
        assert ball_count(MultiplexPattern.all_zero(4, 2)) == 0

    def test_non_integral_average_rejected(self):
        with pytest.raises(ValueError):
            ball_count(MultiplexPattern(2, 1, ((1,), (0,))))


class TestBijection:
    def test_board_to_classic_pattern(self):
        assert placement_to_pattern(BOARD_24234) == PATTERN_24234

    def test_board_to_multiplex_pattern(self):
        assert placement_to_pattern(BOARD_MULTIPLEX) == PATTERN_MULTIPLEX

    def test_diagonal_board_to_zero_pattern(self):
        p = RookPlacement.diagonal(4, 2)
        assert placement_to_pattern(p) == MultiplexPattern.all_zero(4, 2)

    def test_classic_pattern_to_board(self):
        assert pattern_to_placement(PATTERN_24234) == BOARD_24234

    def test_multiplex_pattern_to_board(self):
        assert pattern_to_placement(PATTERN_MULTIPLEX) == BOARD_MULTIPLEX

    def test_zero_pattern_to_diagonal(self):
        assert pattern_to_placement(
            MultiplexPattern.all_zero(4, 2)
        ) == RookPlacement.diagonal(4, 2)

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            pattern_to_placement(MultiplexPattern(2, 1, ((1,), (0,))))

    def test_rejects_non_minimal(self):
        with pytest.raises(ValueError):
            pattern_to_placement(MultiplexPattern(3, 1, ((3,), (3,), (3,))))

    @pytest.mark.parametrize("n,cap", [(n, c) for c in (1, 2) for n in (1, 2, 3, 4)])
    def test_roundtrip_from_placements(self, n, cap):
        for p in enumerate_placements(n, cap):
            t = placement_to_pattern(p)
            assert is_valid(t) and is_minimal(t)
            assert ball_count(t) == drops(p)
            assert pattern_to_placement(t) == p

    @pytest.mark.parametrize("n,cap", [(n, c) for c in (1, 2) for n in (1, 2, 3, 4)])
    def test_roundtrip_from_patterns(self, n, cap):
        count = 0
        for t in all_minimal_patterns(n, cap):
            assert placement_to_pattern(pattern_to_placement(t)) == t
            count += 1
        assert count == count_by_drops(n, cap).total()

    @pytest.mark.parametrize("n,cap", [(3, 1), (4, 1), (3, 2), (4, 2)])
    def test_ball_histogram_matches_drop_table(self, n, cap):
        hist = [0] * (cap * (n - 1) + 1)
        for t in all_minimal_patterns(n, cap):
            hist[ball_count(t)] += 1
        assert hist == list(count_by_drops(n, cap).counts)


class TestScale:
    def test_identity(self):
        assert scale_pattern(PATTERN_24234, 1) == PATTERN_24234

    def test_classic_pattern_by_two(self):
        scaled = scale_pattern(PATTERN_24234, 2)
        assert is_valid(scaled)
        assert is_minimal(scaled)

    def test_zero_pattern_fixed(self):
        z = MultiplexPattern.all_zero(5, 2)
        assert scale_pattern(z, 4) == z

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            scale_pattern(MultiplexPattern.all_zero(4, 1), 2)

    @given(valid_patterns(), st.integers(1, 30))
    def test_preserves_validity(self, t, alpha):
        from math import gcd

        if gcd(alpha, t.n) != 1:
            alpha = 1
        assert is_valid(scale_pattern(t, alpha))


class TestShift:
    def test_identity(self):
        assert shift_pattern(PATTERN_MULTIPLEX, 0) == PATTERN_MULTIPLEX

    def test_constant_pattern(self):
        t = shift_pattern(MultiplexPattern.all_zero(3, 1), 3)
        assert t.throws == ((3,), (3,), (3,))
        assert is_valid(t)
        assert ball_count(t) == 3

    def test_classic_pattern_up_one(self):
        t = shift_pattern(PATTERN_24234, 1)
        assert pattern_text(t) == "35345"
        assert is_valid(t)

    def test_negative_result_rejected(self):
        with pytest.raises(ValueError):
            shift_pattern(PATTERN_24234, -3)

    @given(valid_patterns(), st.integers(0, 20))
    def test_preserves_validity(self, t, beta):
        assert is_valid(shift_pattern(t, beta))


class TestComplement:
    def test_all_zero(self):
        t = complement(MultiplexPattern.all_zero(4, 2))
        assert t.throws == ((3, 3),) * 4
        assert ball_count(t) == 2 * 3

    def test_classic_pattern(self):
        t = complement(PATTERN_24234)
        assert pattern_text(t) == "01202"
        assert is_valid(t)
        assert ball_count(t) == 1

    def test_rejects_non_minimal(self):
        with pytest.raises(ValueError):
            complement(MultiplexPattern(3, 1, ((3,), (3,), (3,))))

    @pytest.mark.parametrize("n,cap", [(n, c) for c in (1, 2) for n in (1, 2, 3, 4)])
    def test_involution_with_ball_arithmetic(self, n, cap):
        for t in all_minimal_patterns(n, cap):
            ct = complement(t)
            assert is_valid(ct) and is_minimal(ct)
            assert ball_count(ct) + ball_count(t) == cap * (n - 1)
            assert complement(ct) == t


class TestTextGrammar:
    def test_render_single_capacity(self):
        assert pattern_text(PATTERN_24234) == "24234"

    def test_render_multiplex(self):
        assert pattern_text(PATTERN_MULTIPLEX) == "[24][02][14][22][03]"

    def test_render_large_throws(self):
        t = MultiplexPattern(2, 2, ((10, 3), (0, 2)))
        assert pattern_text(t) == "[3,10][0,2]"

    def test_parse_single_capacity(self):
        assert parse_pattern("24234") == PATTERN_24234

    def test_parse_multiplex(self):
        assert parse_pattern("[24][02][14][22][03]") == PATTERN_MULTIPLEX
        assert parse_pattern("[24][02][14][22][03]", cap=2) == PATTERN_MULTIPLEX

    def test_parse_comma_groups(self):
        t = parse_pattern("[3,10][0,2]")
        assert t == MultiplexPattern(2, 2, ((3, 10), (0, 2)))

    def test_parse_single_group_with_capacity_hint(self):
        t = parse_pattern("[12][0]", cap=1)
        assert t.throws == ((12,), (0,))

    def test_parse_rejects_capacity_mismatch(self):
        with pytest.raises(ValueError):
            parse_pattern("[24][02]", cap=3)

    def test_parse_rejects_garbage(self):
        for bad in ["", "2a4", "[24][0", "[24]x[02]", "[2,a]"]:
            with pytest.raises(ValueError):
                parse_pattern(bad)

    def test_parse_rejects_ragged_groups(self):
        with pytest.raises(ValueError):
            parse_pattern("[24][1][02]")

    @given(valid_patterns(max_n=5, max_cap=3))
    def test_text_roundtrip(self, t):
        assert parse_pattern(pattern_text(t), cap=t.cap) == t

    @given(valid_patterns(max_n=4, max_cap=2))
    def test_json_roundtrip(self, t):
        assert MultiplexPattern.from_json_dict(t.to_json_dict()) == t
