"""Multiplex siteswap patterns and their correspondence with rook placements.

A pattern of period n with hand capacity cap throws a multiset of cap
heights at every beat.  It is *valid* when no landing time receives more
than cap balls, i.e. every residue mod n occurs exactly cap times among
(throw + beat index).  Minimal patterns (all throws in [0, n-1]) are in
bijection with the cap-rook placements of the board module, and the ball
count of a pattern equals the drop count of its placement.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .placements import RookPlacement, cell_label


@dataclass(frozen=True)
class MultiplexPattern:
    """Period-n sequence of throw multisets, each of exactly cap heights.

    Beat multisets are stored sorted ascending, so equal patterns compare
    equal structurally.
    """

    n: int
    cap: int
    throws: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("period must be >= 1")
        if self.cap < 1:
            raise ValueError("capacity must be >= 1")
        if len(self.throws) != self.n:
            raise ValueError("need one throw multiset per beat")
        canon = []
        for beat in self.throws:
            if len(beat) != self.cap:
                raise ValueError("each beat must carry exactly cap throws")
            for t in beat:
                if not isinstance(t, int) or t < 0:
                    raise ValueError(f"throw heights are non-negative ints, got {t!r}")
            canon.append(tuple(sorted(beat)))
        object.__setattr__(self, "throws", tuple(canon))

    @classmethod
    def all_zero(cls, n: int, cap: int) -> MultiplexPattern:
        return cls(n, cap, ((0,) * cap,) * n)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "cap": self.cap, "throws": [list(b) for b in self.throws]}

    @classmethod
    def from_json_dict(cls, d: dict) -> MultiplexPattern:
        return cls(d["n"], d["cap"], tuple(tuple(b) for b in d["throws"]))

    def __str__(self) -> str:
        return pattern_text(self)


def is_valid(t: MultiplexPattern) -> bool:
    """Landing-time check: each residue mod n hit exactly cap times."""
    landings = Counter(
        (h + i) % t.n for i, beat in enumerate(t.throws, start=1) for h in beat
    )
    return all(landings[r] == t.cap for r in range(t.n))


def is_minimal(t: MultiplexPattern) -> bool:
    """All throws within [0, n-1]."""
    return all(h < t.n for beat in t.throws for h in beat)


def ball_count(t: MultiplexPattern) -> int:
    """Average throw height per beat; integral for every valid pattern."""
    total = sum(h for beat in t.throws for h in beat)
    if total % t.n:
        raise ValueError("throw sum not divisible by period: pattern is invalid")
    return total // t.n


def placement_to_pattern(p: RookPlacement) -> MultiplexPattern:
    """Read each row's covered cell labels as that beat's throw multiset."""
    beats = []
    for i in range(1, p.n + 1):
        beat: list[int] = []
        for j in range(1, p.n + 1):
            mult = p.counts[i - 1][j - 1]
            if mult:
                beat.extend([cell_label(p.n, i, j)] * mult)
        beats.append(tuple(beat))
    return MultiplexPattern(p.n, p.cap, tuple(beats))


def pattern_to_placement(t: MultiplexPattern) -> RookPlacement:
    """Inverse of placement_to_pattern; requires a valid minimal pattern."""
    if not is_minimal(t):
        raise ValueError("only minimal patterns correspond to placements")
    if not is_valid(t):
        raise ValueError("pattern fails the landing-time check")
    n = t.n
    grid = [[0] * n for _ in range(n)]
    for i, beat in enumerate(t.throws, start=1):
        for h in beat:
            j = i + h if i + h <= n else i + h - n
            grid[i - 1][j - 1] += 1
    return RookPlacement(n, t.cap, tuple(tuple(r) for r in grid))


def scale_pattern(t: MultiplexPattern, alpha: int) -> MultiplexPattern:
    """Multiply throws by alpha mod n and permute beats by alpha^(-1).

    Requires gcd(alpha, n) = 1.  Validity is preserved; throws are reduced
    into [0, n-1], so the output is minimal even when the input is not.
    """
    n = t.n
    if gcd(alpha, n) != 1:
        raise ValueError("alpha must be invertible mod the period")
    if not is_valid(t):
        raise ValueError("input pattern is invalid")
    ainv = pow(alpha, -1, n)
    beats = []
    for i in range(1, n + 1):
        src = (i * ainv - 1) % n  # 0-based index of beat i * alpha^(-1)
        beats.append(tuple((alpha * h) % n for h in t.throws[src]))
    return MultiplexPattern(n, t.cap, tuple(beats))


def shift_pattern(t: MultiplexPattern, beta: int) -> MultiplexPattern:
    """Add beta to every throw.  The result can be non-minimal."""
    if not is_valid(t):
        raise ValueError("input pattern is invalid")
    if beta < 0 and any(h + beta < 0 for beat in t.throws for h in beat):
        raise ValueError("shift would produce a negative throw")
    return MultiplexPattern(
        t.n, t.cap, tuple(tuple(h + beta for h in beat) for beat in t.throws)
    )


def complement(t: MultiplexPattern) -> MultiplexPattern:
    """Reverse the beats and replace every throw h by n-1-h.

    An involution on valid minimal patterns that exchanges b balls with
    cap*(n-1) - b balls.
    """
    if not is_minimal(t):
        raise ValueError("complement is defined on minimal patterns")
    if not is_valid(t):
        raise ValueError("input pattern is invalid")
    n = t.n
    beats = tuple(
        tuple(n - 1 - h for h in t.throws[n - i]) for i in range(1, n + 1)
    )
    return MultiplexPattern(n, t.cap, beats)


# -- text grammar -----------------------------------------------------------
#
# capacity 1, throws <= 9:   digits run together          24234
# capacity > 1, throws <= 9: one digit group per beat     [24][02][14][22][03]
# any throw >= 10:           comma-separated groups       [10,3][0,2]


def pattern_text(t: MultiplexPattern) -> str:
    if any(h > 9 for beat in t.throws for h in beat):
        return "".join("[" + ",".join(str(h) for h in beat) + "]" for beat in t.throws)
    if t.cap == 1:
        return "".join(str(beat[0]) for beat in t.throws)
    return "".join("[" + "".join(str(h) for h in beat) + "]" for beat in t.throws)


def parse_pattern(text: str, cap: int | None = None) -> MultiplexPattern:
    """Parse the grammar above.

    ``cap`` disambiguates bracketed groups without commas: with cap = 1 a
    group like ``[24]`` is the single throw 24, otherwise its characters are
    separate single-digit throws.  Raises ValueError on malformed input or a
    capacity mismatch.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty pattern")
    beats: list[tuple[int, ...]] = []
    if text.startswith("["):
        for group in _bracket_groups(text):
            if "," in group:
                parts = [s.strip() for s in group.split(",")]
            elif cap == 1:
                parts = [group]
            else:
                parts = list(group)
            if not all(s.isdigit() for s in parts):
                raise ValueError(f"bad throw group {group!r}")
            beats.append(tuple(int(s) for s in parts))
    else:
        if not text.isdigit():
            raise ValueError(f"bad pattern text {text!r}")
        beats = [(int(ch),) for ch in text]
    sizes = {len(b) for b in beats}
    if len(sizes) != 1:
        raise ValueError("beats carry differing numbers of throws")
    found_cap = sizes.pop()
    if cap is not None and cap != found_cap:
        raise ValueError(f"pattern has capacity {found_cap}, expected {cap}")
    return MultiplexPattern(len(beats), found_cap, tuple(beats))


def _bracket_groups(text: str) -> list[str]:
    groups = []
    pos = 0
    while pos < len(text):
        if text[pos] != "[":
            raise ValueError("expected '[' between throw groups")
        end = text.find("]", pos)
        if end < 0:
            raise ValueError("unterminated throw group")
        groups.append(text[pos + 1:end])
        pos = end + 1
    return groups
