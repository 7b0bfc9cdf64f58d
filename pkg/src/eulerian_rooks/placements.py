"""c-rook placements on a square board and their drop statistics.

A placement puts ``cap`` rooks in every row and every column of an n x n
board, with multiple rooks allowed per cell.  A *drop* is a rook strictly
below the main diagonal.  The central quantity is the distribution of
placements by drop count, computed two independent ways: exhaustive
enumeration and a memoized row-by-row dynamic program.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class RookPlacement:
    """An n x n grid of rook multiplicities with all line sums equal to cap.

    Rows and columns are 1-based with row 1 at the top; ``counts`` is stored
    row-major and 0-based internally, so the cell (i, j) of the usual picture
    is ``counts[i-1][j-1]``.
    """

    n: int
    cap: int
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("board size must be >= 1")
        if self.cap < 1:
            raise ValueError("capacity must be >= 1")
        if len(self.counts) != self.n or any(len(r) != self.n for r in self.counts):
            raise ValueError("counts grid must be n x n")
        for row in self.counts:
            for e in row:
                if not 0 <= e <= self.cap:
                    raise ValueError(f"cell multiplicity {e} outside [0, cap]")
        for i, row in enumerate(self.counts):
            if sum(row) != self.cap:
                raise ValueError(f"row {i + 1} sum != cap")
        for j in range(self.n):
            if sum(row[j] for row in self.counts) != self.cap:
                raise ValueError(f"column {j + 1} sum != cap")

    @classmethod
    def from_rows(cls, rows, cap: int) -> RookPlacement:
        grid = tuple(tuple(r) for r in rows)
        return cls(len(grid), cap, grid)

    @classmethod
    def diagonal(cls, n: int, cap: int) -> RookPlacement:
        """All rooks stacked on the main diagonal; the unique 0-drop placement."""
        return cls(n, cap, tuple(
            tuple(cap if i == j else 0 for j in range(n)) for i in range(n)
        ))

    # -- serialization --------------------------------------------------

    def to_text(self) -> str:
        """Digit grid, one row per line.  Requires every multiplicity <= 9."""
        if self.cap > 9:
            raise ValueError("digit-grid text form requires cap <= 9")
        return "\n".join("".join(str(e) for e in row) for row in self.counts)

    @classmethod
    def from_text(cls, text: str) -> RookPlacement:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        grid = tuple(tuple(int(ch) for ch in ln) for ln in lines)
        if not grid:
            raise ValueError("empty grid")
        return cls(len(grid), sum(grid[0]), grid)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "cap": self.cap, "counts": [list(r) for r in self.counts]}

    @classmethod
    def from_json_dict(cls, d: dict) -> RookPlacement:
        return cls(d["n"], d["cap"], tuple(tuple(r) for r in d["counts"]))


@dataclass(frozen=True)
class DropDistribution:
    """Placement counts indexed by drop count k = 0 .. cap*(n-1)."""

    n: int
    cap: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.cap * (self.n - 1) + 1:
            raise ValueError("distribution length must be cap*(n-1) + 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")

    def total(self) -> int:
        return sum(self.counts)

    def is_palindrome(self) -> bool:
        return self.counts == self.counts[::-1]

    def to_json(self) -> str:
        return json.dumps(list(self.counts))

    def to_csv_rows(self) -> list[tuple[int, int, int]]:
        return [(self.n, k, v) for k, v in enumerate(self.counts)]


def cell_label(n: int, i: int, j: int) -> int:
    """Throw height written in cell (i, j): j-i above/on the diagonal, else n+j-i."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("cell indices must lie in 1..n")
    return j - i if j >= i else n + j - i


def drops(p: RookPlacement) -> int:
    """Number of rooks strictly below the main diagonal (with multiplicity)."""
    return sum(
        p.counts[i][j] for i in range(p.n) for j in range(i)
    )


def enumerate_placements(n: int, cap: int) -> Iterator[RookPlacement]:
    """Yield every placement exactly once, backtracking row by row.

    Rows are filled top to bottom with compositions of ``cap`` over the
    columns, in ascending lexicographic order of the composition tuple, so
    the stream order is reproducible.  Intended for desk-scale boards; the
    stream grows like the permanent.
    """
    if n < 1 or cap < 1:
        raise ValueError("need n >= 1 and cap >= 1")
    residual = [cap] * n
    rows: list[tuple[int, ...]] = []

    def row_options() -> list[tuple[int, ...]]:
        # compositions of cap bounded by current residuals, lex ascending
        out: list[tuple[int, ...]] = []
        cur: list[int] = []

        def rec(j: int, left: int) -> None:
            if j == n:
                if left == 0:
                    out.append(tuple(cur))
                return
            if sum(residual[j:]) < left:
                return
            for t in range(min(residual[j], left) + 1):
                cur.append(t)
                rec(j + 1, left - t)
                cur.pop()

        rec(0, cap)
        return out

    def fill(i: int) -> Iterator[RookPlacement]:
        if i == n:
            yield RookPlacement(n, cap, tuple(rows))
            return
        for comp in row_options():
            for j, t in enumerate(comp):
                residual[j] -= t
            rows.append(comp)
            yield from fill(i + 1)
            rows.pop()
            for j, t in enumerate(comp):
                residual[j] += t

    yield from fill(0)


def count_by_drops(n: int, cap: int) -> DropDistribution:
    """Exact drop distribution without enumerating placements.

    Dynamic program over rows: the state is the vector of residual column
    capacities.  Placing the current row adds to the drop tally whatever
    lands in columns left of the diagonal.  Columns already passed by the
    diagonal are interchangeable from here on, so the state is canonicalized
    by sorting that prefix, which collapses the state space enough for the
    desk-scale range (n <= 8 at cap <= 3 runs in about a second).

    This path shares nothing with the transfer-matrix construction, which is
    what makes the two usable as independent cross-checks.
    """
    if n < 1 or cap < 1:
        raise ValueError("need n >= 1 and cap >= 1")
    memo: dict[tuple[int, ...], tuple[int, ...]] = {}

    def ways(row: int, residuals: tuple[int, ...]) -> tuple[int, ...]:
        # counts of completions of rows row..n, indexed by drops they add
        if row > n:
            return (1,)
        key = tuple(sorted(residuals[: row - 1], reverse=True)) + residuals[row - 1:]
        cached = memo.get(key)
        if cached is not None:
            return cached
        res = list(key)
        out = [0] * (cap * (n - row + 1) + 1)

        def distribute(j: int, left: int, below: int) -> None:
            if left == 0:
                for d, v in enumerate(ways(row + 1, tuple(res))):
                    if v:
                        out[d + below] += v
                return
            if j == n or sum(res[j:]) < left:
                return
            for t in range(min(res[j], left) + 1):
                res[j] -= t
                distribute(j + 1, left - t, below + (t if j < row - 1 else 0))
                res[j] += t

        distribute(0, cap, 0)
        result = tuple(out)
        memo[key] = result
        return result

    full = ways(1, (cap,) * n)
    size = cap * (n - 1) + 1
    assert all(v == 0 for v in full[size:])
    return DropDistribution(n, cap, full[:size])


def symmetry_map(p: RookPlacement) -> RookPlacement:
    """Bijection sending k-drop placements to (cap*(n-1) - k)-drop placements.

    Shift every rook one column to the right cyclically, then transpose.
    The inverse is transpose followed by a cyclic shift left.
    """
    n = p.n
    new = tuple(
        tuple(p.counts[j][(i - 1) % n] for j in range(n)) for i in range(n)
    )
    return RookPlacement(n, p.cap, new)


def min_diagonal_multiplicity(p: RookPlacement) -> int:
    """Smallest rook count on any main-diagonal cell."""
    return min(p.counts[i][i] for i in range(p.n))
