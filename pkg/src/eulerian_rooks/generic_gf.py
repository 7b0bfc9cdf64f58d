"""Transfer-matrix synthesis of the drop-count generating functions.

For a fixed number k of below-diagonal rooks, the boards of growing size n
that contain a given *relative* configuration of those k rooks can be filled
row by row from the bottom; the bookkeeping between rows only needs the
partition of the *excess* (total residual capacity of the columns still able
to take rooks).  Each relative configuration therefore contributes a product
of geometric matrix sums, i.e. a rational function of the size marker x, and
the full counting series for k drops is the finite sum over all relative
configurations.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .algebra import (
    ONE,
    PolyMatrix,
    Polynomial,
    RationalFunction,
    X,
    ZERO,
)
from .placements import count_by_drops

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def excess_states(p: int, cap: int) -> tuple[Partition, ...]:
    """Partitions of p with parts <= cap, largest part first (reverse-lex).

    This fixed order indexes every transition matrix, so it must never
    change: [2] comes before [1, 1].
    """
    if p < 0:
        raise ValueError("excess must be >= 0")
    if cap < 1:
        raise ValueError("capacity must be >= 1")

    def rec(left: int, maxpart: int) -> Iterator[Partition]:
        if left == 0:
            yield ()
            return
        for first in range(min(left, maxpart), 0, -1):
            for rest in rec(left - first, first):
                yield (first,) + rest

    return tuple(rec(p, cap))


@dataclass(frozen=True)
class TransitionMatrix:
    """Counts of row fillings that turn one excess partition into another.

    ``entries[i][j]`` counts the fillings that lead from ``from_states[j]``
    to ``to_states[i]`` (targets index the rows, as in a matrix acting on
    column vectors from the left).
    """

    from_states: tuple[Partition, ...]
    to_states: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.to_states):
            raise ValueError("one entry row per target state required")
        for row in self.entries:
            if len(row) != len(self.from_states):
                raise ValueError("one entry column per source state required")
            if any(e < 0 for e in row):
                raise ValueError("entries are counts, must be >= 0")

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


def _distribute(columns: tuple[int, ...], rooks: int) -> Counter[Partition]:
    """Ways to drop ``rooks`` rooks into distinct columns of given residuals.

    Returns a Counter keyed by the partition of positive residuals left
    over.  Columns with equal residual are distinct objects: distributions
    differing on them are counted separately.
    """
    results: Counter[Partition] = Counter()
    ncols = len(columns)
    suffix = [0] * (ncols + 1)
    for i in range(ncols - 1, -1, -1):
        suffix[i] = suffix[i + 1] + columns[i]
    leftovers: list[int] = []

    def rec(idx: int, left: int) -> None:
        if idx == ncols:
            if left == 0:
                results[tuple(sorted((r for r in leftovers if r), reverse=True))] += 1
            return
        if suffix[idx] < left:
            return
        for take in range(min(columns[idx], left) + 1):
            leftovers.append(columns[idx] - take)
            rec(idx + 1, left - take)
            leftovers.pop()

    rec(0, rooks)
    return results


@lru_cache(maxsize=None)
def transition_matrix(cap: int, sigma: int, tau: int, p: int) -> TransitionMatrix:
    """One step up the diagonal: excess p, sigma rooks already in the new
    row, tau rooks already in the new column.

    The row still takes cap - sigma rooks, spread over the old columns and
    the new one (whose residual starts at cap - tau); the excess moves from
    p to p + sigma - tau.
    """
    if not 0 <= sigma <= cap:
        raise ValueError("sigma must lie in [0, cap]")
    if not 0 <= tau <= cap:
        raise ValueError("tau must lie in [0, cap]")
    if p < 0 or p + sigma - tau < 0:
        raise ValueError("excess must stay >= 0")
    sources = excess_states(p, cap)
    targets = excess_states(p + sigma - tau, cap)
    index = {state: i for i, state in enumerate(targets)}
    cols: list[tuple[int, ...]] = []
    for lam in sources:
        counted = _distribute(lam + (cap - tau,), cap - sigma)
        col = [0] * len(targets)
        for state, ways in counted.items():
            col[index[state]] = ways
        cols.append(tuple(col))
    entries = tuple(tuple(col[i] for col in cols) for i in range(len(targets)))
    return TransitionMatrix(sources, targets, entries)


@dataclass(frozen=True)
class GenericPlacement:
    """Relative configuration of the below-diagonal rooks.

    Board indices are compressed to 1..m so that every index hosts at least
    one rook endpoint (a row of some rook, a column of some rook, or both);
    the runs of plain rows between them are what the generating function
    sums over.  ``cells`` holds (row, column, multiplicity) with column <
    row, sorted, one entry per occupied cell.
    """

    m: int
    cells: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("compressed size must be >= 0")
        seen = set()
        covered = set()
        for r, c, mult in self.cells:
            if not 1 <= c < r <= self.m:
                raise ValueError(f"cell ({r},{c}) not strictly below the diagonal")
            if mult < 1:
                raise ValueError("cell multiplicity must be >= 1")
            if (r, c) in seen:
                raise ValueError(f"duplicate cell ({r},{c})")
            seen.add((r, c))
            covered.add(r)
            covered.add(c)
        if covered != set(range(1, self.m + 1)):
            raise ValueError("every index in 1..m must host a rook endpoint")
        object.__setattr__(self, "cells", tuple(sorted(self.cells)))

    @property
    def k(self) -> int:
        """Total rook count, with multiplicity."""
        return sum(mult for _, _, mult in self.cells)

    def row_loads(self) -> dict[int, int]:
        loads: dict[int, int] = {}
        for r, _, mult in self.cells:
            loads[r] = loads.get(r, 0) + mult
        return loads

    def col_loads(self) -> dict[int, int]:
        loads: dict[int, int] = {}
        for _, c, mult in self.cells:
            loads[c] = loads.get(c, 0) + mult
        return loads

    def max_load(self) -> int:
        """Largest rook count on any single row or column."""
        loads = list(self.row_loads().values()) + list(self.col_loads().values())
        return max(loads, default=0)

    def fits_cap(self, cap: int) -> bool:
        return self.max_load() <= cap

    def to_text(self) -> str:
        parts = [
            f"{r},{c}" + (f":{mult}" if mult > 1 else "")
            for r, c, mult in self.cells
        ]
        return f"{self.m};" + (" " + " ".join(parts) if parts else "")

    @classmethod
    def from_text(cls, text: str) -> GenericPlacement:
        head, _, rest = text.strip().partition(";")
        cells = []
        for token in rest.split():
            pos, _, mult = token.partition(":")
            r, _, c = pos.partition(",")
            cells.append((int(r), int(c), int(mult) if mult else 1))
        return cls(int(head), tuple(cells))


def enumerate_generic(k: int, cap: int) -> Iterator[GenericPlacement]:
    """All relative configurations of k rooks at capacity cap, exactly once.

    Ordered by compressed size m, then by the recursion over cells in
    (row, column) order with multiplicities taken ascending.  Loads never
    exceed min(cap, k); by the same token the stream for any cap >= k is
    identical to the stream for cap = k.
    """
    if k < 0:
        raise ValueError("drop count must be >= 0")
    if cap < 1:
        raise ValueError("capacity must be >= 1")
    if k == 0:
        yield GenericPlacement(0, ())
        return
    bound = min(cap, k)
    for m in range(2, 2 * k + 1):
        cells = [(r, c) for r in range(2, m + 1) for c in range(1, r)]
        ncells = len(cells)
        bit = {idx: 1 << (idx - 1) for idx in range(1, m + 1)}
        full_mask = (1 << m) - 1
        # indices coverable by cells[i:], for pruning dead skip-paths
        coverable = [0] * (ncells + 1)
        for i in range(ncells - 1, -1, -1):
            r, c = cells[i]
            coverable[i] = coverable[i + 1] | bit[r] | bit[c]
        row_load = [0] * (m + 1)
        col_load = [0] * (m + 1)
        chosen: list[tuple[int, int, int]] = []

        def rec(idx: int, left: int, covered: int) -> Iterator[GenericPlacement]:
            if left == 0:
                if covered == full_mask:
                    yield GenericPlacement(m, tuple(chosen))
                return
            if idx == ncells:
                return
            missing = full_mask & ~covered
            # each remaining rook covers at most two new indices
            if bin(missing).count("1") > 2 * left:
                return
            if missing & ~coverable[idx]:
                return
            r, c = cells[idx]
            top = min(bound - row_load[r], bound - col_load[c], left)
            yield from rec(idx + 1, left, covered)
            for mult in range(1, top + 1):
                row_load[r] += mult
                col_load[c] += mult
                chosen.append((r, c, mult))
                yield from rec(idx + 1, left - mult, covered | bit[r] | bit[c])
                chosen.pop()
                row_load[r] -= mult
                col_load[c] -= mult

        yield from rec(0, k, 0)


def generic_counts_by_capacity(k: int) -> dict[int, int]:
    """Configuration counts for every capacity 1..k from a single sweep.

    A configuration is admissible at capacity c iff its largest line load is
    <= c, so one enumeration at capacity k classifies all smaller
    capacities.  Counts stabilize at c = k.
    """
    if k == 0:
        return {}
    by_load = Counter(g.max_load() for g in enumerate_generic(k, k))
    out: dict[int, int] = {}
    running = 0
    for c in range(1, k + 1):
        running += by_load.get(c, 0)
        out[c] = running
    return out


@lru_cache(maxsize=None)
def _stay_inverse(cap: int, p: int) -> tuple[PolyMatrix, Polynomial]:
    """Adjugate and determinant of I - x*R, R the stay-at-excess-p matrix."""
    stay = transition_matrix(cap, 0, 0, p)
    n = len(stay.from_states)
    a = PolyMatrix.identity(n) - PolyMatrix.from_rows(
        [[e for e in row] for row in stay.entries]
    ).scaled(X)
    return a.adjugate(), a.determinant()


def gf_of_generic(g: GenericPlacement, cap: int) -> RationalFunction:
    """Size generating function of the boards containing configuration g.

    Walks the compressed indices from m down to 1 (filling from the bottom
    row upward).  Passing index j spends one row (a factor x) through the
    event matrix for (sigma, tau) = (rooks in row j, rooks in column j), and
    the runs of plain rows between events contribute geometric sums
    (I - x*R)^(-1), applied here as adjugate vectors over an accumulated
    determinant denominator.  The coefficient of x^n in the result is the
    number of n x n boards whose below-diagonal part is exactly g.
    """
    if not g.fits_cap(cap):
        raise ValueError("configuration exceeds the line capacity")
    row_loads = g.row_loads()
    col_loads = g.col_loads()
    p = 0
    adj, det = _stay_inverse(cap, 0)
    vec: list[Polynomial] = [adj.entry(0, 0)]
    den = det
    for j in range(g.m, 0, -1):
        sigma = row_loads.get(j, 0)
        tau = col_loads.get(j, 0)
        event = transition_matrix(cap, sigma, tau, p)
        stepped = [
            sum((e * v for e, v in zip(row, vec) if e), ZERO).shifted(1)
            for row in event.entries
        ]
        p += sigma - tau
        adj, det = _stay_inverse(cap, p)
        vec = [
            sum((adj.entry(i, t) * stepped[t] for t in range(len(stepped))), ZERO)
            for i in range(adj.rows)
        ]
        den = den * det
    assert p == 0, "excess must return to zero at the top of the board"
    return RationalFunction(vec[0], den)


def _gf_case(args: tuple[GenericPlacement, int]) -> RationalFunction:
    g, cap = args
    return gf_of_generic(g, cap)


@lru_cache(maxsize=None)
def _gf_total_serial(k: int, cap: int) -> RationalFunction:
    total = RationalFunction(ZERO)
    for g in enumerate_generic(k, cap):
        total = total + gf_of_generic(g, cap)
    return total


def gf_total(k: int, cap: int, workers: int | None = None) -> RationalFunction:
    """Sum of gf_of_generic over every configuration of k rooks.

    The coefficient of x^n is the number of cap-rook placements of the n x n
    board with exactly k drops; n = 0 contributes the empty board, so the
    k = 0 series is 1/(1-x) with constant term 1.

    ``workers`` > 1 maps the per-configuration work over a process pool.
    The reduction is exact addition, so the result does not depend on the
    worker count or on chunk boundaries.
    """
    if workers is not None and workers > 1:
        total = RationalFunction(ZERO)
        cases = [(g, cap) for g in enumerate_generic(k, cap)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for gf in pool.map(_gf_case, cases, chunksize=16):
                total = total + gf
        return total
    return _gf_total_serial(k, cap)


@dataclass(frozen=True)
class OracleComparison:
    """Outcome of checking a synthesized series against the row-DP counts."""

    k: int
    cap: int
    max_n: int
    matched: bool
    first_mismatch_n: int | None
    series: tuple[int, ...]
    oracle: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "cap": self.cap,
            "max_n": self.max_n,
            "matched": self.matched,
            "first_mismatch_n": self.first_mismatch_n,
        }


def coefficients_vs_oracle(
    k: int, cap: int, max_n: int, workers: int | None = None
) -> OracleComparison:
    """Expand gf_total(k, cap) to x^max_n and compare against count_by_drops.

    A mismatch is reported in the result, never raised: disagreement between
    the two independent computation paths is data.
    """
    series = tuple(gf_total(k, cap, workers=workers).series(max_n))
    oracle = [1 if k == 0 else 0]
    for n in range(1, max_n + 1):
        counts = count_by_drops(n, cap).counts
        oracle.append(counts[k] if k < len(counts) else 0)
    first = next((n for n in range(max_n + 1) if series[n] != oracle[n]), None)
    return OracleComparison(
        k=k,
        cap=cap,
        max_n=max_n,
        matched=first is None,
        first_mismatch_n=first,
        series=series,
        oracle=tuple(oracle),
    )
