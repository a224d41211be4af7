"""Travels of a sign matrix and the interior-element machinery built on them.

A travel is a monotone staircase walk over matrix positions.  The top travel
starts at a[1][1] and moves right while consecutive entries in the row agree;
at the first disagreement it takes the flipped entry and drops one row in
that column.  In the bottom row there is nowhere left to drop, so the walk
stops just before a flip.  The bottom travel is the mirror image: it starts
at a[r][n], moves left and rises at flips, stopping before a flip once it
reaches row 1.  Both walks are unique for a given matrix.

The matroid encoded by the matrix is cyclic exactly when the top travel ends
in row r strictly before column n (equivalently, when the bottom travel ends
in row 1 strictly after column 1).  For acyclic matrices the two travels
decide which ground-set elements are interior:

  (a) column 1 is interior when the bottom travel runs all the way into
      a[1][2], a[1][1];
  (b) column n is interior when the top travel runs through a[r][n-1],
      a[r][n];
  (c) a middle column k is interior when the travels are parallel at k,
      meaning the top travel passes horizontally through columns k-1, k, k+1
      of some row i and the bottom travel passes horizontally through the
      same three columns of row i or of row i+1.

These criteria agree with the brute-force definition via signed circuits of
the chirotope; the test suite checks that equivalence exhaustively on small
matrices and on random larger ones.

Plain travels are the staircase shapes that a top travel of an acyclic
matrix can take, minus the degenerate one-segment shape: they start at
a[1][1], drop at strictly increasing columns >= 2 and end at column n.  They
depend only on (r, n).  Reorienting the column set computed by
``reorientation_for_pt`` turns the top travel of any matrix into any
prescribed plain travel, which makes plain travels an index of the acyclic
reorientation classes of the matroid (with column 1 kept fixed); the
one-segment shape indexes the remaining class, the one containing the
matrix itself whenever it is acyclic.  ``min_interior`` scans the plain
travels plus that degenerate shape, so its minimum ranges over every acyclic
reorientation class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .sign_matrix import SignMatrix

Rows = tuple[tuple[int, ...], ...]

TOP = "top"
BOTTOM = "bottom"
PLAIN = "plain"


class CyclicMatroidError(ValueError):
    """Operation defined only for acyclic matrices was given a cyclic one."""


class TravelFormatError(ValueError):
    """Malformed travel text."""


@dataclass(frozen=True)
class Travel:
    """A staircase walk stored as (row, col_from, col_to) segments.

    Consecutive segments share exactly the breakpoint column.  Top and plain
    travels move right and down (col_from <= col_to, rows increasing);
    bottom travels move left and up.
    """

    kind: str
    segments: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.kind not in (TOP, BOTTOM, PLAIN):
            raise ValueError(f"unknown travel kind {self.kind!r}")
        if not self.segments:
            raise ValueError("travel needs at least one segment")
        step = -1 if self.kind == BOTTOM else 1
        prev = None
        for row, a, b in self.segments:
            if step * (b - a) < 0:
                raise ValueError(f"segment {(row, a, b)} runs the wrong way")
            if prev is not None:
                prow, _, pb = prev
                if row != prow + step or a != pb:
                    raise ValueError("segments do not form a connected staircase")
            prev = (row, a, b)

    @property
    def start(self) -> tuple[int, int]:
        row, a, _ = self.segments[0]
        return (row, a)

    @property
    def end(self) -> tuple[int, int]:
        row, _, b = self.segments[-1]
        return (row, b)

    @property
    def end_row(self) -> int:
        return self.segments[-1][0]

    @property
    def end_col(self) -> int:
        return self.segments[-1][2]

    @property
    def drop_columns(self) -> tuple[int, ...]:
        """Columns where the walk changes row, in path order."""
        return tuple(seg[2] for seg in self.segments[:-1])

    @property
    def breakpoints(self) -> tuple[int, ...]:
        """Drop columns followed by the end column."""
        return self.drop_columns + (self.end_col,)

    def contains(self, i: int, j: int) -> bool:
        return any(row == i and min(a, b) <= j <= max(a, b) for row, a, b in self.segments)

    def spanning_row(self, lo: int, hi: int) -> int | None:
        """Row whose segment covers all columns lo..hi, or None.

        At most one segment can cover a range of two or more columns because
        consecutive segments overlap in a single column.
        """
        for row, a, b in self.segments:
            if min(a, b) <= lo and hi <= max(a, b):
                return row
        return None

    def crossing_row(self, j: int) -> int | None:
        """Row in which the walk moves between columns j and j+1, if it does."""
        for row, a, b in self.segments:
            if min(a, b) <= j and j + 1 <= max(a, b):
                return row
        return None

    def to_text(self) -> str:
        return ";".join(f"{row}:{a}-{b}" for row, a, b in self.segments)

    @classmethod
    def from_text(cls, text: str, kind: str = PLAIN) -> "Travel":
        segments = []
        for part in text.strip().split(";"):
            try:
                row_s, cols = part.split(":")
                a_s, b_s = cols.split("-")
                segments.append((int(row_s), int(a_s), int(b_s)))
            except ValueError as exc:
                raise TravelFormatError(f"bad segment {part!r}") from exc
        try:
            return cls(kind, tuple(segments))
        except ValueError as exc:
            raise TravelFormatError(str(exc)) from exc

    def sort_key(self) -> tuple[int, ...]:
        return self.breakpoints


# ---------------------------------------------------------------------------
# Walk construction on raw rows.  These helpers are the hot path of the
# verifier scans, so they work on plain tuples instead of SignMatrix values.


def _top_segments(rows: Rows) -> tuple[tuple[int, int, int], ...]:
    r = len(rows)
    n = len(rows[0])
    i, j = 0, 0
    segments = []
    while True:
        row = rows[i]
        pivot = row[j]
        start = j
        while j + 1 < n and row[j + 1] == pivot:
            j += 1
        if j == n - 1:
            segments.append((i + 1, start + 1, n))
            return tuple(segments)
        if i == r - 1:
            segments.append((i + 1, start + 1, j + 1))
            return tuple(segments)
        segments.append((i + 1, start + 1, j + 2))
        i += 1
        j += 1


def _bottom_segments(rows: Rows) -> tuple[tuple[int, int, int], ...]:
    r = len(rows)
    n = len(rows[0])
    i, j = r - 1, n - 1
    segments = []
    while True:
        row = rows[i]
        pivot = row[j]
        start = j
        while j - 1 >= 0 and row[j - 1] == pivot:
            j -= 1
        if j == 0:
            segments.append((i + 1, start + 1, 1))
            return tuple(segments)
        if i == 0:
            segments.append((i + 1, start + 1, j + 1))
            return tuple(segments)
        segments.append((i + 1, start + 1, j))
        i -= 1
        j -= 1


def _is_acyclic(rows: Rows) -> bool:
    segments = _top_segments(rows)
    end_row, _, end_col = segments[-1]
    return not (end_row == len(rows) and end_col < len(rows[0]))


def _interior(rows: Rows, tsegs, bsegs) -> frozenset[int]:
    r = len(rows)
    n = len(rows[0])
    out = []
    brow, ba, bb = bsegs[-1]
    if brow == 1 and bb == 1 and max(ba, bb) >= 2:
        out.append(1)
    trow, ta, tb = tsegs[-1]
    if trow == r and tb == n and min(ta, tb) <= n - 1:
        out.append(n)

    def span(segs, lo, hi):
        for row, a, b in segs:
            if min(a, b) <= lo and hi <= max(a, b):
                return row
        return None

    for k in range(2, n):
        i = span(tsegs, k - 1, k + 1)
        if i is None:
            continue
        ib = span(bsegs, k - 1, k + 1)
        if ib is not None and (ib == i or ib == i + 1):
            out.append(k)
    return frozenset(out)


def _sweep_flips(rows: Rows, drops: Sequence[int]) -> frozenset[int]:
    """Columns (1-indexed) to flip so the top travel drops exactly at `drops`.

    Single left-to-right pass: the walk is simulated and each column whose
    entry would make it deviate from the prescribed staircase is flipped.
    Column 1 is never flipped, which makes the answer canonical.
    """
    n = len(rows[0])
    drop_set = frozenset(drops)
    flipped = set()
    i = 0
    pivot = rows[0][0]
    for c in range(2, n + 1):
        value = rows[i][c - 1]
        if c in drop_set:
            # the effective entry must flip the pivot to force a drop here
            if value == pivot:
                flipped.add(c)
            i += 1
            pivot = rows[i][c - 1] * (-1 if c in flipped else 1)
        elif value != pivot:
            flipped.add(c)
    return frozenset(flipped)


# ---------------------------------------------------------------------------
# Public operations.


def top_travel(matrix: SignMatrix) -> Travel:
    """The unique top travel of the matrix."""
    return Travel(TOP, _top_segments(matrix.rows))


def bottom_travel(matrix: SignMatrix) -> Travel:
    """The unique bottom travel of the matrix."""
    return Travel(BOTTOM, _bottom_segments(matrix.rows))


def is_acyclic(matrix: SignMatrix) -> bool:
    """True unless the top travel ends in row r strictly before column n."""
    return _is_acyclic(matrix.rows)


def interior_elements(matrix: SignMatrix) -> frozenset[int]:
    """Interior columns of an acyclic matrix, per the travel criteria.

    Raises CyclicMatroidError on cyclic input: interior elements are defined
    only for acyclic matrices.
    """
    rows = matrix.rows
    if not _is_acyclic(rows):
        raise CyclicMatroidError("interior elements are defined only for acyclic matrices")
    return _interior(rows, _top_segments(rows), _bottom_segments(rows))


def plain_travel(r: int, n: int, drops: Sequence[int]) -> Travel:
    """Build the plain travel with the given strictly increasing drop columns.

    Drops must lie in [2, n] and number at most r - 1.  An empty drop tuple
    yields the degenerate one-segment shape: not a plain travel proper, but
    accepted as the scan target of the identity reorientation class.
    """
    drops = tuple(drops)
    if len(drops) > r - 1:
        raise ValueError(f"at most {r - 1} drops allowed for rank {r}")
    prev = 1
    for d in drops:
        if not (2 <= d <= n):
            raise ValueError(f"drop column {d} outside [2, {n}]")
        if d <= prev:
            raise ValueError(f"drop columns must strictly increase, got {drops}")
        prev = d
    segments = []
    row, col = 1, 1
    for d in drops:
        segments.append((row, col, d))
        row, col = row + 1, d
    segments.append((row, col, n))
    return Travel(PLAIN, tuple(segments))


def trivial_travel(r: int, n: int) -> Travel:
    """The degenerate one-segment walk along row 1, the shape of the top
    travel of any matrix whose first row is constant."""
    return plain_travel(r, n, ())


def _drop_sets(r: int, n: int, include_trivial: bool) -> Iterator[tuple[int, ...]]:
    # Emits drop tuples in lexicographic order of breakpoints (drops + end n).
    max_drops = min(r - 1, n - 1)

    def rec(prefix: tuple[int, ...], last: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) < max_drops:
            for m in range(last + 1, n):
                yield from rec(prefix + (m,), m)
        if prefix or include_trivial:
            yield prefix
        if len(prefix) < max_drops:
            yield prefix + (n,)

    yield from rec((), 1)


def enumerate_plain_travels(r: int, n: int, include_trivial: bool = False) -> Iterator[Travel]:
    """Stream every plain travel for an r x n matrix exactly once.

    Travels are emitted in lexicographic order of their breakpoint
    sequences.  The shapes depend only on (r, n).  With include_trivial the
    degenerate one-segment shape is emitted in its lexicographic position,
    so a scan over the stream covers every acyclic reorientation class.
    """
    for drops in _drop_sets(r, n, include_trivial):
        yield plain_travel(r, n, drops)


def count_plain_travels(r: int, n: int) -> int:
    """Number of plain travels, sum of C(n-1, k) for k = 1 .. r-1."""
    return sum(comb(n - 1, k) for k in range(1, min(r - 1, n - 1) + 1))


def _travel_drops(matrix: SignMatrix, travel: Travel) -> tuple[int, ...]:
    if travel.kind == BOTTOM:
        raise ValueError("expected a top or plain travel")
    if travel.start != (1, 1):
        raise ValueError("travel must start at a[1][1]")
    if travel.end_col != matrix.n:
        raise ValueError(f"travel must end at column {matrix.n}")
    if travel.end_row > matrix.r:
        raise ValueError(f"travel uses row {travel.end_row}, matrix has {matrix.r}")
    drops = travel.drop_columns
    if any(b <= a for a, b in zip(drops, drops[1:])) or (drops and drops[0] < 2):
        raise ValueError(f"drop columns {drops} are not strictly increasing from >= 2")
    return drops


def reorientation_for_pt(matrix: SignMatrix, travel: Travel) -> frozenset[int]:
    """Canonical column set turning the matrix's top travel into `travel`.

    The set is computed by a single left-to-right sweep and never contains
    column 1; it is the unique such set, so the map from plain travels to
    acyclic reorientation classes is a bijection (checked in the tests).
    """
    return _sweep_flips(matrix.rows, _travel_drops(matrix, travel))


def min_interior(matrix: SignMatrix, include_trivial: bool = True) -> tuple[int, Travel]:
    """Minimum interior count over the acyclic reorientation classes.

    Every plain travel (and by default the degenerate one-segment shape,
    which indexes the remaining acyclic class) is realized as a top travel
    via its canonical reorientation and the interior elements are counted.
    Returns the minimum and the lexicographically smallest witness shape.
    """
    rows = matrix.rows
    best: tuple[int, tuple[int, ...]] | None = None
    for drops in _drop_sets(matrix.r, matrix.n, include_trivial):
        flips = _sweep_flips(rows, drops)
        flipped = _reoriented_rows(rows, flips)
        tsegs = _top_segments(flipped)
        count = len(_interior(flipped, tsegs, _bottom_segments(flipped)))
        if best is None or count < best[0]:
            best = (count, drops)
            if count == 0:
                break
    assert best is not None
    return best[0], plain_travel(matrix.r, matrix.n, best[1])


def _reoriented_rows(rows: Rows, cols: frozenset[int]) -> Rows:
    if not cols:
        return rows
    zero_based = {c - 1 for c in cols}
    return tuple(
        tuple(-v if j in zero_based else v for j, v in enumerate(row)) for row in rows
    )
