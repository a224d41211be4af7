"""Black/white parity boards of sign matrices and the named constructions.

The board of an r x n matrix has (r-1) x (n-1) squares; square s(i, j) is
black when the 2 x 2 block a[i][j], a[i][j+1], a[i+1][j], a[i+1][j+1] has
product -1.  Reorienting columns never changes the board, and neither does
flipping the sign of a whole row, so a board pins down the matrix up to
exactly those moves.  Since row flips do not move any travel and column
flips permute the acyclic reorientation classes, every quantity this package
scans (minimum interior count, the multiset of interior sets over classes)
is a board invariant; the canonical realization below therefore loses
nothing.

A board "has the sequence (x_1, ..., x_{r-1})" when row i of the board is
black exactly in the run of x_i columns starting right after the runs of the
previous rows.  The named lower-bound constructions are boards of this kind
together with a corner function h: the m-th corner is the matrix position
(m, h(m)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .sign_matrix import SignMatrix
from .travels import bottom_travel, top_travel

THEOREM_IDS = ("dim2", "dim3", "general", "t1", "even-d")


class BoardFormatError(ValueError):
    """Malformed board text."""


@dataclass(frozen=True)
class Chessboard:
    """An (r-1) x (n-1) black/white board, optionally carrying the sequence
    and corner function of one of the named constructions."""

    black: tuple[tuple[bool, ...], ...]
    # annotations, not part of board identity
    sequence: tuple[int, ...] | None = field(default=None, compare=False)
    corners: tuple[int, ...] | None = field(default=None, compare=False)  # h(1)..h(r)

    def __post_init__(self) -> None:
        if not self.black or not self.black[0]:
            raise ValueError("board needs at least one row and one column")
        width = len(self.black[0])
        if any(len(row) != width for row in self.black):
            raise ValueError("all board rows must have the same length")
        if self.sequence is not None:
            self._check_sequence()
        if self.corners is not None:
            self._check_corners()

    def _check_sequence(self) -> None:
        seq = self.sequence
        assert seq is not None
        if len(seq) != self.rows:
            raise ValueError(f"sequence needs {self.rows} terms, got {len(seq)}")
        if any(x < 1 for x in seq):
            raise ValueError("sequence terms must be positive")
        if sum(seq) > self.cols:
            raise ValueError(f"sequence {seq} does not fit in {self.cols} columns")
        acc = 0
        for i, x in enumerate(seq, start=1):
            for j in range(1, self.cols + 1):
                want = acc + 1 <= j <= acc + x
                if self.black[i - 1][j - 1] != want:
                    raise ValueError(f"board does not match sequence {seq} at s({i},{j})")
            acc += x

    def _check_corners(self) -> None:
        h = self.corners
        assert h is not None
        if len(h) != self.matrix_rows:
            raise ValueError(f"corner map needs {self.matrix_rows} values")
        if h[0] != 1:
            raise ValueError("h(1) must be 1")
        if any(b <= a for a, b in zip(h, h[1:])):
            raise ValueError("h must be strictly increasing")
        if self.sequence is not None:
            acc = 0
            for m in range(2, self.matrix_rows):
                acc += self.sequence[m - 2]
                if not (acc + 1 <= h[m - 1] <= acc + self.sequence[m - 1] + 1):
                    raise ValueError(f"h({m}) = {h[m - 1]} outside its sequence window")

    @property
    def rows(self) -> int:
        return len(self.black)

    @property
    def cols(self) -> int:
        return len(self.black[0])

    @property
    def matrix_rows(self) -> int:
        return self.rows + 1

    @property
    def matrix_cols(self) -> int:
        return self.cols + 1

    def is_black(self, i: int, j: int) -> bool:
        """Square s(i, j), 1-indexed."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"square ({i},{j}) outside {self.rows}x{self.cols} board")
        return self.black[i - 1][j - 1]

    def corner_column(self, m: int) -> int:
        if self.corners is None:
            raise ValueError("board carries no corner function")
        if not (1 <= m <= self.matrix_rows):
            raise IndexError(f"corner index {m} outside [1, {self.matrix_rows}]")
        return self.corners[m - 1]

    @classmethod
    def all_white(cls, r: int, n: int) -> "Chessboard":
        return cls(tuple((False,) * (n - 1) for _ in range(r - 1)))

    @classmethod
    def from_bitmap(cls, bitmap: Iterable[Iterable[bool]]) -> "Chessboard":
        return cls(tuple(tuple(bool(v) for v in row) for row in bitmap))

    def mirror_lr(self) -> "Chessboard":
        return Chessboard(tuple(tuple(reversed(row)) for row in self.black))

    def flip_tb(self) -> "Chessboard":
        return Chessboard(tuple(reversed(self.black)))

    def to_text(self) -> str:
        lines = [f"{self.matrix_rows} {self.matrix_cols}"]
        lines.extend("".join("#" if v else "." for v in row) for row in self.black)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Chessboard":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise BoardFormatError("empty board text")
        head = lines[0].split()
        if len(head) != 2:
            raise BoardFormatError(f"expected header 'r n', got {lines[0]!r}")
        try:
            r, n = int(head[0]), int(head[1])
        except ValueError as exc:
            raise BoardFormatError(f"non-integer header {lines[0]!r}") from exc
        if len(lines) != r:
            raise BoardFormatError(f"expected {r - 1} board rows, got {len(lines) - 1}")
        rows = []
        for line in lines[1:]:
            if len(line) != n - 1 or set(line) - {"#", "."}:
                raise BoardFormatError(f"bad row {line!r}, want {n - 1} chars of #/.")
            rows.append(tuple(ch == "#" for ch in line))
        return cls(tuple(rows))


def board_of(matrix: SignMatrix) -> Chessboard:
    """The parity board of a matrix; needs r >= 2 and n >= 2."""
    if matrix.r < 2 or matrix.n < 2:
        raise ValueError("board requires at least a 2 x 2 matrix")
    rows = matrix.rows
    return Chessboard(
        tuple(
            tuple(
                rows[i][j] * rows[i][j + 1] * rows[i + 1][j] * rows[i + 1][j + 1] == -1
                for j in range(matrix.n - 1)
            )
            for i in range(matrix.r - 1)
        )
    )


def board_from_sequence(r: int, n: int, sequence: Sequence[int]) -> Chessboard:
    """Board with black runs per the sequence; the rest stays white."""
    seq = tuple(sequence)
    if r < 2:
        raise ValueError("sequence boards need r >= 2")
    if len(seq) != r - 1:
        raise ValueError(f"sequence needs r - 1 = {r - 1} terms, got {len(seq)}")
    if any(x < 1 for x in seq):
        raise ValueError("sequence terms must be positive")
    if sum(seq) > n - 1:
        raise ValueError(f"sequence {seq} does not fit in {n - 1} columns")
    black = [[False] * (n - 1) for _ in range(r - 1)]
    acc = 0
    for i, x in enumerate(seq):
        for j in range(acc, acc + x):
            black[i][j] = True
        acc += x
    return Chessboard(tuple(tuple(row) for row in black), sequence=seq)


def canonical_matrix(board: Chessboard) -> SignMatrix:
    """The unique matrix with all-plus first row and first column realizing
    the board: each remaining entry is forced by the 2 x 2 parity rule."""
    r, n = board.matrix_rows, board.matrix_cols
    rows = [[1] * n]
    for i in range(1, r):
        row = [1]
        for j in range(1, n):
            parity = -1 if board.black[i - 1][j - 1] else 1
            row.append(rows[i - 1][j - 1] * rows[i - 1][j] * row[j - 1] * parity)
        rows.append(row)
    return SignMatrix(tuple(tuple(row) for row in rows))


def realize_sequence(r: int, n: int, sequence: Sequence[int]) -> SignMatrix:
    """Canonical matrix whose board has exactly the given sequence."""
    return canonical_matrix(board_from_sequence(r, n, sequence))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def corners_for(theorem_id: str, r: int, t: int) -> Chessboard:
    """Sequence board and corner function of a named construction.

    theorem_id selects the family:
      dim2     r = 3,            n = t + 6,  sequence (2, t+3)
      dim3     r = 4,            n = t + 8,  sequence (2, t+3, 2)
      general  r >= 5, t >= 2,   n = (t+1)(r-3) + 7,
               sequence (2, t+3, 2, t+1, ..., t+1)
      t1       r >= 5, t = 1,    n = 2(r-1) + ceil(r/2) + 1,
               sequence (2, 4, 2, 3, 2, 3, ...)
      even-d   odd r >= 5, t >= 2,
               n = (r-1) + (t+1)(r-1)/2 + 3,
               sequence (2, t+3, 2, t+1, 2, t+1, ..., 2, t+1)

    Every column of these boards carries exactly one black square.  The
    returned board stores the sequence and the corner map h(1..r), with
    h(r) = n.
    """
    if theorem_id == "dim2":
        if r != 3:
            raise ValueError("dim2 construction requires r = 3")
        if t < 0:
            raise ValueError("dim2 construction requires t >= 0")
        seq = (2, t + 3)
        h = (1, t + 3, t + 6)
    elif theorem_id == "dim3":
        if r != 4:
            raise ValueError("dim3 construction requires r = 4")
        if t < 0:
            raise ValueError("dim3 construction requires t >= 0")
        seq = (2, t + 3, 2)
        h = (1, t + 3, t + 6, t + 8)
    elif theorem_id == "general":
        if r < 5 or t < 2:
            raise ValueError("general construction requires r >= 5 and t >= 2")
        seq = (2, t + 3, 2) + (t + 1,) * (r - 4)
        h = (1, t + 3, t + 6) + tuple((t + 1) * (m - 3) + 7 for m in range(4, r + 1))
    elif theorem_id == "t1":
        if r < 5:
            raise ValueError("t1 construction requires r >= 5")
        if t != 1:
            raise ValueError("t1 construction is the t = 1 family")
        seq = (2, 4) + tuple(2 if i % 2 == 0 else 3 for i in range(r - 3))
        h = (1,) + tuple(2 * (m - 1) + _ceil_div(m, 2) + 1 for m in range(2, r + 1))
    elif theorem_id == "even-d":
        if r < 5 or r % 2 == 0:
            raise ValueError("even-d construction requires odd r >= 5")
        if t < 2:
            raise ValueError("even-d construction requires t >= 2")
        seq = (2, t + 3) + tuple(2 if i % 2 == 0 else t + 1 for i in range(r - 3))
        h = (1, t + 3) + tuple(
            2 * _ceil_div(m - 1, 2) + (t + 1) * ((m - 1) // 2) + 3 for m in range(3, r + 1)
        )
    else:
        raise ValueError(f"unknown construction {theorem_id!r}, want one of {THEOREM_IDS}")
    n = h[-1]
    assert sum(seq) == n - 1, "constructions are one-black-per-column boards"
    board = board_from_sequence(r, n, seq)
    return Chessboard(board.black, sequence=seq, corners=h)


def parallel_rule_check(matrix: SignMatrix) -> bool:
    """Check the forced interplay of the two travels across column pairs.

    Whenever exactly one black square sits between the rows where the top
    and bottom travels cross from column j to column j+1, one travel moves
    straight through while the other turns: the product of the blackness
    parities between the crossing rows telescopes to the product of the two
    travels' adjacent-entry signs.  Returns True when no column pair
    violates the rule; a False return means a bug in the travel code.
    """
    if matrix.r < 2 or matrix.n < 2:
        return True
    rows = matrix.rows
    board = board_of(matrix)
    tt = top_travel(matrix)
    bt = bottom_travel(matrix)
    for j in range(1, matrix.n):
        ti = tt.crossing_row(j)
        bi = bt.crossing_row(j)
        if ti is None or bi is None or bi <= ti:
            continue
        blacks = sum(1 for i in range(ti, bi) if board.black[i - 1][j - 1])
        if blacks != 1:
            continue
        top_straight = rows[ti - 1][j - 1] == rows[ti - 1][j]
        bottom_turns = rows[bi - 1][j - 1] != rows[bi - 1][j]
        if top_straight != bottom_turns:
            return False
    return True
