"""Semistandard Young tableaux and the statistics read off them.

A tableau of rank r has entries in 1..r+1, weakly increasing rows,
strictly increasing columns, and weakly decreasing row lengths.  Rows
and columns are 1-indexed throughout.
"""

from dataclasses import dataclass

from .rootsys import GLWeight, Shape


@dataclass(frozen=True)
class Tableau:
    rank: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Shape:
        parts = [len(row) for row in self.rows]
        parts += [0] * (self.rank + 1 - len(parts))
        return Shape(tuple(parts))

    def entry(self, i: int, j: int) -> int:
        """Entry at row i, column j; 0 for positions outside the shape."""
        if i < 1 or j < 1:
            raise ValueError("tableau positions are 1-indexed")
        if i > len(self.rows) or j > len(self.rows[i - 1]):
            return 0
        return self.rows[i - 1][j - 1]

    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def to_text(self) -> str:
        """One-line form, rows joined by ' / '; the empty tableau is '∅'."""
        if not self.rows:
            return "∅"
        return " / ".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "rows": [list(row) for row in self.rows]}

    def __str__(self):
        return self.to_text()


def make_tableau(rank: int, rows) -> Tableau:
    """Validate and build a Tableau; raises ValueError on any defect."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    rows = tuple(tuple(row) for row in rows if len(row) > 0)
    if len(rows) > rank + 1:
        raise ValueError(f"too many rows ({len(rows)}) for rank {rank}")
    for i, row in enumerate(rows, start=1):
        for x in row:
            if not isinstance(x, int) or not 1 <= x <= rank + 1:
                raise ValueError(f"entry {x} in row {i} outside 1..{rank + 1}")
        if any(a > b for a, b in zip(row, row[1:])):
            raise ValueError(f"row {i} is not weakly increasing: {row}")
    for i in range(len(rows) - 1):
        if len(rows[i]) < len(rows[i + 1]):
            raise ValueError("row lengths must be weakly decreasing")
        for j in range(len(rows[i + 1])):
            if rows[i][j] >= rows[i + 1][j]:
                raise ValueError(
                    f"column {j + 1} not strictly increasing between rows {i + 1} and {i + 2}"
                )
    return Tableau(rank, rows)


def parse_tableau(rank: int, text: str) -> Tableau:
    """Parse the one-line form produced by Tableau.to_text."""
    text = text.strip()
    if text in ("", "∅"):
        return make_tableau(rank, [])
    rows = []
    for chunk in text.split("/"):
        entries = chunk.split()
        if not entries:
            raise ValueError(f"empty row in tableau text {text!r}")
        try:
            rows.append([int(x) for x in entries])
        except ValueError:
            raise ValueError(f"non-integer entry in tableau text {text!r}") from None
    return make_tableau(rank, rows)


def tableau_from_json(obj) -> Tableau:
    if not isinstance(obj, dict) or set(obj) != {"rank", "rows"}:
        raise ValueError("tableau JSON must have exactly the keys 'rank' and 'rows'")
    return make_tableau(obj["rank"], obj["rows"])


@dataclass(frozen=True)
class TriangularArray:
    """Integers indexed by pairs (i, j) with 1 <= i <= j <= rank.

    Out-of-range reads come back as 0, which is how the boundary
    conventions a_{0,j} = 0, b_{i,r+1} = 0 and b_{r+1,j} = 0 enter the
    decoration rules.
    """

    rank: int
    grid: tuple[tuple[int, ...], ...]  # grid[i-1][j-i] holds entry (i, j)

    def __post_init__(self):
        if len(self.grid) != self.rank:
            raise ValueError("triangular array needs one tuple per row 1..rank")
        for i, row in enumerate(self.grid, start=1):
            if len(row) != self.rank - i + 1:
                raise ValueError(f"row {i} must have {self.rank - i + 1} entries")

    def get(self, i: int, j: int) -> int:
        if 1 <= i <= j <= self.rank:
            return self.grid[i - 1][j - i]
        return 0

    def items(self):
        for i in range(1, self.rank + 1):
            for j in range(i, self.rank + 1):
                yield (i, j), self.grid[i - 1][j - i]

    @classmethod
    def from_function(cls, rank, fn):
        return cls(
            rank,
            tuple(
                tuple(fn(i, j) for j in range(i, rank + 1))
                for i in range(1, rank + 1)
            ),
        )


@dataclass(frozen=True)
class Segment:
    """Maximal run of equal entries k in one row, with k > row index."""

    row: int
    color: int
    start: int  # 1-indexed column of the run's first box
    length: int


def content(t: Tableau) -> GLWeight:
    """Entry-count vector: coordinate k is the number of boxes holding k."""
    counts = [0] * (t.rank + 1)
    for row in t.rows:
        for x in row:
            counts[x - 1] += 1
    return GLWeight(tuple(counts))


def stats_a(t: Tableau) -> TriangularArray:
    """Entry (i, j): number of boxes holding j+1 within rows 1..i."""

    def count(i, j):
        return sum(row.count(j + 1) for row in t.rows[:i])

    return TriangularArray.from_function(t.rank, count)


def stats_b(t: Tableau) -> TriangularArray:
    """Entry (i, j): number of boxes in row i holding at least j+1."""

    def count(i, j):
        if i > len(t.rows):
            return 0
        return sum(1 for x in t.rows[i - 1] if x >= j + 1)

    return TriangularArray.from_function(t.rank, count)


def _truncation_count(t: Tableau, k: int, i: int) -> int:
    # number of boxes in row i holding an entry <= k; absent rows give 0
    if i > len(t.rows):
        return 0
    return sum(1 for x in t.rows[i - 1] if x <= k)


def is_strict(t: Tableau) -> bool:
    """Every entries-at-most-k truncation has strictly decreasing parts.

    For each threshold k, the counts of entries <= k in rows 1..k must
    strictly decrease.  This is the condition under which the tableau's
    coefficient in the deformed character sum survives; comparing row
    maxima is close but not equivalent (a lone large entry in a long row
    can dominate the next row without pinching any truncation shape).
    """
    return first_strictness_violation(t) is None


def first_strictness_violation(t: Tableau) -> int | None:
    """Smallest row index i whose pair (i, i+1) pinches a truncation.

    Returns the 1-indexed i such that rows i and i+1 hold equally many
    entries <= k for some threshold k with i < k <= rank+1, or None when
    the tableau is strict.
    """
    best = None
    for k in range(2, t.rank + 2):
        for i in range(1, k):
            if _truncation_count(t, k, i) == _truncation_count(t, k, i + 1):
                if best is None or i < best:
                    best = i
    return best


def segments(t: Tableau) -> list[Segment]:
    """All maximal constant runs with color above the row index.

    Runs of k in row i count only when i+1 <= k <= rank+1; the leading
    run of i-entries in row i is never a segment.  Ordered by (row,
    start column).
    """
    out = []
    for i, row in enumerate(t.rows, start=1):
        j = 0
        while j < len(row):
            k = row[j]
            run = 1
            while j + run < len(row) and row[j + run] == k:
                run += 1
            if i + 1 <= k <= t.rank + 1:
                out.append(Segment(row=i, color=k, start=j + 1, length=run))
            j += run
    return out
