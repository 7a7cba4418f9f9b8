"""Young diagrams as immutable integer partitions with box-level geometry.

Coordinates are 1-based (row, col) pairs.  Rows are indexed top to bottom
and row lengths are non-increasing, so a box (i, j) lies above the main
diagonal when i < j and below it when i > j.  Instances never mutate;
every operation returns a new value, which keeps them safe to share
between worker tasks and to use as cache keys.
"""

from __future__ import annotations

import operator
from typing import Iterator, NamedTuple

from .errors import (
    BoxOutsideDiagram,
    NegativeRowLength,
    NonMonotoneRows,
    NotAddable,
    NotRemovable,
)


class Box(NamedTuple):
    """A single cell, 1-based.  Tuples sort ascending by (row, col)."""

    row: int
    col: int


def reflected(box: Box) -> Box:
    """Mirror a box across the main diagonal."""
    return Box(box.col, box.row)


class YoungDiagram:
    """An integer partition together with the geometric queries used here.

    Equality and hashing go by the row tuple alone.  The conjugate row
    tuple is computed lazily and cached; the cache never affects equality.
    """

    def __init__(self, rows=()):
        cleaned = tuple(operator.index(r) for r in rows)
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        for r in cleaned:
            if r < 0:
                raise NegativeRowLength(f"negative row length {r}")
        for a, b in zip(cleaned, cleaned[1:]):
            if b > a:
                raise NonMonotoneRows(
                    f"row lengths must be non-increasing, got {a} before {b}"
                )
        self._rows = cleaned
        self._size = sum(cleaned)
        self._conj: tuple[int, ...] | None = None

    @classmethod
    def _from_valid(cls, rows: tuple[int, ...]) -> "YoungDiagram":
        # Fast path for enumeration loops that already hold a valid tuple.
        d = cls.__new__(cls)
        d._rows = rows
        d._size = sum(rows)
        d._conj = None
        return d

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def size(self) -> int:
        return self._size

    @property
    def row_count(self) -> int:
        return len(self._rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, YoungDiagram):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"YoungDiagram({list(self._rows)!r})"

    def __str__(self) -> str:
        return ",".join(str(r) for r in self._rows)

    def row_length(self, i: int) -> int:
        """Length of row i, zero when the row does not exist."""
        if 1 <= i <= len(self._rows):
            return self._rows[i - 1]
        return 0

    def conjugate_rows(self) -> tuple[int, ...]:
        if self._conj is None:
            if not self._rows:
                self._conj = ()
            else:
                width = self._rows[0]
                counts = [0] * (width + 1)
                for r in self._rows:
                    counts[r] += 1
                heights = [0] * width
                running = 0
                for j in range(width, 0, -1):
                    running += counts[j]
                    heights[j - 1] = running
                self._conj = tuple(heights)
        return self._conj

    def col_height(self, j: int) -> int:
        """Height of column j, zero when the column does not exist."""
        conj = self.conjugate_rows()
        if 1 <= j <= len(conj):
            return conj[j - 1]
        return 0

    def conjugate(self) -> "YoungDiagram":
        """The diagram reflected across the main diagonal."""
        return YoungDiagram._from_valid(self.conjugate_rows())

    def is_symmetric(self) -> bool:
        return self._rows == self.conjugate_rows()

    def boxes(self) -> Iterator[Box]:
        for i, r in enumerate(self._rows, 1):
            for j in range(1, r + 1):
                yield Box(i, j)

    def __contains__(self, box) -> bool:
        r, c = box
        return 1 <= r <= len(self._rows) and 1 <= c <= self._rows[r - 1]

    def hook_length(self, box) -> int:
        """Arm plus leg plus one for a box of the diagram.

        The arm counts boxes to the right in the same row, the leg counts
        boxes further down the same column.
        """
        r, c = box
        if box not in self:
            raise BoxOutsideDiagram(f"box {(r, c)} outside diagram {self._rows}")
        return (self._rows[r - 1] - c) + (self.conjugate_rows()[c - 1] - r) + 1

    def addable_boxes(self) -> list[Box]:
        """Positions where one box can be appended, ascending by row.

        There is one position per distinct row length plus the new bottom
        row, so the list has (number of distinct row lengths + 1) entries.
        """
        out = []
        prev = None
        for i, r in enumerate(self._rows, 1):
            if r != prev:
                out.append(Box(i, r + 1))
            prev = r
        out.append(Box(len(self._rows) + 1, 1))
        return out

    def removable_boxes(self) -> list[Box]:
        """Corner boxes (i, row_i) whose removal leaves a valid diagram."""
        out = []
        k = len(self._rows)
        for i, r in enumerate(self._rows, 1):
            if i == k or self._rows[i] < r:
                out.append(Box(i, r))
        return out

    def can_add(self, box) -> bool:
        r, c = box
        if r < 1 or c < 1:
            return False
        k = len(self._rows)
        if r == k + 1:
            return c == 1
        if r > k + 1:
            return False
        if c != self._rows[r - 1] + 1:
            return False
        return r == 1 or self._rows[r - 2] >= c

    def can_remove(self, box) -> bool:
        r, c = box
        k = len(self._rows)
        if not (1 <= r <= k and c == self._rows[r - 1]):
            return False
        return r == k or self._rows[r] < c

    def add_box(self, box) -> "YoungDiagram":
        if not self.can_add(box):
            raise NotAddable(f"cannot add box {tuple(box)} to {self._rows}")
        r = box[0]
        if r == len(self._rows) + 1:
            return YoungDiagram._from_valid(self._rows + (1,))
        rows = list(self._rows)
        rows[r - 1] += 1
        return YoungDiagram._from_valid(tuple(rows))

    def remove_box(self, box) -> "YoungDiagram":
        if not self.can_remove(box):
            raise NotRemovable(f"cannot remove box {tuple(box)} from {self._rows}")
        r = box[0]
        rows = list(self._rows)
        rows[r - 1] -= 1
        if rows and rows[-1] == 0:
            rows.pop()
        return YoungDiagram._from_valid(tuple(rows))

    def base_subdiagram(self) -> "YoungDiagram":
        """The largest symmetric subdiagram: row-wise min with the conjugate."""
        conj = self.conjugate_rows()
        mins = []
        for i in range(min(len(self._rows), len(conj))):
            m = min(self._rows[i], conj[i])
            if m == 0:
                break
            mins.append(m)
        return YoungDiagram._from_valid(tuple(mins))

    def asymmetric_boxes(self) -> tuple[frozenset[Box], frozenset[Box]]:
        """Boxes outside the base subdiagram, split into (above, below).

        Boxes on the main diagonal always belong to the base, which the
        loop asserts rather than assumes.
        """
        base = self.base_subdiagram().rows
        up = set()
        down = set()
        for i, r in enumerate(self._rows, 1):
            b = base[i - 1] if i <= len(base) else 0
            for j in range(b + 1, r + 1):
                assert j != i, "diagonal box escaped the base subdiagram"
                (up if j > i else down).add(Box(i, j))
        return frozenset(up), frozenset(down)

    def has_isolated_asymmetric_boxes(self) -> bool:
        """True when no row and no column carries two asymmetric boxes."""
        up, down = self.asymmetric_boxes()
        boxes = up | down
        rows_seen = {b.row for b in boxes}
        cols_seen = {b.col for b in boxes}
        return len(rows_seen) == len(boxes) and len(cols_seen) == len(boxes)

    def in_core_subgraph(self) -> bool:
        """Membership in the restricted growth graph used by the search.

        A diagram belongs to the core subgraph when every asymmetric box
        lies below the main diagonal and no two of them share a row.
        """
        up, down = self.asymmetric_boxes()
        if up:
            return False
        return len({b.row for b in down}) == len(down)


def from_rows(rows) -> YoungDiagram:
    """Build a diagram from an iterable of row lengths."""
    return YoungDiagram(rows)
