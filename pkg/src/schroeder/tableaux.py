"""Triangular-cell tableaux on partitions with simple odd parts.

Cell geometry: within a row, the cell at position p (1-based) is the upper
triangle of square-column (p+1)//2 when p is odd and the lower triangle of
square-column p//2 when p is even.  Positions (2j-1, 2j) of a row form a twin
pair whose union is a square; the last cell of an odd-length row is a lonely
upper triangle.

A filling is standard when entries increase left-to-right along every row and
along every square-column read top to bottom, upper triangle before lower
triangle within each row it meets.  Cells filled with 1..k then always form a
smaller valid shape, which is what makes standard fillings correspond to
saturated chains of shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import LimitError
from .lattice import covers
from .partitions import Partition, check_schroeder, order

ORDER_LIMIT = 18

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SchroderTableau:
    """A shape together with a filling, one entry per cell.

    Construction checks the shape and that the entries are a bijection with
    1..n; it does not require the filling to be standard.
    """

    shape: Partition
    rows: Rows

    def __post_init__(self):
        shape = check_schroeder(self.shape)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != shape:
            raise ValueError(f"row lengths {rows} do not match shape {shape}")
        n = order(shape)
        entries = [x for row in rows for x in row]
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries must be a bijection with 1..{n}")

    @property
    def size(self) -> int:
        return order(self.shape)


def square_columns(shape: Partition) -> int:
    """Number of square-columns, i.e. ceil(first part / 2)."""
    return (shape[0] + 1) // 2 if shape else 0


def column_cells(shape: Partition, j: int) -> list[tuple[int, int]]:
    """Cells (row, position) of square-column ``j`` in reading order."""
    cells = []
    for i, length in enumerate(shape):
        if length >= 2 * j - 1:
            cells.append((i, 2 * j - 1))
        if length >= 2 * j:
            cells.append((i, 2 * j))
    return cells


def twin_pairs(shape: Partition) -> list[tuple[int, int]]:
    """Twin pairs as (row, square-column), one per complete square."""
    return [(i, j) for i, length in enumerate(shape) for j in range(1, length // 2 + 1)]


def lonely_cells(shape: Partition) -> list[tuple[int, int]]:
    """Lonely cells as (row, position); one per odd-length row."""
    return [(i, length) for i, length in enumerate(shape) if length % 2]


def is_standard(t: SchroderTableau) -> bool:
    """True iff rows and square-columns strictly increase."""
    for row in t.rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for j in range(1, square_columns(t.shape) + 1):
        cells = column_cells(t.shape, j)
        values = [t.rows[i][p - 1] for i, p in cells]
        if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
            return False
    return True


def _placements(shape: Partition) -> Iterator[Rows]:
    """Yield the row contents of every standard filling of ``shape``.

    Values 1..n are placed in increasing order; a value may extend row i when
    the cell it would occupy has its reading-order predecessor already filled.
    For an upper triangle below row 0 that predecessor is the lower twin in
    the row above.
    """
    n = order(shape)
    filled = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def placeable(i: int) -> bool:
        p = filled[i] + 1
        if p > shape[i]:
            return False
        if i > 0 and p % 2 and filled[i - 1] < p + 1:
            return False
        return True

    def rec(value: int) -> Iterator[Rows]:
        if value > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(len(shape)):
            if placeable(i):
                filled[i] += 1
                rows[i].append(value)
                yield from rec(value + 1)
                filled[i] -= 1
                rows[i].pop()

    yield from rec(1)


def enumerate_tableaux(
    shape: Partition, limit: int = ORDER_LIMIT
) -> list[SchroderTableau]:
    """All standard tableaux of ``shape`` in lexicographic order of the
    row-concatenated entries."""
    shape = check_schroeder(shape)
    if order(shape) > limit:
        raise LimitError(f"order {order(shape)} exceeds limit {limit}")
    fillings = sorted(_placements(shape), key=lambda rows: sum(rows, ()))
    return [SchroderTableau(shape, rows) for rows in fillings]


def count_tableaux(shape: Partition, limit: int = ORDER_LIMIT) -> int:
    """Number of standard tableaux of ``shape``."""
    shape = check_schroeder(shape)
    if order(shape) > limit:
        raise LimitError(f"order {order(shape)} exceeds limit {limit}")
    return sum(1 for _ in _placements(shape))


def chain_to_tableau(chain: Sequence[Partition]) -> SchroderTableau:
    """Fill cells in the order they are added along a saturated chain from ().

    The cell added at step k receives entry k.
    """
    chain = [check_schroeder(p) for p in chain]
    if not chain or chain[0] != ():
        raise ValueError("chain must start at the empty partition")
    rows: list[list[int]] = []
    for k in range(1, len(chain)):
        prev, cur = chain[k - 1], chain[k]
        if cur not in covers(prev).up_covers:
            raise ValueError(f"chain step {prev} -> {cur} is not a cover")
        if len(cur) > len(prev):
            rows.append([k])
        else:
            grown = next(i for i in range(len(prev)) if cur[i] != prev[i])
            rows[grown].append(k)
    return SchroderTableau(chain[-1], tuple(tuple(r) for r in rows))


def tableau_to_chain(t: SchroderTableau) -> list[Partition]:
    """Shapes of the subfillings with entries 1..k, for k = 0..n."""
    if not is_standard(t):
        raise ValueError("tableau is not standard")
    chain = []
    for k in range(t.size + 1):
        shape_k = tuple(
            count for count in (sum(1 for x in row if x <= k) for row in t.rows) if count
        )
        chain.append(shape_k)
    return chain


def is_single_row_shape(shape: Partition) -> bool:
    return len(shape) <= 1


def is_single_column_shape(shape: Partition) -> bool:
    """True iff every cell lies in the first square-column."""
    return not shape or shape[0] <= 2


def is_hook_shape(shape: Partition) -> bool:
    """True iff at most the first row extends past the first square-column."""
    return all(part <= 2 for part in shape[1:])


def render(t: SchroderTableau) -> str:
    """ASCII drawing: each square prints as ``u\\l``, a lonely cell as ``u\\``."""
    width = max(len(str(t.size)), 1)
    lines = []
    for row in t.rows:
        cells = []
        for j in range(0, len(row), 2):
            upper = str(row[j]).rjust(width)
            if j + 1 < len(row):
                cells.append(f"{upper}\\{str(row[j + 1]).ljust(width)}")
            else:
                cells.append(f"{upper}\\{' ' * width}")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def tableau_to_json(t: SchroderTableau) -> dict:
    return {"shape": list(t.shape), "rows": [list(r) for r in t.rows]}


def tableau_from_json(data: dict) -> SchroderTableau:
    if not isinstance(data, dict) or "rows" not in data:
        raise ValueError("tableau JSON must be an object with a 'rows' field")
    rows = tuple(tuple(r) for r in data["rows"])
    shape = tuple(data.get("shape", [len(r) for r in rows]))
    if shape != tuple(len(r) for r in rows):
        raise ValueError(f"declared shape {shape} does not match rows")
    return SchroderTableau(shape, rows)
