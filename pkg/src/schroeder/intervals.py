"""Interval orders, the intervals of a tableau, and the grid-downset
correspondence: an interval order arises from a tableau exactly when it
weakly contains a grid down-set of its size.

Grid coordinates are (row, column) with (1, 1) top-left; a down-set is given
by its row lengths, i.e. a partition.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .partitions import Partition, partitions_of
from .posets import FinitePoset, contains_induced, two_plus_two
from .tableaux import SchroderTableau, is_standard, lonely_cells, twin_pairs

Interval = tuple[int, int]

DOWNSET_LIMIT = 30


def check_intervals(data: Iterable[Iterable[int]]) -> tuple[Interval, ...]:
    intervals = tuple(tuple(iv) for iv in data)
    for iv in intervals:
        if len(iv) != 2 or not all(isinstance(x, int) and x >= 1 for x in iv):
            raise ValueError(f"intervals must be pairs of positive integers, got {iv}")
        if iv[0] >= iv[1]:
            raise ValueError(f"interval endpoints must satisfy a < b, got {iv}")
    return intervals


def interval_order(intervals: Iterable[Iterable[int]]) -> FinitePoset:
    """Order the intervals by complete precedence: I < J iff max(I) < min(J)."""
    ivs = check_intervals(intervals)
    pairs = [
        (i + 1, j + 1)
        for i, (_, b) in enumerate(ivs)
        for j, (a, _) in enumerate(ivs)
        if b < a
    ]
    return FinitePoset(len(ivs), pairs)


def is_interval_order(p: FinitePoset) -> bool:
    """True iff ``p`` has no induced subposet isomorphic to 2+2."""
    return not contains_induced(p, two_plus_two())


def intervals_of_tableau(t: SchroderTableau) -> tuple[Interval, ...]:
    """One interval per twin pair (its two entries) and one per lonely cell
    (its entry paired with n+1), in row-major order."""
    if not is_standard(t):
        raise ValueError("tableau is not standard")
    n = t.size
    by_cell = {}
    for i, j in twin_pairs(t.shape):
        by_cell[(i, 2 * j - 1)] = (t.rows[i][2 * j - 2], t.rows[i][2 * j - 1])
    for i, p in lonely_cells(t.shape):
        by_cell[(i, p)] = (t.rows[i][p - 1], n + 1)
    return tuple(by_cell[cell] for cell in sorted(by_cell))


def intervals_to_json(intervals: Iterable[Interval]) -> dict:
    return {"intervals": [list(iv) for iv in intervals]}


def intervals_from_json(data: dict) -> tuple[Interval, ...]:
    if not isinstance(data, dict) or "intervals" not in data:
        raise ValueError("interval JSON must be an object with an 'intervals' field")
    return check_intervals(data["intervals"])


def grid_downsets(n: int, limit: int = DOWNSET_LIMIT) -> list[Partition]:
    """All n-cell down-sets of the grid, as row-length partitions, enumerated
    by decreasing first-row length."""
    if n > limit:
        raise ValueError(f"size {n} exceeds limit {limit}")
    return list(partitions_of(n))


def downset_cells(d: Partition) -> list[tuple[int, int]]:
    """Cells (row, column) of the down-set in row-major order, 1-based."""
    return [(r + 1, c + 1) for r, length in enumerate(d) for c in range(length)]


def downset_poset(d: Partition) -> FinitePoset:
    """The componentwise order on the cells of the down-set, cells numbered
    row-major."""
    cells = downset_cells(d)
    pairs = [
        (i + 1, j + 1)
        for i, (r1, c1) in enumerate(cells)
        for j, (r2, c2) in enumerate(cells)
        if (r1, c1) != (r2, c2) and r1 <= r2 and c1 <= c2
    ]
    return FinitePoset(len(cells), pairs)


class Witness(NamedTuple):
    """A grid down-set weakly contained in an interval order: ``mapping[k]``
    is the poset element assigned to the k-th row-major cell."""

    downset: Partition
    mapping: tuple[int, ...]


def _downset_embedding(d: Partition, p: FinitePoset) -> tuple[int, ...] | None:
    """Injective order-preserving map from the cells of ``d`` onto ``p``,
    found by backtracking over cells in row-major order."""
    cells = downset_cells(d)
    assigned: list[int] = []
    used = [False] * p.n

    def rec(k: int) -> bool:
        if k == len(cells):
            return True
        r, c = cells[k]
        below = r * c - 1  # cells componentwise below (r, c)
        for w in range(p.n):
            if used[w] or p.down[w].bit_count() < below:
                continue
            ok = True
            for t in range(k):
                r2, c2 = cells[t]
                if r2 <= r and c2 <= c and not (p.up[assigned[t]] >> w & 1):
                    ok = False
                    break
            if ok:
                assigned.append(w)
                used[w] = True
                if rec(k + 1):
                    return True
                assigned.pop()
                used[w] = False
        return False

    if rec(0):
        return tuple(v + 1 for v in assigned)
    return None


def has_schroder_preimage(p: FinitePoset) -> Witness | None:
    """A witness down-set weakly contained in ``p``, or None.

    A witness exists exactly when some tableau's interval set induces ``p``.
    """
    if not is_interval_order(p):
        raise ValueError("poset is not an interval order")
    for d in grid_downsets(p.n):
        mapping = _downset_embedding(d, p)
        if mapping is not None:
            return Witness(d, mapping)
    return None


def realize_intervals(p: FinitePoset) -> tuple[Interval, ...]:
    """Closed intervals realizing the interval order ``p``, with all 2n
    endpoints distinct and forming 1..2n, element k getting the k-th interval.

    Left values come from the rank of each element's predecessor set in the
    inclusion chain of predecessor sets; the right value of x is the largest
    left value among elements not above x.
    """
    if not is_interval_order(p):
        raise ValueError("poset is not an interval order")
    if p.n == 0:
        return ()
    down_sets = sorted({p.down[v] for v in range(p.n)}, key=lambda m: m.bit_count())
    rank = {m: i for i, m in enumerate(down_sets)}
    left = [rank[p.down[v]] for v in range(p.n)]
    right = [
        max(left[w] for w in range(p.n) if not (p.up[v] >> w & 1))
        for v in range(p.n)
    ]
    # spread endpoints: left endpoints of a value sort before right endpoints
    endpoints = sorted(
        [(left[v], 0, v) for v in range(p.n)] + [(right[v], 1, v) for v in range(p.n)]
    )
    coord = {}
    for pos, (value, side, v) in enumerate(endpoints, start=1):
        coord[(side, v)] = pos
    intervals = tuple((coord[(0, v)], coord[(1, v)]) for v in range(p.n))
    rebuilt = interval_order(intervals)
    assert rebuilt.up == p.up, "interval realization failed to reproduce the order"
    return intervals


def tableau_from_witness(
    p: FinitePoset, downset: Partition, mapping: Iterable[int]
) -> SchroderTableau:
    """Build a tableau whose interval set induces ``p``: a twin pair per cell
    of ``downset``, filled with the endpoints of the mapped element's interval.

    The output has no lonely cells and is standard.
    """
    mapping = tuple(mapping)
    cells = downset_cells(downset)
    if sorted(mapping) != list(range(1, p.n + 1)) or len(cells) != p.n:
        raise ValueError("mapping must be a bijection from the down-set onto p")
    for i, (r1, c1) in enumerate(cells):
        for j, (r2, c2) in enumerate(cells):
            if (r1, c1) != (r2, c2) and r1 <= r2 and c1 <= c2:
                if not p.less(mapping[i], mapping[j]):
                    raise ValueError("mapping is not order-preserving")
    intervals = realize_intervals(p)
    rows = []
    for r, length in enumerate(downset):
        row = []
        for c in range(length):
            a, b = intervals[mapping[cells.index((r + 1, c + 1))] - 1]
            row.extend([a, b])
        rows.append(tuple(row))
    shape = tuple(2 * part for part in downset)
    t = SchroderTableau(shape, tuple(rows))
    assert is_standard(t), "witness construction produced a non-standard filling"
    assert not lonely_cells(t.shape)
    return t
