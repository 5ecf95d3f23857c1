"""Permutation insertion algorithms, patterns, shuffles and shape classification."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .errors import LimitError
from .partitions import Partition
from .tableaux import (
    SchroderTableau,
    is_hook_shape,
    is_single_column_shape,
    is_single_row_shape,
)

Permutation = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]

AV_LIMIT = 9


def check_permutation(values: Iterable[int]) -> Permutation:
    p = tuple(values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_permutation(text: str) -> Permutation:
    """Parse a permutation given as a digit string (n <= 9) or comma-separated."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        values = [int(tok) for tok in text.split(",")]
    else:
        values = [int(ch) for ch in text]
    return check_permutation(values)


def format_permutation(p: Permutation) -> str:
    if p and max(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def rs_insert(p: Sequence[int]) -> tuple[Rows, Rows]:
    """Classical row insertion: (insertion tableau, recording tableau) rows."""
    p = check_permutation(p)
    return _kernels.rs_rows(p)


def sch_insert(p: Sequence[int]) -> tuple[SchroderTableau, SchroderTableau]:
    """Triangular-cell insertion: (insertion tableau, recording tableau)."""
    p = check_permutation(p)
    p_rows, q_rows = _kernels.sch_rows(p)
    shape = tuple(len(r) for r in p_rows)
    return SchroderTableau(shape, p_rows), SchroderTableau(shape, q_rows)


def sch_shape(p: Sequence[int]) -> Partition:
    """Shape of the insertion tableau of ``p``."""
    rows, _ = _kernels.sch_rows(tuple(p))
    return tuple(len(r) for r in rows)


def contains_pattern(t: Sequence[int], s: Sequence[int]) -> bool:
    """True iff some subsequence of ``t`` is order-isomorphic to ``s``."""
    return _kernels.contains_pattern(tuple(t), tuple(s))


def avoids(t: Sequence[int], *patterns: Sequence[int]) -> bool:
    """True iff ``t`` contains none of the given patterns."""
    t = tuple(t)
    return not any(_kernels.contains_pattern(t, tuple(s)) for s in patterns)


def enumerate_av(
    n: int, patterns: Sequence[Sequence[int]], limit: int = AV_LIMIT
) -> int:
    """Number of permutations of length ``n`` avoiding all ``patterns``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise LimitError(f"n={n} exceeds limit {limit}")
    pats = [tuple(s) for s in patterns]
    return sum(
        1
        for perm in permutations(range(1, n + 1))
        if not any(_kernels.contains_pattern(perm, s) for s in pats)
    )


def pattern_of(values: Sequence[int]) -> Permutation:
    """Relabel a sequence of distinct values to the permutation of its ranks."""
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


def single_row_predicate(p: Sequence[int]) -> bool:
    """Positions 2i+1, 2i+2 hold exactly the values 2i+1, 2i+2 (the final
    element equals n when n is odd)."""
    return _kernels.single_row_predicate(tuple(p))


def single_column_predicate(p: Sequence[int]) -> bool:
    """True iff ``p`` avoids both 123 and 213."""
    return avoids(p, (1, 2, 3), (2, 1, 3))


def _rooted_split_exists(p: Permutation, s: Permutation, t: Permutation, k: int) -> bool:
    """Decide whether positions k.. of ``p`` split into two subsequences that,
    prefixed with p[:k], are order-isomorphic to ``s`` and ``t``."""
    n = len(p)
    cs = list(p[:k])
    ct = list(p[:k])

    def extends(pattern: Permutation, chosen: list[int], v: int) -> bool:
        m = len(chosen)
        return all((pattern[i] < pattern[m]) == (chosen[i] < v) for i in range(m))

    def rec(pos: int) -> bool:
        if pos == n:
            return True
        v = p[pos]
        if len(cs) < len(s) and extends(s, cs, v):
            cs.append(v)
            if rec(pos + 1):
                return True
            cs.pop()
        if len(ct) < len(t) and extends(t, ct, v):
            ct.append(v)
            if rec(pos + 1):
                return True
            ct.pop()
        return False

    return rec(k)


def is_shuffle(p: Sequence[int], s: Sequence[int], t: Sequence[int]) -> bool:
    """True iff ``p`` is covered by two disjoint subsequences order-isomorphic
    to ``s`` and ``t``."""
    p, s, t = check_permutation(p), check_permutation(s), check_permutation(t)
    if len(p) != len(s) + len(t):
        raise ValueError(f"length mismatch: {len(p)} != {len(s)} + {len(t)}")
    return _rooted_split_exists(p, s, t, 0)


def is_k_rooted_shuffle(
    p: Sequence[int], s: Sequence[int], t: Sequence[int], k: int
) -> bool:
    """True iff ``p`` starts with the common k-element root pattern of ``s``
    and ``t`` and its remainder is a shuffle of their suffixes (root positions
    are shared by both copies)."""
    p, s, t = check_permutation(p), check_permutation(s), check_permutation(t)
    if k < 0 or k > min(len(s), len(t)):
        raise ValueError(f"invalid root size k={k}")
    if len(p) != len(s) + len(t) - k:
        raise ValueError(f"length mismatch: {len(p)} != {len(s)} + {len(t)} - {k}")
    if pattern_of(s[:k]) != pattern_of(t[:k]):
        raise ValueError("the k-element prefixes of s and t are not order-isomorphic")
    if pattern_of(p[:k]) != pattern_of(s[:k]):
        return False
    return _rooted_split_exists(p, s, t, k)


def has_hook_decomposition(p: Sequence[int]) -> bool:
    """True iff ``p`` is a 2-rooted shuffle of a permutation satisfying the
    single-row predicate and one satisfying the single-column predicate."""
    p = check_permutation(p)
    n = len(p)
    if n < 2:
        return False
    root_max = max(p[0], p[1])
    suffix = p[2:]
    m = n - 2
    # The row side must keep the root as its two smallest values, so only
    # suffix entries above both root values may join it.
    eligible = [i for i in range(m) if suffix[i] > root_max]
    for mask in range(1 << len(eligible)):
        picked = {eligible[b] for b in range(len(eligible)) if mask >> b & 1}
        s_vals = list(p[:2]) + [suffix[i] for i in eligible if i in picked]
        t_vals = list(p[:2]) + [suffix[i] for i in range(m) if i not in picked]
        if _kernels.single_row_predicate(pattern_of(s_vals)) and single_column_predicate(
            pattern_of(t_vals)
        ):
            return True
    return False


def classify_shape(p: Sequence[int]) -> str:
    """Classify the insertion shape family of ``p`` from predicates alone:
    ``single_row``, ``single_column``, ``hook`` or ``other``."""
    p = check_permutation(p)
    if single_row_predicate(p):
        return "single_row"
    if single_column_predicate(p):
        return "single_column"
    if has_hook_decomposition(p):
        return "hook"
    return "other"


def shape_class(shape: Partition) -> str:
    """Classify an insertion shape geometrically, mirroring classify_shape."""
    if is_single_row_shape(shape):
        return "single_row"
    if is_single_column_shape(shape):
        return "single_column"
    if is_hook_shape(shape):
        return "hook"
    return "other"


def is_standard_young(rows: Rows) -> bool:
    """True iff the rows form a standard Young tableau: a partition shape
    filled bijectively with 1..n, increasing along rows and down columns."""
    shape = tuple(len(r) for r in rows)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        return False
    entries = sorted(x for row in rows for x in row)
    if entries != list(range(1, sum(shape) + 1)):
        return False
    for row in rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for i in range(len(rows) - 1):
        if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
            return False
    return True


def enumerate_standard_young(shape: Partition) -> Iterator[Rows]:
    """Yield the rows of every standard Young tableau of ``shape`` by direct
    placement of 1..n."""
    n = sum(shape)
    filled = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(value: int) -> Iterator[Rows]:
        if value > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(len(shape)):
            p = filled[i] + 1
            if p > shape[i]:
                continue
            if i > 0 and filled[i - 1] < p:
                continue
            filled[i] += 1
            rows[i].append(value)
            yield from rec(value + 1)
            filled[i] -= 1
            rows[i].pop()

    yield from rec(1)


@lru_cache(maxsize=None)
def count_standard_young(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape``, by enumeration."""
    return sum(1 for _ in enumerate_standard_young(shape))
