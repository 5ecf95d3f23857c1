"""Integer partitions, the simple-odd-parts predicate, column cluster maps,
enumeration and the product generating function.

A partition is represented as a tuple of weakly decreasing positive ints;
the empty tuple is the partition of 0.  All functions are pure.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Iterable, Iterator

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable to a partition tuple, raising ValueError if invalid."""
    p = tuple(parts)
    for i, part in enumerate(p):
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"parts must be positive integers, got {part!r}")
        if i > 0 and p[i - 1] < part:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def order(p: Partition) -> int:
    """Number of cells, i.e. the sum of the parts."""
    return sum(p)


def is_schroeder(p: Partition) -> bool:
    """True iff every odd part of ``p`` occurs exactly once."""
    seen = set()
    for part in p:
        if part % 2:
            if part in seen:
                return False
            seen.add(part)
    return True


def check_schroeder(p: Iterable[int]) -> Partition:
    """Validate that ``p`` is a partition with simple odd parts."""
    parts = check_partition(p)
    if not is_schroeder(parts):
        raise ValueError(f"odd parts must be simple, got {parts}")
    return parts


def conjugate(p: Partition) -> Partition:
    """Exchange rows and columns of the diagram."""
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def cluster_map(p: Partition, n: int) -> Partition:
    """Sum the column lengths of ``p`` in consecutive blocks of ``n``.

    The i-th part of the result is the total number of cells in columns
    (i-1)*n+1 .. i*n of the diagram of ``p``.  For n=1 this is conjugation.
    The total number of cells is preserved.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cols = conjugate(p)
    return tuple(
        s for s in (sum(cols[i : i + n]) for i in range(0, len(cols), n)) if s
    )


def satisfies_cn_condition(p: Partition, n: int) -> bool:
    """True iff for every k >= 0 at most one part lies strictly between k*n and (k+1)*n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    strict_blocks = set()
    for part in p:
        if part % n:
            k = part // n
            if k in strict_blocks:
                return False
            strict_blocks.add(k)
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("order must be >= 0")
    if max_part is None or max_part > n:
        max_part = n

    def rec(remaining: int, bound: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(bound, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def enumerate_schroeder_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` with simple odd parts, lexicographically decreasing."""
    return [p for p in partitions_of(n) if is_schroeder(p)]


@lru_cache(maxsize=None)
def count_schroeder_partitions(n: int) -> int:
    return len(enumerate_schroeder_partitions(n))


def gf_coefficients(max_order: int) -> list[int]:
    """Coefficients of x^0..x^max_order of prod_{k>0} (1+x^(2k-1))/(1-x^(2k)).

    Computed with exact integer truncated power-series arithmetic.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    coeffs = [0] * (max_order + 1)
    coeffs[0] = 1
    for k in range(1, max_order + 1):
        odd = 2 * k - 1
        if odd <= max_order:
            # multiply by (1 + x^odd)
            for i in range(max_order, odd - 1, -1):
                coeffs[i] += coeffs[i - odd]
        even = 2 * k
        if even <= max_order:
            # divide by (1 - x^even), i.e. multiply by 1 + x^even + x^(2 even) + ...
            for i in range(even, max_order + 1):
                coeffs[i] += coeffs[i - even]
        if odd > max_order and even > max_order:
            break
    return coeffs


def unbounded(_: int) -> float:
    """Multiplicity bound allowing any number of repetitions."""
    return math.inf


def schroeder_multiplicity(part: int) -> float:
    """Multiplicity bound of the simple-odd-parts class: 1 for odd, unbounded for even."""
    return 1 if part % 2 else math.inf


def is_in_multiplicity_class(
    p: Partition, f: Callable[[int], float] = unbounded
) -> bool:
    """True iff every part value ``i`` occurs at most ``f(i)`` times in ``p``."""
    counts: dict[int, int] = {}
    for part in p:
        counts[part] = counts.get(part, 0) + 1
    return all(count <= f(value) for value, count in counts.items())


def format_partition(p: Partition) -> str:
    """Serialize as a comma-separated part list; the empty partition is ''."""
    return ",".join(str(part) for part in p)


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list; '' denotes the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return check_partition(parts)
