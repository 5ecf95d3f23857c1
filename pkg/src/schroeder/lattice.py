"""The distributive lattice of partitions with simple odd parts.

Comparison is componentwise containment of diagrams.  Cover relations are
computed from the up-free/down-free classification of parts:

* every odd part is both up-free and down-free;
* an even part ``p[i]`` is up-free when the part above it (infinity for the
  first part) is neither ``p[i]`` nor ``p[i]+1``, and down-free when the part
  below it (0 for the last part) is neither ``p[i]`` nor ``p[i]-1``;
* a new part 1 may be appended exactly when the current last part is not 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .partitions import Partition, check_schroeder, is_schroeder


class CoverSets(NamedTuple):
    up_covers: tuple[Partition, ...]
    down_covers: tuple[Partition, ...]


def leq(a: Partition, b: Partition) -> bool:
    """True iff the diagram of ``a`` fits inside the diagram of ``b``."""
    return len(a) <= len(b) and all(x <= y for x, y in zip(a, b))


def join(a: Partition, b: Partition) -> Partition:
    """Partwise maximum.  Inputs must have simple odd parts; so does the result."""
    a = check_schroeder(a)
    b = check_schroeder(b)
    if len(a) < len(b):
        a, b = b, a
    result = tuple(max(x, y) for x, y in zip(a, b)) + a[len(b) :]
    assert is_schroeder(result), f"join closure violated: {a} v {b} = {result}"
    return result


def meet(a: Partition, b: Partition) -> Partition:
    """Partwise minimum, truncated to the common length."""
    a = check_schroeder(a)
    b = check_schroeder(b)
    result = tuple(min(x, y) for x, y in zip(a, b))
    assert is_schroeder(result), f"meet closure violated: {a} ^ {b} = {result}"
    return result


def _up_free_indices(p: Partition) -> list[int]:
    free = []
    for i, part in enumerate(p):
        if part % 2:
            free.append(i)
        else:
            above = p[i - 1] if i > 0 else None
            if above is None or above not in (part, part + 1):
                free.append(i)
    return free


def _down_free_indices(p: Partition) -> list[int]:
    free = []
    for i, part in enumerate(p):
        if part % 2:
            free.append(i)
        else:
            below = p[i + 1] if i + 1 < len(p) else 0
            if below not in (part, part - 1):
                free.append(i)
    return free


def covers(p: Partition) -> CoverSets:
    """Up and down covers of ``p`` in the lattice.

    Up covers add 1 to an up-free part (or append a new part 1 when allowed);
    down covers subtract 1 from a down-free part.
    """
    p = check_schroeder(p)
    ups = []
    for i in _up_free_indices(p):
        q = p[:i] + (p[i] + 1,) + p[i + 1 :]
        ups.append(q)
    if not p or p[-1] != 1:
        ups.append(p + (1,))
    downs = []
    for i in _down_free_indices(p):
        if p[i] == 1:
            q = p[:i] + p[i + 1 :]
        else:
            q = p[:i] + (p[i] - 1,) + p[i + 1 :]
        downs.append(q)
    ups = sorted(set(ups), reverse=True)
    downs = sorted(set(downs), reverse=True)
    for q in ups + downs:
        assert is_schroeder(q), f"cover of {p} is not valid: {q}"
    return CoverSets(tuple(ups), tuple(downs))


@lru_cache(maxsize=None)
def count_chains(p: Partition) -> int:
    """Number of saturated chains from the empty partition up to ``p``."""
    p = check_schroeder(p)
    if not p:
        return 1
    return sum(count_chains(q) for q in covers(p).down_covers)


@dataclass
class DifferentialReport:
    """Outcome of sweeping the cover-degree bounds and the common-cover condition."""

    max_order: int
    partitions_checked: int = 0
    pairs_checked: int = 0
    violations: list[str] = field(default_factory=list)
    lower_bound_witness: Partition | None = None
    upper_bound_witness: Partition | None = None
    min_slack_low: int | None = None
    min_slack_high: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_differential(max_order: int) -> DifferentialReport:
    """Check for every nonempty valid partition of order <= max_order that the
    number of up covers l and down covers k satisfy ceil((k+1)/2) <= l <= 2k,
    and that distinct partitions of equal order have as many common up covers
    as common down covers.
    """
    from .partitions import enumerate_schroeder_partitions

    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    report = DifferentialReport(max_order=max_order)
    for n in range(1, max_order + 1):
        layer = enumerate_schroeder_partitions(n)
        layer_covers = {p: covers(p) for p in layer}
        for p, cs in layer_covers.items():
            k = len(cs.down_covers)
            l = len(cs.up_covers)
            low = (k + 2) // 2  # ceil((k+1)/2)
            high = 2 * k
            report.partitions_checked += 1
            slack_low = l - low
            slack_high = high - l
            if report.min_slack_low is None or slack_low < report.min_slack_low:
                report.min_slack_low = slack_low
            if slack_low == 0 and report.lower_bound_witness is None:
                report.lower_bound_witness = p
            if report.min_slack_high is None or slack_high < report.min_slack_high:
                report.min_slack_high = slack_high
            if slack_high == 0 and report.upper_bound_witness is None:
                report.upper_bound_witness = p
            if not low <= l <= high:
                report.violations.append(
                    f"degree bounds fail at {p}: k={k}, l={l}, want [{low},{high}]"
                )
        for i, p in enumerate(layer):
            ups_p = set(layer_covers[p].up_covers)
            downs_p = set(layer_covers[p].down_covers)
            for q in layer[i + 1 :]:
                common_up = len(ups_p & set(layer_covers[q].up_covers))
                common_down = len(downs_p & set(layer_covers[q].down_covers))
                report.pairs_checked += 1
                if common_up != common_down:
                    report.violations.append(
                        f"common covers differ for {p}, {q}: "
                        f"{common_down} below vs {common_up} above"
                    )
    return report
