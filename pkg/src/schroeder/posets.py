"""Finite posets: canonical forms, enumeration, weak containment and strong
avoidance, and the poset of unlabeled posets ordered by weak containment.

Elements are 1..n in the public API; relations are strict pairs (i, j)
meaning i < j.  Internally each poset stores, per element, bitmasks of the
elements strictly above and strictly below it; relations are always
transitively closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import LimitError

SIZE_LIMIT = 6

Masks = tuple[int, ...]


def _closure(n: int, up: list[int]) -> list[int]:
    changed = True
    while changed:
        changed = False
        for i in range(n):
            mask = up[i]
            extra = 0
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                extra |= up[j]
            if extra & ~mask:
                up[i] = mask | extra
                changed = True
    return up


def _down_masks(n: int, up: Masks) -> Masks:
    down = [0] * n
    for i in range(n):
        m = up[i]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            down[j] |= 1 << i
    return tuple(down)


class FinitePoset:
    """An immutable strict partial order on the ground set 1..n."""

    __slots__ = ("n", "up", "down", "_canon")

    def __init__(self, n: int, strict_pairs: Iterable[tuple[int, int]] = ()):
        up = [0] * n
        for i, j in strict_pairs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"element out of range in pair ({i}, {j})")
            if i == j:
                raise ValueError(f"reflexive pair ({i}, {j}) not allowed")
            up[i - 1] |= 1 << (j - 1)
        _closure(n, up)
        for i in range(n):
            if up[i] >> i & 1:
                raise ValueError("relation has a cycle (antisymmetry violated)")
        self.n = n
        self.up = tuple(up)
        self.down = _down_masks(n, self.up)
        self._canon: Masks | None = None

    @classmethod
    def _from_masks(cls, n: int, up: Masks) -> "FinitePoset":
        self = object.__new__(cls)
        self.n = n
        self.up = up
        self.down = _down_masks(n, up)
        self._canon = None
        return self

    def less(self, i: int, j: int) -> bool:
        """True iff element i is strictly below element j."""
        return bool(self.up[i - 1] >> (j - 1) & 1)

    def strict_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            sorted(
                (i + 1, j + 1)
                for i in range(self.n)
                for j in range(self.n)
                if self.up[i] >> j & 1
            )
        )

    def pair_count(self) -> int:
        return sum(m.bit_count() for m in self.up)

    def canonical_form(self) -> tuple:
        """Isomorphism-complete invariant: equal forms iff isomorphic posets."""
        if self._canon is None:
            self._canon = _canonical_masks(self.n, self.up)
        return (self.n, self._canon)

    def canonical(self) -> "FinitePoset":
        """The canonically relabeled copy of this poset."""
        return FinitePoset._from_masks(self.n, self.canonical_form()[1])

    def isomorphic(self, other: "FinitePoset") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self.n == other.n
            and self.up == other.up
        )

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        return f"FinitePoset({self.n}, {list(self.strict_pairs())})"


def _refine_colors(n: int, up: Masks, down: Masks) -> list[int]:
    color = [0] * n
    while True:
        keys = []
        for v in range(n):
            up_colors = sorted(color[j] for j in _bits(up[v]))
            down_colors = sorted(color[j] for j in _bits(down[v]))
            keys.append((color[v], tuple(up_colors), tuple(down_colors)))
        ranks = {key: r for r, key in enumerate(sorted(set(keys)))}
        new_color = [ranks[k] for k in keys]
        if new_color == color:
            return color
        color = new_color


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _canonical_masks(n: int, up: Masks) -> Masks:
    if n <= 1:
        return up
    down = _down_masks(n, up)
    color = _refine_colors(n, up, down)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(color):
        classes.setdefault(c, []).append(v)
    slots: list[list[int]] = [classes[c] for c in sorted(classes)]

    best: Masks | None = None
    position = [0] * n  # position[v] = new label of vertex v

    def assign(slot_idx: int, offset: int):
        nonlocal best
        if slot_idx == len(slots):
            code = [0] * n
            for v in range(n):
                mask = 0
                for j in _bits(up[v]):
                    mask |= 1 << position[j]
                code[position[v]] = mask
            candidate = tuple(code)
            if best is None or candidate < best:
                best = candidate
            return
        members = slots[slot_idx]
        for order_perm in permutations(members):
            for k, v in enumerate(order_perm):
                position[v] = offset + k
            assign(slot_idx + 1, offset + len(members))

    assign(0, 0)
    assert best is not None
    return best


def poset_from_json(data: dict) -> FinitePoset:
    if not isinstance(data, dict) or "size" not in data:
        raise ValueError("poset JSON must be an object with 'size' and 'relations'")
    pairs = [tuple(pair) for pair in data.get("relations", [])]
    if any(len(pair) != 2 for pair in pairs):
        raise ValueError("relations must be pairs")
    return FinitePoset(int(data["size"]), pairs)


def poset_to_json(p: FinitePoset) -> dict:
    return {"size": p.n, "relations": [list(pair) for pair in p.strict_pairs()]}


# ---------------------------------------------------------------------------
# small constructors

def chain(n: int) -> FinitePoset:
    return FinitePoset(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n, [])


def vee() -> FinitePoset:
    """One minimum below two incomparable maxima."""
    return FinitePoset(3, [(1, 2), (1, 3)])


def wedge() -> FinitePoset:
    """Two incomparable minima below one maximum."""
    return FinitePoset(3, [(1, 3), (2, 3)])


def single_cover(n: int) -> FinitePoset:
    """1 < 2 plus n-2 isolated elements."""
    if n < 2:
        raise ValueError("single cover poset needs size >= 2")
    return FinitePoset(n, [(1, 2)])


def two_plus_two() -> FinitePoset:
    return FinitePoset(4, [(1, 2), (3, 4)])


def disjoint_union(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    pairs = list(p.strict_pairs()) + [(i + p.n, j + p.n) for i, j in q.strict_pairs()]
    return FinitePoset(p.n + q.n, pairs)


def linear_sum(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    pairs = list(p.strict_pairs()) + [(i + p.n, j + p.n) for i, j in q.strict_pairs()]
    pairs += [(i, j + p.n) for i in range(1, p.n + 1) for j in range(1, q.n + 1)]
    return FinitePoset(p.n + q.n, pairs)


def induced_subposet(p: FinitePoset, elements: Sequence[int]) -> FinitePoset:
    """Restriction of ``p`` to the given elements, relabeled 1..k in sorted order."""
    elems = sorted(set(elements))
    index = {e: i + 1 for i, e in enumerate(elems)}
    pairs = [
        (index[i], index[j])
        for i in elems
        for j in elems
        if i != j and p.less(i, j)
    ]
    return FinitePoset(len(elems), pairs)


# ---------------------------------------------------------------------------
# structural operations

def connected_components(p: FinitePoset) -> list[list[int]]:
    """Components of the comparability graph, each sorted, ordered by minimum."""
    adj = [p.up[i] | p.down[i] for i in range(p.n)]
    seen = 0
    components = []
    for start in range(p.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            new = 0
            for v in _bits(frontier):
                new |= adj[v]
            frontier = new & ~comp
            comp |= new
        seen |= comp
        components.append([v + 1 for v in _bits(comp)])
    return components


def is_connected(p: FinitePoset) -> bool:
    return p.n <= 1 or len(connected_components(p)) == 1


def height(p: FinitePoset) -> int:
    """Maximum cardinality of a chain."""
    memo = [0] * p.n
    for v in sorted(range(p.n), key=lambda v: p.down[v].bit_count()):
        memo[v] = 1 + max((memo[w] for w in _bits(p.down[v])), default=0)
    return max(memo, default=0)


def is_flat(p: FinitePoset) -> bool:
    """True iff ``p`` is an antichain with one added maximum."""
    if p.n == 0:
        return False
    tops = [v for v in range(p.n) if p.up[v] == 0]
    if len(tops) != 1:
        return False
    top = tops[0]
    full = (1 << p.n) - 1
    if p.down[top] != full ^ (1 << top):
        return False
    return all(
        v == top or (p.up[v] == 1 << top and p.down[v] == 0) for v in range(p.n)
    )


def is_disjoint_union_of_flats(p: FinitePoset) -> bool:
    return all(is_flat(induced_subposet(p, comp)) for comp in connected_components(p))


def is_weakly_below(p: FinitePoset, first: Iterable[int], second: Iterable[int]) -> bool:
    """True iff no element of ``first`` is >= any element of ``second``."""
    fs, ss = set(first), set(second)
    return not any(x == y or p.less(y, x) for x in fs for y in ss)


def is_below(p: FinitePoset, first: Iterable[int], second: Iterable[int]) -> bool:
    """True iff every element of ``first`` is <= every element of ``second``."""
    fs, ss = set(first), set(second)
    return all(x != y and p.less(x, y) for x in fs for y in ss)


# ---------------------------------------------------------------------------
# pattern containment

def _embedding_exists(host: FinitePoset, pat: FinitePoset, induced: bool) -> bool:
    if pat.n > host.n:
        return False
    if pat.n == 0:
        return True
    order = sorted(
        range(pat.n),
        key=lambda v: -(pat.up[v].bit_count() + pat.down[v].bit_count()),
    )
    image = [0] * pat.n  # image[k] = host vertex assigned to order[k]
    used = [False] * host.n

    def feasible(v: int, w: int) -> bool:
        if pat.up[v].bit_count() > host.up[w].bit_count():
            return False
        if pat.down[v].bit_count() > host.down[w].bit_count():
            return False
        return True

    def rec(k: int) -> bool:
        if k == pat.n:
            return True
        v = order[k]
        for w in range(host.n):
            if used[w] or not feasible(v, w):
                continue
            ok = True
            for t in range(k):
                u = order[t]
                x = image[t]
                pat_uv = pat.up[u] >> v & 1
                pat_vu = pat.up[v] >> u & 1
                host_xw = host.up[x] >> w & 1
                host_wx = host.up[w] >> x & 1
                if pat_uv and not host_xw:
                    ok = False
                elif pat_vu and not host_wx:
                    ok = False
                elif induced and not pat_uv and not pat_vu and (host_xw or host_wx):
                    ok = False
                if not ok:
                    break
            if ok:
                image[k] = w
                used[w] = True
                if rec(k + 1):
                    used[w] = False
                    return True
                used[w] = False
        return False

    return rec(0)


def contains_induced(q: FinitePoset, p: FinitePoset) -> bool:
    """True iff ``p`` embeds into ``q`` order-preservingly and order-reflectingly."""
    return _embedding_exists(q, p, induced=True)


def weakly_contains(q: FinitePoset, p: FinitePoset) -> bool:
    """True iff an injective order-preserving map p -> q exists."""
    return _embedding_exists(q, p, induced=False)


def strongly_avoids(q: FinitePoset, p: FinitePoset) -> bool:
    """True iff ``q`` does not weakly contain ``p``."""
    return not weakly_contains(q, p)


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _labeled_masks(n: int) -> tuple[Masks, ...]:
    if n == 0:
        return ((),)
    result = []
    bit_new = 1 << (n - 1)
    for smaller in _labeled_masks(n - 1):
        up = list(smaller)
        down = _down_masks(n - 1, smaller)
        subsets = range(1 << (n - 1))
        ideals = [s for s in subsets if all(down[v] & ~s == 0 for v in _bits(s))]
        filters = [s for s in subsets if all(up[v] & ~s == 0 for v in _bits(s))]
        for d in ideals:
            for u in filters:
                if d & u:
                    continue
                if any(u & ~up[v] for v in _bits(d)):
                    continue
                new_up = [up[v] | (bit_new if d >> v & 1 else 0) for v in range(n - 1)]
                new_up.append(u)
                result.append(tuple(new_up))
    return tuple(result)


@lru_cache(maxsize=None)
def _unlabeled_masks(n: int) -> tuple[Masks, ...]:
    if n == 0:
        return ((),)
    seen: set[Masks] = set()
    bit_new = 1 << (n - 1)
    for smaller in _unlabeled_masks(n - 1):
        up = list(smaller)
        down = _down_masks(n - 1, smaller)
        subsets = range(1 << (n - 1))
        ideals = [s for s in subsets if all(down[v] & ~s == 0 for v in _bits(s))]
        filters = [s for s in subsets if all(up[v] & ~s == 0 for v in _bits(s))]
        for d in ideals:
            for u in filters:
                if d & u:
                    continue
                if any(u & ~up[v] for v in _bits(d)):
                    continue
                new_up = [up[v] | (bit_new if d >> v & 1 else 0) for v in range(n - 1)]
                new_up.append(u)
                seen.add(_canonical_masks(n, tuple(new_up)))
    return tuple(sorted(seen))


def enumerate_posets(
    n: int, labeled: bool = True, limit: int = SIZE_LIMIT
) -> list[FinitePoset]:
    """All posets on 1..n (labeled) or one canonical representative per
    isomorphism class (unlabeled), in a fixed deterministic order."""
    if n < 0:
        raise ValueError("size must be >= 0")
    if n > limit:
        raise LimitError(f"size {n} exceeds limit {limit}")
    masks = _labeled_masks(n) if labeled else _unlabeled_masks(n)
    return [FinitePoset._from_masks(n, up) for up in masks]


def upset_in_Xn(p: FinitePoset, limit: int = SIZE_LIMIT) -> list[FinitePoset]:
    """The size-|p| unlabeled posets weakly containing ``p`` (canonical
    representatives, deterministic order)."""
    if p.n > limit:
        raise LimitError(f"size {p.n} exceeds limit {limit}")
    return [q for q in enumerate_posets(p.n, labeled=False, limit=limit)
            if weakly_contains(q, p)]


@dataclass(frozen=True)
class WeakPatternPoset:
    """All unlabeled posets of one size, ordered by weak containment."""

    n: int
    elements: tuple[FinitePoset, ...]
    leq: tuple[tuple[bool, ...], ...]
    hasse_edges: tuple[tuple[int, int], ...]

    def minimum(self) -> int:
        (m,) = [i for i in range(len(self.elements)) if self._downset_size(i) == 1]
        return m

    def maximum(self) -> int:
        (m,) = [
            i
            for i in range(len(self.elements))
            if sum(self.leq[i][j] for j in range(len(self.elements))) == 1
        ]
        return m

    def atoms(self) -> list[int]:
        bottom = self.minimum()
        return [j for i, j in self.hasse_edges if i == bottom]

    def _downset_size(self, i: int) -> int:
        return sum(self.leq[j][i] for j in range(len(self.elements)))


def build_weak_pattern_poset(n: int, limit: int = SIZE_LIMIT) -> WeakPatternPoset:
    if n > limit:
        raise LimitError(f"size {n} exceeds limit {limit}")
    elements = tuple(enumerate_posets(n, labeled=False, limit=limit))
    k = len(elements)
    leq = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                leq[i][j] = True
            else:
                leq[i][j] = weakly_contains(elements[j], elements[i])
    edges = []
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i][j]:
                continue
            if any(leq[i][m] and leq[m][j] for m in range(k) if m != i and m != j):
                continue
            edges.append((i, j))
    return WeakPatternPoset(
        n=n,
        elements=elements,
        leq=tuple(tuple(row) for row in leq),
        hasse_edges=tuple(sorted(edges)),
    )


def sav_count(
    n: int, pattern: FinitePoset, labeled: bool = True, limit: int = SIZE_LIMIT
) -> int:
    """Number of size-n posets in the chosen mode strongly avoiding ``pattern``."""
    return sum(
        1
        for q in enumerate_posets(n, labeled=labeled, limit=limit)
        if strongly_avoids(q, pattern)
    )
