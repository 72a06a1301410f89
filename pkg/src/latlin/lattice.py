"""Finite lattices with dense order and operation tables.

Elements are the integers ``0..n-1``. The order is held as one bitmask per
element (bit ``y`` of ``up[x]`` is set iff ``x <= y``), and joins and meets are
precomputed ``n x n`` tables, so every downstream predicate is a table lookup.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from latlin._scan import least_witness
from latlin.errors import CycleDetected, InputError, NoBottom, NotALattice, NotComparable, NoTop
from latlin.report import CheckReport


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    size: int
    down: tuple[int, ...]
    up: tuple[int, ...]
    join_table: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    covers: tuple[tuple[int, int], ...]
    heights: tuple[int, ...]
    labels: tuple[str, ...]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.size == other.size and self.down == other.down and self.labels == other.labels

    def __hash__(self):
        return hash((self.size, self.down))

    def __repr__(self):
        return f"FiniteLattice(size={self.size}, covers={len(self.covers)})"

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.up[x] >> y & 1)

    def is_cover(self, x: int, y: int) -> bool:
        """True iff ``y`` covers ``x``."""
        return x != y and popcount(self.up[x] & self.down[y]) == 2

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def below(self, x: int) -> list[int]:
        return list(_bits(self.down[x]))

    def above(self, x: int) -> list[int]:
        return list(_bits(self.up[x]))

    def label(self, x: int) -> str:
        return self.labels[x]


def build_from_covers(n: int, covers: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> FiniteLattice:
    """Build a lattice from Hasse-diagram data.

    ``covers`` may contain any pairs generating the order (redundant
    transitive pairs are tolerated); ``FiniteLattice.covers`` holds the true
    cover relation of the result. Element ids are kept as given.
    """
    if n < 1:
        raise InputError("a lattice needs at least one element")
    pairs = set()
    for pair in covers:
        lo, hi = (int(v) for v in pair)
        for v in (lo, hi):
            if not 0 <= v < n:
                raise InputError(f"element id {v} out of range 0..{n - 1}")
        if lo == hi:
            raise CycleDetected((lo, lo))
        pairs.add((lo, hi))
    if labels is None:
        labels = [str(i) for i in range(n)]
    elif len(labels) != n:
        raise InputError(f"expected {n} labels, got {len(labels)}")

    uppers = [[] for _ in range(n)]
    lowers = [[] for _ in range(n)]
    for lo, hi in sorted(pairs):
        uppers[lo].append(hi)
        lowers[hi].append(lo)

    order = _topological_order(n, uppers, lowers)
    pos = [0] * n
    for i, x in enumerate(order):
        pos[x] = i

    down = [0] * n
    for x in order:
        down[x] = reduce(lambda m, lo: m | down[lo], lowers[x], 1 << x)
    up = [0] * n
    for x in reversed(order):
        up[x] = reduce(lambda m, hi: m | up[hi], uppers[x], 1 << x)

    full = (1 << n) - 1
    bottoms = [x for x in range(n) if up[x] == full]
    if not bottoms:
        raise NoBottom()
    tops = [x for x in range(n) if down[x] == full]
    if not tops:
        raise NoTop()

    # The same bitmasks re-indexed by topological position: the least upper
    # bound, if any, is then the lowest set bit of the common up-set.
    up_pos = [_reindex(up[x], pos) for x in range(n)]
    down_pos = [_reindex(down[x], pos) for x in range(n)]

    join_table = [[0] * n for _ in range(n)]
    meet_table = [[0] * n for _ in range(n)]
    for x in range(n):
        join_table[x][x] = meet_table[x][x] = x
        for y in range(x + 1, n):
            common = up_pos[x] & up_pos[y]
            j = order[(common & -common).bit_length() - 1]
            if up_pos[j] != common:
                raise NotALattice(x, y, "join")
            common = down_pos[x] & down_pos[y]
            m = order[common.bit_length() - 1]
            if down_pos[m] != common:
                raise NotALattice(x, y, "meet")
            join_table[x][y] = join_table[y][x] = j
            meet_table[x][y] = meet_table[y][x] = m

    hasse = tuple(
        (lo, hi) for lo in range(n) for hi in _bits(up[lo]) if hi != lo and popcount(up[lo] & down[hi]) == 2
    )
    heights = [0] * n
    for x in order:
        heights[x] = max((heights[lo] + 1 for lo, hi in hasse if hi == x), default=0)

    return FiniteLattice(
        size=n,
        down=tuple(down),
        up=tuple(up),
        join_table=tuple(map(tuple, join_table)),
        meet_table=tuple(map(tuple, meet_table)),
        bottom=bottoms[0],
        top=tops[0],
        covers=hasse,
        heights=tuple(heights),
        labels=tuple(str(s) for s in labels),
    )


def _reindex(mask, pos):
    out = 0
    for b in _bits(mask):
        out |= 1 << pos[b]
    return out


def _topological_order(n, uppers, lowers):
    indeg = [len(lowers[x]) for x in range(n)]
    ready = [x for x in range(n) if indeg[x] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        x = heapq.heappop(ready)
        order.append(x)
        for hi in uppers[x]:
            indeg[hi] -= 1
            if indeg[hi] == 0:
                heapq.heappush(ready, hi)
    if len(order) < n:
        raise CycleDetected(_find_cycle(n, uppers, set(order)))
    return order


def _find_cycle(n, uppers, acyclic):
    state = {}
    stack = []

    def visit(x):
        state[x] = 1
        stack.append(x)
        for hi in uppers[x]:
            if hi in acyclic:
                continue
            if state.get(hi) == 1:
                return stack[stack.index(hi):] + [hi]
            if hi not in state:
                found = visit(hi)
                if found:
                    return found
        stack.pop()
        state[x] = 2
        return None

    for x in range(n):
        if x not in acyclic and x not in state:
            found = visit(x)
            if found:
                return found
    raise AssertionError("no cycle among unsorted elements")


def join(L: FiniteLattice, x: int, y: int) -> int:
    return L.join_table[x][y]


def meet(L: FiniteLattice, x: int, y: int) -> int:
    return L.meet_table[x][y]


def join_set(L: FiniteLattice, elements: Iterable[int]) -> int:
    """Join of a finite family; the empty join is ``bottom``."""
    table = L.join_table
    acc = L.bottom
    for x in elements:
        acc = table[acc][x]
    return acc


def meet_set(L: FiniteLattice, elements: Iterable[int]) -> int:
    table = L.meet_table
    acc = L.top
    for x in elements:
        acc = table[acc][x]
    return acc


def atoms(L: FiniteLattice) -> list[int]:
    return sorted(hi for lo, hi in L.covers if lo == L.bottom)


def atom_mask(L: FiniteLattice) -> int:
    return sum(1 << a for a in atoms(L))


def interval(L: FiniteLattice, lo: int, hi: int) -> tuple[FiniteLattice, tuple[int, ...]]:
    """The sublattice ``[lo, hi]`` and the map from its ids to ids of ``L``."""
    if not L.leq(lo, hi):
        raise NotComparable(lo, hi)
    members = tuple(_bits(L.up[lo] & L.down[hi]))
    new_id = {x: i for i, x in enumerate(members)}
    covers = [(new_id[a], new_id[b]) for a, b in L.covers if a in new_id and b in new_id]
    sub = build_from_covers(len(members), covers, [L.labels[x] for x in members])
    return sub, members


def height(L: FiniteLattice, x: int | None = None) -> int:
    """Length of the longest chain from ``bottom`` to ``x`` (default ``top``)."""
    return L.heights[L.top if x is None else x]


def _shortest_chains(L):
    # covers are emitted in increasing lower id, which need not be topological
    order = sorted(range(L.size), key=lambda x: (popcount(L.down[x]), x))
    shortest = [0] * L.size
    short_pred = [None] * L.size
    long_pred = [None] * L.size
    lowers = [[] for _ in range(L.size)]
    for lo, hi in L.covers:
        lowers[hi].append(lo)
    for x in order:
        if not lowers[x]:
            continue
        shortest[x], short_pred[x] = min((shortest[lo] + 1, lo) for lo in lowers[x])
        long_pred[x] = min(lo for lo in lowers[x] if L.heights[lo] + 1 == L.heights[x])
    return shortest, short_pred, long_pred


def _walk(pred, x):
    chain = [x]
    while pred[chain[-1]] is not None:
        chain.append(pred[chain[-1]])
    return tuple(reversed(chain))


def is_graded(L: FiniteLattice) -> CheckReport:
    """All maximal chains from ``bottom`` to a common element have one length.

    The witness is the least failing element with a shortest and a longest
    maximal chain ending there.
    """
    shortest, short_pred, long_pred = _shortest_chains(L)
    for x in range(L.size):
        if shortest[x] != L.heights[x]:
            return CheckReport.fail(
                "graded", element=x, shorter=_walk(short_pred, x), longer=_walk(long_pred, x)
            )
    return CheckReport.ok("graded")


def _scan_atomic_cover(L, lo, hi):
    at = atoms(L)
    for x in range(lo, hi):
        row = L.join_table[x]
        for a in at:
            j = row[a]
            if j != x and not L.is_cover(x, j):
                return (x, a)
    return None


def has_atomic_cover_property(L: FiniteLattice, jobs: int = 1) -> CheckReport:
    """``x v a`` covers ``x`` for every element ``x`` and atom ``a`` not below it."""
    w = least_witness(_scan_atomic_cover, L, L.size, jobs)
    if w is None:
        return CheckReport.ok("atomic_cover")
    return CheckReport.fail("atomic_cover", x=w[0], atom=w[1])


def is_atomistic(L: FiniteLattice) -> CheckReport:
    am = atom_mask(L)
    for x in range(L.size):
        if join_set(L, _bits(L.down[x] & am)) != x:
            return CheckReport.fail("atomistic", element=x)
    return CheckReport.ok("atomistic")
