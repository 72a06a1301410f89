"""Complete join endomorphisms of a finite lattice.

On a finite lattice every join is a finite join, so a map that preserves
``bottom`` and binary joins preserves all joins. Validation checks exactly
those two laws.
"""

from __future__ import annotations

from dataclasses import dataclass

from latlin._scan import least_witness
from latlin.errors import (
    InputError,
    LatticeMismatch,
    NoComplement,
    NotAJoinEndo,
    NotBelowImage,
    PreconditionError,
    PreimageGap,
)
from latlin.lattice import FiniteLattice, _bits
from latlin.report import CheckReport


@dataclass(frozen=True, eq=False)
class JoinEndo:
    """A validated 0-preserving join endomorphism; build with :func:`make_endo`."""

    lattice: FiniteLattice
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other):
        if not isinstance(other, JoinEndo):
            return NotImplemented
        return self.table == other.table and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"JoinEndo({list(self.table)})"


def _check_total(L, table):
    table = tuple(int(t) for t in table)
    if len(table) != L.size:
        raise InputError(f"map has {len(table)} entries, lattice has {L.size} elements")
    for t in table:
        if not 0 <= t < L.size:
            raise InputError(f"map value {t} out of range")
    return table


def _scan_join_law(payload, lo, hi):
    L, table = payload
    jt = L.join_table
    for x in range(lo, hi):
        tx = table[x]
        row = jt[x]
        img = jt[tx]
        for y in range(x + 1, L.size):
            if table[row[y]] != img[table[y]]:
                return (x, y)
    return None


def validate(L: FiniteLattice, table, jobs: int = 1) -> CheckReport:
    table = _check_total(L, table)
    if table[L.bottom] != L.bottom:
        return CheckReport.fail("join_endo", bottom=L.bottom)
    w = least_witness(_scan_join_law, (L, table), L.size, jobs)
    if w is not None:
        return CheckReport.fail("join_endo", x=w[0], y=w[1])
    return CheckReport.ok("join_endo")


def make_endo(L: FiniteLattice, table, jobs: int = 1) -> JoinEndo:
    """Validate ``table`` and wrap it; raises :class:`NotAJoinEndo` on failure."""
    table = _check_total(L, table)
    report = validate(L, table, jobs)
    if not report.holds:
        raise NotAJoinEndo(report)
    return JoinEndo(L, table)


def identity(L: FiniteLattice) -> JoinEndo:
    return JoinEndo(L, tuple(range(L.size)))


def zero(L: FiniteLattice) -> JoinEndo:
    return JoinEndo(L, (L.bottom,) * L.size)


def image(lam: JoinEndo) -> int:
    return lam.table[lam.lattice.top]


def kernel(lam: JoinEndo) -> int:
    L = lam.lattice
    acc = L.bottom
    for x, t in enumerate(lam.table):
        if t == L.bottom:
            acc = L.join_table[acc][x]
    return acc


def compose(outer: JoinEndo, inner: JoinEndo) -> JoinEndo:
    """``outer o inner``, i.e. ``x -> outer(inner(x))``."""
    if outer.lattice is not inner.lattice and outer.lattice != inner.lattice:
        raise LatticeMismatch()
    t1 = outer.table
    return JoinEndo(inner.lattice, tuple(t1[t] for t in inner.table))


def power(lam: JoinEndo, k: int) -> JoinEndo:
    if k < 0:
        raise PreconditionError("negative exponent")
    result = identity(lam.lattice)
    for _ in range(k):
        result = compose(lam, result)
    return result


def _scan_jnb2(payload, lo, hi):
    L, table, z = payload
    jt, mt, up = L.join_table, L.meet_table, L.up
    for x in range(lo, hi):
        tx = table[x]
        for y in _bits(up[x]):
            # any admissible u lies below both y and z, and y ^ z is itself admissible
            if table[y] == tx and jt[x][mt[y][z]] != y:
                return (x, y)
    return None


def check_jnb2(lam: JoinEndo, jobs: int = 1) -> CheckReport:
    """Whenever ``x <= y`` and ``lam(x) == lam(y)``, some ``u`` with
    ``lam(u) == 0`` has ``x v u == y``."""
    L = lam.lattice
    w = least_witness(_scan_jnb2, (L, lam.table, kernel(lam)), L.size, jobs)
    if w is None:
        return CheckReport.ok("jnb2")
    return CheckReport.fail("jnb2", x=w[0], y=w[1])


def _reach(L, table, x):
    """Bitmask of ``{lam(z) : z <= x}``."""
    mask = 0
    for z in _bits(L.down[x]):
        mask |= 1 << table[z]
    return mask


def _scan_jnb3(payload, lo, hi):
    L, table = payload
    for x in range(lo, hi):
        missing = L.down[table[x]] & ~_reach(L, table, x)
        if missing:
            return (x, (missing & -missing).bit_length() - 1)
    return None


def check_jnb3(lam: JoinEndo, jobs: int = 1) -> CheckReport:
    """``lam`` maps ``[0, x]`` onto ``[0, lam(x)]`` for every ``x``."""
    L = lam.lattice
    w = least_witness(_scan_jnb3, (L, lam.table), L.size, jobs)
    if w is None:
        return CheckReport.ok("jnb3")
    return CheckReport.fail("jnb3", x=w[0], t=w[1])


def jnb3_preimage(lam: JoinEndo, x: int, t: int) -> int:
    """Largest ``z <= x`` with ``lam(z) <= t``; raises PreimageGap unless it hits ``t``."""
    L = lam.lattice
    if not L.leq(t, lam.table[x]):
        raise NotBelowImage(t, x)
    z = L.bottom
    for c in _bits(L.down[x]):
        if L.leq(lam.table[c], t):
            z = L.join_table[z][c]
    if lam.table[z] != t:
        raise PreimageGap(x, t, z)
    return z


def jnb2_witness(lam: JoinEndo, x: int, y: int) -> int:
    """Lowest-id ``u`` with ``x v u == y`` and ``lam(u) == 0``."""
    L = lam.lattice
    if not L.leq(x, y) or lam.table[x] != lam.table[y]:
        raise PreconditionError(f"need {x} <= {y} with equal images")
    for u in _bits(L.down[kernel(lam)]):
        if L.join_table[x][u] == y:
            return u
    raise NoComplement(x, y)
