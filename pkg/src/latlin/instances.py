"""Lattice and endomorphism generators.

Subspace lattices of GF(p)^n with matrix-induced maps are the motivating
instance; Boolean lattices with set-image maps and small chains supply
counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from latlin.endo import JoinEndo, make_endo
from latlin.errors import BadFunction, DimensionMismatch, InputError, TooLarge, UnknownName
from latlin.gf import GFMatrix, Subspace, check_prime, echelon_subspaces, gaussian_binomial, matrix_image
from latlin.lattice import FiniteLattice, build_from_covers

DEFAULT_CAP = 1000
MAX_BOOLEAN = 10
MAX_CHAIN = 1000


@dataclass(frozen=True, eq=False)
class SubspaceLattice:
    """The lattice of subspaces of GF(p)^n; element ``i`` is ``subspaces[i]``."""

    p: int
    n: int
    lattice: FiniteLattice
    subspaces: tuple[Subspace, ...]
    index: Mapping[Subspace, int] = field(repr=False)

    def __iter__(self):
        # allows ``L, spaces = subspace_lattice(p, n)``
        return iter((self.lattice, self.subspaces))

    def element(self, S: Subspace) -> int:
        return self.index[S]


def subspace_count(p: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def subspace_lattice(p: int, n: int, cap: int = DEFAULT_CAP) -> SubspaceLattice:
    p = check_prime(p)
    if n < 0:
        raise InputError("dimension must be non-negative")
    count = subspace_count(p, n)
    if count > cap:
        raise TooLarge(count, cap)
    spaces = echelon_subspaces(p, n)
    members = [s.vectors() for s in spaces]
    covers = [
        (i, j)
        for i, si in enumerate(spaces)
        for j, sj in enumerate(spaces)
        if sj.dim == si.dim + 1 and members[i] <= members[j]
    ]
    L = build_from_covers(len(spaces), covers, [s.label() for s in spaces])
    return SubspaceLattice(p, n, L, tuple(spaces), {s: i for i, s in enumerate(spaces)})


def induced_endo(sl: SubspaceLattice, A: GFMatrix) -> JoinEndo:
    """The map ``N -> A N`` on the subspace lattice."""
    if A.p != sl.p or A.rows != sl.n or A.cols != sl.n:
        raise DimensionMismatch(f"need an {sl.n}x{sl.n} matrix over GF({sl.p})")
    table = [sl.index[matrix_image(A, S)] for S in sl.subspaces]
    return make_endo(sl.lattice, table)


def boolean_lattice(n: int) -> FiniteLattice:
    """B_n with element id equal to the bitmask of the subset of ``{1..n}``."""
    if not 0 <= n <= MAX_BOOLEAN:
        raise InputError(f"boolean lattice size must be in 0..{MAX_BOOLEAN}")
    size = 1 << n
    covers = [(m, m | 1 << i) for m in range(size) for i in range(n) if not m >> i & 1]
    return build_from_covers(size, covers, [subset_label(m) for m in range(size)])


def subset_label(mask: int) -> str:
    points = [str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(points) + "}" if points else "{}"


def powerset_endo(n: int, f: Mapping[int, int], lattice: FiniteLattice | None = None) -> JoinEndo:
    """Set-image map ``A -> f(A & dom f)`` on B_n for a partial map ``f`` of ``{1..n}``."""
    if not 0 <= n <= MAX_BOOLEAN:
        raise BadFunction(f"n must be in 0..{MAX_BOOLEAN}")
    for a, b in f.items():
        if not (1 <= int(a) <= n and 1 <= int(b) <= n):
            raise BadFunction(f"pair {a}->{b} outside 1..{n}")
    L = lattice if lattice is not None else boolean_lattice(n)
    point_image = [0] * n
    for a, b in f.items():
        point_image[int(a) - 1] = 1 << (int(b) - 1)
    table = []
    for m in range(1 << n):
        out = 0
        for i in range(n):
            if m >> i & 1:
                out |= point_image[i]
        table.append(out)
    return make_endo(L, table)


def chain(k: int) -> FiniteLattice:
    """The k-element chain ``0 < 1 < ... < k-1``."""
    if not 1 <= k <= MAX_CHAIN:
        raise InputError(f"chain size must be in 1..{MAX_CHAIN}")
    return build_from_covers(k, [(i, i + 1) for i in range(k - 1)])


def chain_endo(k: int, images: Sequence[int]) -> JoinEndo:
    """A monotone 0-preserving self-map of the k-chain (on a chain that is a join endomorphism)."""
    return make_endo(chain(k), images)


def m3() -> FiniteLattice:
    return build_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["0", "a1", "a2", "a3", "1"])


def n5() -> FiniteLattice:
    """Pentagon: ``0 < a < b < 1`` and ``0 < c < 1``."""
    return build_from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], ["0", "a", "b", "c", "1"])


def standard_lattice(name: str, k: int | None = None) -> FiniteLattice:
    name = name.lower()
    if name == "m3":
        return m3()
    if name == "n5":
        return n5()
    if name in ("chain", "boolean"):
        if k is None:
            raise InputError(f"{name} needs a size parameter")
        return chain(k) if name == "chain" else boolean_lattice(k)
    raise UnknownName(f"unknown lattice family {name!r}")
