"""Linear algebra over the prime field GF(p).

Everything here works on plain tuples via row reduction and never consults a
lattice, so it can serve as an independent check of the lattice-side results.
Matrices act on column vectors: ``A`` sends ``v`` to ``A v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from latlin.errors import DimensionMismatch, InputError

MAX_PRIME = 97


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p) or p > MAX_PRIME:
        raise InputError(f"modulus must be a prime <= {MAX_PRIME}, got {p}")
    return p


def rref(rows: Iterable[Sequence[int]], p: int, ncols: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, plus the pivot columns."""
    m = [[v % p for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int) -> list[tuple[int, ...]]:
    """Basis of ``{x : M x = 0}``."""
    reduced, pivots = rref(rows, p, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f] % p
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^n held by its reduced echelon basis (a canonical form)."""

    p: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, p: int, n: int, vectors: Iterable[Sequence[int]] = ()) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise DimensionMismatch(f"vector {v} is not in GF({p})^{n}")
        basis, _ = rref(vectors, p, n)
        return cls(p, n, basis)

    @classmethod
    def zero(cls, p, n):
        return cls(p, n, ())

    @classmethod
    def full(cls, p, n):
        return cls.span(p, n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> frozenset[tuple[int, ...]]:
        """All ``p**dim`` members, by enumerating coefficient tuples."""
        out = set()
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            out.add(tuple(sum(c * b[i] for c, b in zip(coeffs, self.basis)) % self.p for i in range(self.n)))
        if not self.basis:
            out.add((0,) * self.n)
        return frozenset(out)

    def contains(self, v: Sequence[int]) -> bool:
        return Subspace.span(self.p, self.n, self.basis + (tuple(v),)).dim == self.dim

    def annihilator_rows(self) -> list[tuple[int, ...]]:
        """Rows ``C`` with ``self == {x : C x = 0}``."""
        return nullspace(self.basis, self.p, self.n)

    def label(self) -> str:
        if not self.basis:
            return "0"
        return "<" + ",".join("".join(map(str, b)) for b in self.basis) + ">"

    def to_json(self):
        return {"p": self.p, "n": self.n, "basis": [list(b) for b in self.basis]}


def _check_same_space(*spaces):
    first = spaces[0]
    for s in spaces[1:]:
        if (s.p, s.n) != (first.p, first.n):
            raise DimensionMismatch("subspaces of different spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_space(a, b)
    return Subspace.span(a.p, a.n, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_same_space(a, b)
    return Subspace.span(a.p, a.n, nullspace(a.annihilator_rows() + b.annihilator_rows(), a.p, a.n))


@dataclass(frozen=True)
class GFMatrix:
    p: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entries do not match the declared shape")
        if any(not 0 <= v < self.p for r in self.entries for v in r):
            raise InputError(f"entries must be residues in [0, {self.p})")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]]) -> "GFMatrix":
        rows = [tuple(int(v) % p for v in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(p, len(rows), ncols, tuple(rows))

    @classmethod
    def identity(cls, p, n):
        return cls.from_rows(p, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, p, n, m=None):
        return cls.from_rows(p, [[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def all_square(cls, p, n):
        """Every n x n matrix over GF(p), in row-major lexicographic order."""
        for flat in itertools.product(range(p), repeat=n * n):
            yield cls(p, n, n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match matrix columns")
        return tuple(sum(a * b for a, b in zip(row, v)) % self.p for row in self.entries)

    def columns(self):
        return [tuple(r[j] for r in self.entries) for j in range(self.cols)]

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if self.p != other.p or self.cols != other.rows:
            raise DimensionMismatch("incompatible matrix product")
        oc = other.columns()
        return GFMatrix.from_rows(
            self.p, [[sum(a * b for a, b in zip(row, c)) % self.p for c in oc] for row in self.entries]
        )

    def __pow__(self, k: int) -> "GFMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        result = GFMatrix.identity(self.p, self.rows)
        for _ in range(k):
            result = self @ result
        return result

    def rank(self) -> int:
        return len(rref(self.entries, self.p, self.cols)[0])

    def to_json(self):
        return {"p": self.p, "rows": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, doc) -> "GFMatrix":
        try:
            return cls.from_rows(int(doc["p"]), doc["rows"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad matrix document: {exc}") from exc


def _check_acts_on(A: GFMatrix, S: Subspace):
    if A.p != S.p or A.rows != A.cols or A.cols != S.n:
        raise DimensionMismatch(f"{A.rows}x{A.cols} matrix over GF({A.p}) vs subspace of GF({S.p})^{S.n}")


def matrix_image(A: GFMatrix, S: Subspace) -> Subspace:
    _check_acts_on(A, S)
    return Subspace.span(A.p, A.rows, [A.apply(b) for b in S.basis])


def matrix_preimage(A: GFMatrix, S: Subspace) -> Subspace:
    """``{v : A v in S}``: the kernel of ``C A`` where ``S = ker C``."""
    _check_acts_on(A, S)
    C = S.annihilator_rows()
    CA = [tuple(sum(c[i] * A.entries[i][j] for i in range(A.rows)) % A.p for j in range(A.cols)) for c in C]
    return Subspace.span(A.p, A.cols, nullspace(CA, A.p, A.cols))


def matrix_kernel(A: GFMatrix) -> Subspace:
    return Subspace.span(A.p, A.cols, nullspace(A.entries, A.p, A.cols))


def matrix_column_space(A: GFMatrix) -> Subspace:
    return Subspace.span(A.p, A.rows, A.columns())


def echelon_subspaces(p: int, n: int) -> list[Subspace]:
    """All subspaces of GF(p)^n, enumerated as reduced echelon bases.

    Sorted by dimension, then basis, so the zero subspace is first and the
    whole space last.
    """
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            # free entries: in row i, columns after pivot i that are not pivots
            slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), v in zip(slots, values):
                    rows[i][c] = v
                out.append(Subspace(p, n, tuple(map(tuple, rows))))
    out.sort(key=lambda s: (s.dim, s.basis))
    return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
