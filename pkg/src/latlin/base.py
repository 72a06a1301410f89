"""Independent atom sets, atomic bases and the lattice rank-nullity construction."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from latlin.endo import JoinEndo, check_jnb2, check_jnb3, image, kernel
from latlin.errors import (
    CertificateFailure,
    DuplicateAtom,
    HypothesisUnmet,
    NoAtomPreimage,
    NotAnAtom,
    SearchTooLarge,
    SoundnessAlarm,
    TopNotAtomJoin,
)
from latlin.lattice import (
    FiniteLattice,
    atoms,
    has_atomic_cover_property,
    height,
    interval,
    is_atomistic,
    is_graded,
    join_set,
)
from latlin.report import CheckReport

SUBSET_CAP = 2_000_000

AtomList = Sequence[int]


@dataclass(frozen=True)
class BaseCertificate:
    """An atom set together with an ordering whose partial joins strictly ascend."""

    atoms: tuple[int, ...]
    order: tuple[int, ...]
    join: int

    def chain(self, L: FiniteLattice) -> list[int]:
        partial = []
        acc = L.bottom
        for a in self.order:
            acc = L.join_table[acc][a]
            partial.append(acc)
        return partial

    def verify(self, L: FiniteLattice) -> bool:
        if sorted(self.order) != sorted(self.atoms):
            return False
        chain = [L.bottom] + self.chain(L)
        strict = all(L.lt(a, b) for a, b in zip(chain, chain[1:]))
        return strict and chain[-1] == self.join

    def to_json(self):
        return {"atoms": list(self.atoms), "order": list(self.order), "join": self.join}

    @classmethod
    def from_json(cls, doc):
        return cls(tuple(doc["atoms"]), tuple(doc["order"]), int(doc["join"]))


def _check_atoms(L, A, where=None):
    A = [int(a) for a in A]
    valid = set(atoms(L)) if where is None else {a for a in atoms(L) if L.leq(a, where)}
    seen = set()
    for a in A:
        if a not in valid:
            raise NotAnAtom(a, "the lattice" if where is None else f"[{L.bottom}, {where}]")
        if a in seen:
            raise DuplicateAtom(a)
        seen.add(a)
    return A


def independence_order(L: FiniteLattice, A: AtomList) -> tuple[int, ...] | None:
    """An ordering of ``A`` with strictly ascending partial joins, or ``None``.

    Depth-first over (current join, unused atoms); since the join is fixed by
    the used set, dead states are memoised on the unused-set bitmask alone.
    """
    A = list(A)
    dead = set()
    jt, up = L.join_table, L.up

    def search(acc, unused):
        if not unused:
            return ()
        if unused in dead:
            return None
        for i in range(len(A)):
            if unused >> i & 1 and not up[A[i]] >> acc & 1:
                rest = search(jt[acc][A[i]], unused & ~(1 << i))
                if rest is not None:
                    return (A[i],) + rest
        dead.add(unused)
        return None

    return search(L.bottom, (1 << len(A)) - 1)


def is_independent(L: FiniteLattice, A: AtomList) -> CheckReport:
    A = _check_atoms(L, A)
    order = independence_order(L, A)
    if order is None:
        return CheckReport.fail("independent", atoms=tuple(sorted(A)))
    return CheckReport.ok("independent", certificate=order)


def is_irredundant(L: FiniteLattice, A: AtomList) -> CheckReport:
    """Dropping any one atom strictly lowers the join.

    Scans from the end of the list, so the witness is the last droppable atom.
    """
    A = _check_atoms(L, A)
    total = join_set(L, A)
    for i in reversed(range(len(A))):
        if join_set(L, A[:i] + A[i + 1:]) == total:
            return CheckReport.fail("irredundant", atom=A[i])
    return CheckReport.ok("irredundant")


def minimal_atomic_base(L: FiniteLattice, cap: int = SUBSET_CAP) -> BaseCertificate:
    """A minimum-size atom set joining to top, the lexicographically least one."""
    at = atoms(L)
    if join_set(L, at) != L.top:
        raise TopNotAtomJoin()
    examined = 0
    for k in range(len(at) + 1):
        examined += math.comb(len(at), k)
        if examined > cap:
            raise SearchTooLarge(examined, cap)
        for subset in itertools.combinations(at, k):
            if join_set(L, subset) == L.top:
                cert = BaseCertificate(subset, subset, L.top)
                if not cert.verify(L):
                    raise SoundnessAlarm(f"minimal join {subset} is not strictly ascending")
                return cert
    raise AssertionError("unreachable: all atoms join to top")


def check_prop21(L: FiniteLattice, A: AtomList) -> CheckReport:
    """Under the atomic cover property and gradedness, independent atoms join irredundantly."""
    A = _check_atoms(L, A)
    checks = {"graded": is_graded(L), "atomic_cover": has_atomic_cover_property(L)}
    unmet = [which for which, report in checks.items() if not report.holds]
    if unmet:
        exc = HypothesisUnmet(unmet[0], checks[unmet[0]])
        exc.unmet = tuple(unmet)
        raise exc
    indep = is_independent(L, A)
    if not indep.holds:
        raise HypothesisUnmet("independent", indep)
    result = is_irredundant(L, A)
    if not result.holds:
        raise SoundnessAlarm(f"independent atoms {A} join redundantly: {result.describe()}")
    return result


def _require(which, report):
    if not report.holds:
        raise HypothesisUnmet(which, report)


def lift_atom(lam: JoinEndo, a: int, check: bool = True) -> int:
    """Lowest-id atom ``a*`` of the lattice with ``lam(a*) == a``.

    Needs an atomistic lattice and a JNB3 map; pass ``check=False`` when the
    caller has already verified both.
    """
    L = lam.lattice
    if check:
        _require("atomistic", is_atomistic(L))
        _require("jnb3", check_jnb3(lam))
    if not L.is_cover(L.bottom, a) or not L.leq(a, image(lam)):
        raise NotAnAtom(a, f"[{L.bottom}, {image(lam)}]")
    for b in atoms(L):
        if lam.table[b] == a:
            return b
    raise NoAtomPreimage(a)


def _sub_base(L, A, top, which):
    A = _check_atoms(L, A, where=top)
    order = independence_order(L, A)
    if order is None or join_set(L, A) != top:
        raise HypothesisUnmet(f"{which} is not an atomic base of [{L.bottom}, {top}]")
    return order


def extend_base(lam: JoinEndo, ker_base: AtomList, im_base: AtomList, check: bool = True) -> BaseCertificate:
    """Kernel base plus lifted image base, certified as an atomic base of the lattice.

    The certificate order is the kernel atoms (in an independence order)
    followed by the lifts, in the order that makes their images ascend.
    """
    L = lam.lattice
    if check:
        _require("jnb2", check_jnb2(lam))
        _require("jnb3", check_jnb3(lam))
        _require("atomistic", is_atomistic(L))
    ker_order = _sub_base(L, ker_base, kernel(lam), "kernel base")
    im_order = _sub_base(L, im_base, image(lam), "image base")
    lifted = {c: lift_atom(lam, c, check=False) for c in im_order}
    cert = BaseCertificate(
        tuple(ker_base) + tuple(lifted[c] for c in im_base),
        ker_order + tuple(lifted[c] for c in im_order),
        L.top,
    )
    if len(set(cert.atoms)) != len(cert.atoms) or not cert.verify(L):
        raise CertificateFailure(f"kernel and lifted atoms {cert.order} do not form an atomic base")
    return cert


@dataclass(frozen=True)
class RankNullity:
    p: int
    q: int
    image_base: BaseCertificate
    kernel_base: BaseCertificate
    base: BaseCertificate
    height: int
    graded: bool

    @property
    def matches_height(self) -> bool:
        return self.p + self.q == self.height

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "image_base": self.image_base.to_json(),
            "kernel_base": self.kernel_base.to_json(),
            "base": self.base.to_json(),
            "height": self.height,
            "graded": self.graded,
            "matches_height": self.matches_height if self.graded else None,
        }


def _ambient_base(L, top):
    sub, members = interval(L, L.bottom, top)
    cert = minimal_atomic_base(sub)
    lift = lambda ids: tuple(members[i] for i in ids)
    return BaseCertificate(lift(cert.atoms), lift(cert.order), top)


def rank_nullity_report(lam: JoinEndo, check: bool = True) -> RankNullity:
    """Sizes of minimal bases of ``[0, im]`` and ``[0, ker]`` and their combined base."""
    L = lam.lattice
    im_base = _ambient_base(L, image(lam))
    ker_base = _ambient_base(L, kernel(lam))
    base = extend_base(lam, ker_base.atoms, im_base.atoms, check=check)
    graded = is_graded(L).holds
    return RankNullity(len(im_base.atoms), len(ker_base.atoms), im_base, ker_base, base, height(L), graded)
