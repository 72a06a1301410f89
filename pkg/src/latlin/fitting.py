"""Image/kernel chains of iterated join endomorphisms and the Fitting decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from latlin.endo import JoinEndo, check_jnb2, check_jnb3, compose, image, kernel
from latlin.errors import HypothesisUnmet, SoundnessAlarm
from latlin.lattice import height
from latlin.report import CheckReport


def _powers(lam: JoinEndo):
    """Yield ``lam**1, lam**2, ...``."""
    current = lam
    while True:
        yield current
        current = compose(lam, current)


def image_stabilization(lam: JoinEndo, verify: bool = True) -> tuple[int, list[int]]:
    """Least ``k >= 1`` with ``im(lam^k) == im(lam^(k+1))`` and the images up to ``k``.

    ``im(lam^i)`` is just ``lam`` iterated ``i`` times on top, so no power
    tables are built.
    """
    L = lam.lattice
    t = lam.table
    chain = [t[L.top]]
    while t[chain[-1]] != chain[-1]:
        chain.append(t[chain[-1]])
    if verify:
        x = chain[-1]
        for _ in range(height(L) + 1):
            x = t[x]
            if x != chain[-1]:
                raise SoundnessAlarm("image chain moved after stabilising")
    return len(chain), chain


def kernel_stabilization(lam: JoinEndo, verify: bool = True) -> tuple[int, list[int]]:
    """Least ``l >= 1`` with ``ker(lam^l) == ker(lam^(l+1))`` and the kernels up to ``l``."""
    L = lam.lattice
    gen = _powers(lam)
    chain = [kernel(next(gen))]
    while True:
        nxt = kernel(next(gen))
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    if verify:
        for _ in range(height(L)):
            if kernel(next(gen)) != chain[-1]:
                raise SoundnessAlarm("kernel chain moved after stabilising")
    return len(chain), chain


def check_prop33_3(lam: JoinEndo) -> CheckReport:
    """JNB2 and a stable image force ``im v ker == top``."""
    L = lam.lattice
    report = check_jnb2(lam)
    if not report.holds:
        raise HypothesisUnmet("jnb2", report)
    w, z = image(lam), kernel(lam)
    if lam.table[w] != w:
        raise HypothesisUnmet("im(lam) != im(lam^2)")
    j = L.join_table[w][z]
    if j != L.top:
        raise SoundnessAlarm(f"im {w} v ker {z} = {j}, not top")
    return CheckReport.ok("im_join_ker_is_top")


def check_prop33_4(lam: JoinEndo) -> CheckReport:
    """JNB3 and a stable kernel force ``im ^ ker == bottom``."""
    L = lam.lattice
    report = check_jnb3(lam)
    if not report.holds:
        raise HypothesisUnmet("jnb3", report)
    w, z = image(lam), kernel(lam)
    if kernel(compose(lam, lam)) != z:
        raise HypothesisUnmet("ker(lam) != ker(lam^2)")
    m = L.meet_table[w][z]
    if m != L.bottom:
        raise SoundnessAlarm(f"im {w} ^ ker {z} = {m}, not bottom")
    return CheckReport.ok("im_meet_ker_is_bottom")


@dataclass(frozen=True)
class FittingResult:
    r: int
    im_r: int
    ker_r: int
    join_ok: bool
    meet_ok: bool
    im_chain: tuple[int, ...]
    ker_chain: tuple[int, ...]
    k: int
    l: int
    minimal_r: int | None

    @property
    def splits(self) -> bool:
        return self.join_ok and self.meet_ok

    def to_json(self, labels=None):
        out = {
            "r": self.r,
            "k": self.k,
            "l": self.l,
            "im_r": self.im_r,
            "ker_r": self.ker_r,
            "join_ok": self.join_ok,
            "meet_ok": self.meet_ok,
            "im_chain": list(self.im_chain),
            "ker_chain": list(self.ker_chain),
            "minimal_r": self.minimal_r,
        }
        if labels is not None:
            out["labels"] = {
                "im_r": labels[self.im_r],
                "ker_r": labels[self.ker_r],
                "im_chain": [labels[x] for x in self.im_chain],
                "ker_chain": [labels[x] for x in self.ker_chain],
            }
        return out


def fitting_decomposition(lam: JoinEndo, enforce: bool = True, jobs: int = 1) -> FittingResult:
    """Split top as ``im(lam^r) (+) ker(lam^r)`` with ``r = max(k, l)``.

    With ``enforce`` the JNB2/JNB3 hypotheses are checked first and a failed
    split is a soundness alarm. Without it the flags are merely reported.
    """
    L = lam.lattice
    if enforce:
        for which, check in (("jnb2", check_jnb2), ("jnb3", check_jnb3)):
            report = check(lam, jobs=jobs)
            if not report.holds:
                raise HypothesisUnmet(which, report)

    k, _ = image_stabilization(lam)
    l, _ = kernel_stabilization(lam)
    r = max(k, l)

    images, kernels = [], []
    minimal_r = None
    for i, lam_i in zip(range(1, r + 1), _powers(lam)):
        w, z = image(lam_i), kernel(lam_i)
        images.append(w)
        kernels.append(z)
        if minimal_r is None and L.join_table[w][z] == L.top and L.meet_table[w][z] == L.bottom:
            minimal_r = i
        lam_r = lam_i
    im_r, ker_r = images[-1], kernels[-1]
    join_ok = L.join_table[im_r][ker_r] == L.top
    meet_ok = L.meet_table[im_r][ker_r] == L.bottom

    if enforce:
        # powers of a JNB2+JNB3 map keep both properties
        if not (check_jnb2(lam_r, jobs=jobs).holds and check_jnb3(lam_r, jobs=jobs).holds):
            raise SoundnessAlarm(f"lam^{r} lost JNB2/JNB3")
        if not (join_ok and meet_ok):
            raise SoundnessAlarm(f"no Fitting split at r={r}: join_ok={join_ok}, meet_ok={meet_ok}")

    return FittingResult(r, im_r, ker_r, join_ok, meet_ok, tuple(images), tuple(kernels), k, l, minimal_r)
