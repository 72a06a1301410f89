"""Exception hierarchy.

Property failures are reported as :class:`~latlin.report.CheckReport`
verdicts; exceptions are reserved for malformed input, violated
preconditions and soundness alarms.
"""


class LatticeError(Exception):
    """Base class for every error raised by this package."""


class InputError(LatticeError, ValueError):
    """Malformed or out-of-range input data."""


class CycleDetected(InputError):
    def __init__(self, path):
        self.path = tuple(path)
        super().__init__(f"cover relation has a cycle: {' -> '.join(map(str, self.path))}")


class NotALattice(InputError):
    def __init__(self, x, y, kind):
        self.x, self.y, self.kind = x, y, kind
        super().__init__(f"elements {x} and {y} have no unique {kind}")


class NoBottom(InputError):
    def __init__(self):
        super().__init__("poset has no least element")


class NoTop(InputError):
    def __init__(self):
        super().__init__("poset has no greatest element")


class NotComparable(InputError):
    def __init__(self, lo, hi):
        self.lo, self.hi = lo, hi
        super().__init__(f"{lo} is not below {hi}")


class LatticeMismatch(InputError):
    def __init__(self):
        super().__init__("endomorphisms live on different lattices")


class NotAJoinEndo(InputError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"table is not a 0-preserving join endomorphism: {report.describe()}")


class NotAnAtom(InputError):
    def __init__(self, element, where="the lattice"):
        self.element = element
        super().__init__(f"element {element} is not an atom of {where}")


class DuplicateAtom(InputError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"atom {element} listed twice")


class TopNotAtomJoin(LatticeError):
    def __init__(self):
        super().__init__("top element is not a join of atoms")


class SearchTooLarge(LatticeError):
    def __init__(self, count, cap):
        self.count, self.cap = count, cap
        super().__init__(f"search needs {count} candidates, cap is {cap}")


class TooLarge(SearchTooLarge, InputError):
    """A requested instance exceeds the size cap."""


class PreconditionError(LatticeError, ValueError):
    """An operation was called outside its documented domain."""


class NotBelowImage(PreconditionError):
    def __init__(self, t, x):
        self.t, self.x = t, x
        super().__init__(f"{t} is not below the image of {x}")


class PreimageGap(LatticeError):
    """The canonical preimage misses the target: a JNB3 counterexample."""

    def __init__(self, x, t, z):
        self.x, self.t, self.z = x, t, z
        super().__init__(f"no element below {x} maps onto {t} (canonical candidate {z})")


class NoComplement(LatticeError):
    """No kernel element joins x up to y: a JNB2 counterexample."""

    def __init__(self, x, y):
        self.x, self.y = x, y
        super().__init__(f"no u with {x} v u = {y} and image 0")


class HypothesisUnmet(PreconditionError):
    def __init__(self, which, report=None):
        self.which = which
        self.report = report
        msg = f"hypothesis unmet: {which}"
        if report is not None and not report.holds:
            msg += f" ({report.describe()})"
        super().__init__(msg)


class NoAtomPreimage(LatticeError):
    def __init__(self, atom):
        self.atom = atom
        super().__init__(f"no atom maps onto {atom}")


class SoundnessAlarm(LatticeError):
    """A proved implication failed on concrete data.

    Only reachable through a bug in this package (or in the mathematics).
    """


class CertificateFailure(SoundnessAlarm):
    pass


class DimensionMismatch(InputError):
    pass


class BadFunction(InputError):
    pass


class UnknownName(InputError):
    pass
