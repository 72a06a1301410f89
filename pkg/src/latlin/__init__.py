"""Linear algebra in finite lattices.

Finite lattices, 0-preserving join endomorphisms, the JNB2/JNB3 conditions,
atomic bases with a rank-nullity construction, and the Fitting decomposition
``im(lam^r) (+) ker(lam^r) = top``.
"""

from latlin.base import (
    BaseCertificate,
    RankNullity,
    check_prop21,
    extend_base,
    independence_order,
    is_independent,
    is_irredundant,
    lift_atom,
    minimal_atomic_base,
    rank_nullity_report,
)
from latlin.dot import export_dot
from latlin.endo import (
    JoinEndo,
    check_jnb2,
    check_jnb3,
    compose,
    identity,
    image,
    jnb2_witness,
    jnb3_preimage,
    kernel,
    make_endo,
    power,
    validate,
    zero,
)
from latlin.fitting import (
    FittingResult,
    check_prop33_3,
    check_prop33_4,
    fitting_decomposition,
    image_stabilization,
    kernel_stabilization,
)
from latlin.gf import GFMatrix, Subspace
from latlin.instances import (
    SubspaceLattice,
    boolean_lattice,
    chain,
    chain_endo,
    induced_endo,
    powerset_endo,
    standard_lattice,
    subspace_lattice,
)
from latlin.lattice import (
    FiniteLattice,
    atoms,
    build_from_covers,
    has_atomic_cover_property,
    height,
    interval,
    is_atomistic,
    is_graded,
    join,
    join_set,
    meet,
)
from latlin.report import CheckReport

__version__ = "0.1.0"
