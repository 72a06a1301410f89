"""Acceptance suite. Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per criterion."""

import itertools
import json
import random

import pytest

from latlin.base import check_prop21, extend_base, is_independent, lift_atom, rank_nullity_report
from latlin.cli import main
from latlin.endo import JoinEndo, check_jnb2, check_jnb3, compose, image, kernel, power, validate
from latlin.errors import HypothesisUnmet
from latlin.fitting import fitting_decomposition, image_stabilization, kernel_stabilization
from latlin.gf import GFMatrix, matrix_column_space, matrix_kernel
from latlin.instances import (
    boolean_lattice,
    chain_endo,
    induced_endo,
    m3,
    n5,
    powerset_endo,
    subspace_lattice,
)
from latlin.lattice import atoms, has_atomic_cover_property, height, is_atomistic, is_graded

import oracles
from conftest import join_endos


def verdict(number, title, failures, checked):
    status = "PASS" if not failures else "FAIL"
    print(f"\n[{status}] criterion {number:2d}: {title} ({checked} cases, {len(failures)} failures)")
    assert not failures, failures[:5]


@pytest.fixture(scope="module")
def gf23():
    return subspace_lattice(2, 3)


@pytest.fixture(scope="module")
def all_maps(gf23):
    return [(A, induced_endo(gf23, A)) for A in GFMatrix.all_square(2, 3)]


def test_01_induced_maps_satisfy_jnb(gf23, all_maps):
    L = gf23.lattice
    failures = []
    for A, lam in all_maps:
        for rep in (validate(L, lam.table), check_jnb2(lam), check_jnb3(lam)):
            if not rep.holds:
                failures.append((A.entries, rep.describe()))
    assert len(all_maps) == 512
    verdict(1, "all 512 GF(2)^3 maps validate and satisfy JNB2, JNB3", failures, len(all_maps))


def test_02_fitting_matches_linear_algebra(gf23, all_maps):
    S, index = gf23.subspaces, gf23.index
    vs = oracles.vectors(2, 3)
    failures = []
    for A, lam in all_maps:
        res = fitting_decomposition(lam)
        Ar = A ** res.r
        ok = (
            res.join_ok
            and res.meet_ok
            and res.im_r == index[matrix_column_space(Ar)]
            and res.ker_r == index[matrix_kernel(Ar)]
            # enumeration cross-check, no row reduction involved
            and S[res.im_r].vectors() == oracles.image_set(Ar.entries, vs, 2)
            and S[res.ker_r].vectors() == oracles.kernel_set(Ar.entries, 2)
        )
        if not ok:
            failures.append(A.entries)
    verdict(2, "Fitting split equals column space and kernel of A^r", failures, len(all_maps))


def test_03_rank_nullity(gf23, all_maps):
    L = gf23.lattice
    failures = []
    for A, lam in all_maps:
        rank = oracles.rank_by_image(A.entries, 2)
        rn = rank_nullity_report(lam)
        cert = extend_base(lam, rn.kernel_base.atoms, rn.image_base.atoms)
        chain = [L.bottom] + cert.chain(L)
        ok = (
            (rn.p, rn.q) == (rank, 3 - rank)
            and len(cert.atoms) == rank + (3 - rank)
            and all(L.lt(a, b) for a, b in zip(chain, chain[1:]))
            and chain[-1] == L.top
        )
        if not ok:
            failures.append(A.entries)
    verdict(3, "extend_base gives p + q atoms with p = rank(A)", failures, len(all_maps))


def test_04_composition_closure(gf23):
    rng = random.Random(20240601)
    mats = list(GFMatrix.all_square(2, 3))
    pairs = [(rng.choice(mats), rng.choice(mats)) for _ in range(250)]
    failures = []
    for A, B in pairs:
        lam = compose(induced_endo(gf23, A), induced_endo(gf23, B))
        if lam.table != induced_endo(gf23, A @ B).table:
            failures.append(("functoriality", A.entries, B.entries))
        elif not (check_jnb2(lam).holds and check_jnb3(lam).holds):
            failures.append(("jnb", A.entries, B.entries))

    f, g = powerset_endo(3, {1: 2, 2: 3}), powerset_endo(3, {2: 1, 3: 2})
    for lam in (f, g):
        if not (check_jnb2(lam).holds and check_jnb3(lam).holds):
            failures.append(("powerset factor", lam.table))
    for lam in (compose(f, g), compose(g, f)):
        if not (check_jnb2(lam).holds and check_jnb3(lam).holds):
            failures.append(("powerset composite", lam.table))
    verdict(4, "composites of JNB maps keep JNB2 and JNB3", failures, len(pairs) + 2)


def _jnb_suite(all_maps):
    for _, lam in all_maps:
        yield lam
    for L in (boolean_lattice(3), m3(), n5(), subspace_lattice(3, 2).lattice):
        for t in join_endos(L):
            lam = JoinEndo(L, t)
            if check_jnb2(lam).holds and check_jnb3(lam).holds:
                yield lam


def test_05_powers_and_stabilization(all_maps):
    failures, checked = [], 0
    for lam in _jnb_suite(all_maps):
        L = lam.lattice
        checked += 1
        top_height = height(L)
        k, ims = image_stabilization(lam)
        l, kers = kernel_stabilization(lam)
        for i in range(1, 2 * top_height + 1):
            li = power(lam, i)
            if not (check_jnb2(li).holds and check_jnb3(li).holds):
                failures.append(("power", lam.table, i))
            if image(li) != ims[min(i, k) - 1] or kernel(li) != kers[min(i, l) - 1]:
                failures.append(("chain", lam.table, i))
        if not all(L.lt(b, a) for a, b in zip(ims, ims[1:])):
            failures.append(("image chain not descending", lam.table))
        if not all(L.lt(a, b) for a, b in zip(kers, kers[1:])):
            failures.append(("kernel chain not ascending", lam.table))
    verdict(5, "powers keep JNB; image/kernel chains stabilise", failures, checked)


def test_06_hypotheses_are_needed():
    failures = []
    bad = powerset_endo(3, {1: 1, 2: 1, 3: 3})
    rep = check_jnb2(bad)
    leq = [[bad.lattice.leq(x, y) for y in range(8)] for x in range(8)]
    if rep.holds or rep.witness not in oracles.jnb2_failures(leq, bad.table):
        failures.append(("B3 jnb2", rep))
    if fitting_decomposition(bad, enforce=False).join_ok:
        failures.append("B3 fitting join_ok")

    lam = chain_endo(4, [0, 0, 3, 3])
    rep = check_jnb3(lam)
    leq = [[lam.lattice.leq(x, y) for y in range(4)] for x in range(4)]
    # ids: 0 < a=1 < b=2 < 1=3
    if rep.holds or rep.witness != (2, 1) or (2, 1) not in oracles.jnb3_failures(leq, lam.table):
        failures.append(("4-chain jnb3", rep))
    verdict(6, "generated counterexamples are caught by the checkers", failures, 2)


def test_07_independent_atoms_are_irredundant():
    failures, checked = [], 0
    for L in (subspace_lattice(2, 3).lattice, boolean_lattice(4)):
        if not (is_graded(L).holds and has_atomic_cover_property(L).holds):
            failures.append(("hypotheses", L.size))
        for k in range(1, 5):
            for A in itertools.combinations(atoms(L), k):
                if is_independent(L, A).holds:
                    checked += 1
                    if not check_prop21(L, A).holds:
                        failures.append(A)
    try:
        check_prop21(n5(), [1])
        failures.append("N5 accepted")
    except HypothesisUnmet as exc:
        if exc.which != "graded":
            failures.append(("N5", exc.which))
    verdict(7, "independent atom sets join irredundantly; N5 rejected as ungraded", failures, checked + 1)


def test_08_atom_lifting(all_maps):
    suites = [lam for _, lam in all_maps]
    for L in (boolean_lattice(2), boolean_lattice(3), m3(), subspace_lattice(3, 2).lattice):
        suites += [JoinEndo(L, t) for t in join_endos(L)]
    failures, checked = [], 0
    for lam in suites:
        L = lam.lattice
        if not (is_atomistic(L).holds and check_jnb3(lam).holds):
            continue
        for a in atoms(L):
            if not L.leq(a, image(lam)):
                continue
            checked += 1
            preimages = [b for b in range(L.size) if L.is_cover(L.bottom, b) and lam.table[b] == a]
            b = lift_atom(lam, a, check=False)
            if not preimages or b != min(preimages):
                failures.append((lam.table, a, b))
    verdict(8, "every atom of the image lifts to an atom", failures, checked)


def test_09_subspace_counts():
    failures = []
    for p, n, expected in [(2, 1, 2), (2, 2, 5), (2, 3, 16), (2, 4, 67), (3, 2, 6)]:
        sl = subspace_lattice(p, n)
        brute = oracles.all_subspace_sets(p, n)
        mine = {frozenset(S.vectors()) for S in sl.subspaces}
        if not (sl.lattice.size == len(brute) == expected and mine == brute):
            failures.append((p, n, sl.lattice.size, len(brute)))
    verdict(9, "subspace lattice sizes 2, 5, 16, 67 and 6 match enumeration", failures, 5)


JORDAN = '{"p": 2, "rows": [[0,1,0],[0,0,1],[0,0,0]]}'


def _run(capsys, argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_10_cli_determinism(tmp_path, capsys):
    j = tmp_path / "j.json"
    b3 = tmp_path / "b3.json"
    main(["gen", "gf", "2", "3", "--matrix", JORDAN, "-o", str(j)])
    main(["gen", "powerset", "3", "--map", "1:1,2:1,3:3", "-o", str(b3)])
    commands = []
    for path in (j, b3):
        commands += [["validate", path], ["check", path], ["fitting", path], ["fitting", path, "--no-enforce"],
                     ["base", path], ["export-dot", path]]
    commands += [["gen", "gf", "2", "3", "--matrix", JORDAN], ["gen", "m3"], ["gen", "n5", "--map", "identity"]]
    failures = []
    for cmd in commands:
        outs = set()
        for jobs in (1, 4, 1, 4):
            code, out = _run(capsys, cmd + ["--format", "json", "--jobs", jobs])
            outs.add((code, out))
        if len(outs) != 1:
            failures.append(cmd[0])
        code, out = next(iter(outs))
        if cmd[0] != "export-dot":
            json.loads(out)
    verdict(10, "CLI output byte-identical across runs and --jobs 1/4", failures, len(commands))
