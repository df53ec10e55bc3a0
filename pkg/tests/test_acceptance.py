"""Acceptance criteria, one test each, all exact.

A PASS/FAIL line per criterion is printed in the pytest terminal summary, or
on stdout when this file is run as a script.
"""

import itertools
import json
import random

import pytest

from planar_sl.analysis import analyze
from planar_sl.cli import main
from planar_sl.intlinalg import (
    IntMatrix,
    cokernel_invariants,
    determinant,
    is_smith_normal_form,
    smith_normal_form,
    solve_integer,
)
from planar_sl.model import BraidLetter, BraidWord, OpenBook, Sigma, exponent_record
from planar_sl.monodromy import monodromy_matrix
from planar_sl.parsing import parse_instance
from planar_sl.selflink import null_homology_solve, self_linking
from planar_sl.census import singularity_census
from planar_sl.stabilize import StabilizedState, normalize_nonnegative, stabilize
from planar_sl.verify import (
    braid_with_exponents,
    random_exponent,
    random_null_homologous_instance,
    random_open_book,
    trial_rng,
)

SEED = 2026
RESULTS: dict[str, str] = {}


def record(name, failures, total):
    status = "PASS" if not failures else "FAIL"
    detail = f"{total - len(failures)}/{total}"
    if failures:
        detail += f"; first failure: {failures[0]}"
    RESULTS[name] = f"{status}  {name}  ({detail})"
    assert not failures, RESULTS[name]


def null_homologous_population(count, salt):
    for trial in range(count):
        rng = trial_rng(SEED + salt, trial)
        inst = random_null_homologous_instance(rng)
        ob, b = inst.open_book, inst.braid
        mm = monodromy_matrix(ob)
        er = exponent_record(b, ob.r)
        yield trial, ob, mm, er, null_homology_solve(mm, er)


def test_ac1_bennequin_specialization():
    rng = random.Random(SEED)
    failures = []
    for trial in range(200):
        n = rng.randint(1, 8)
        count = rng.randint(0, 20) if n >= 2 else 0
        b = BraidWord(n, tuple(
            BraidLetter(Sigma(rng.randint(1, n - 1)), random_exponent(rng)) for _ in range(count)
        ))
        rep = analyze(OpenBook(1), b)
        a_sigma = sum(l.exponent for l in b.letters)
        if rep.sl != -n + a_sigma:
            failures.append((trial, rep.sl, -n + a_sigma))
    record("AC1 Bennequin specialization sl = -n + a_sigma (200 disk braids)", failures, 200)


def _stabilization_deltas(sign, expected):
    failures, checks = [], 0
    for trial, ob, mm, er, sol in null_homologous_population(500, salt=1):
        state = StabilizedState(er, sol.s)
        before = state.sl(mm)
        for k in range(1, ob.r + 1):
            checks += 1
            delta = stabilize(state, sign, k, mm).sl(mm) - before
            if delta != expected:
                failures.append((trial, k, delta))
    return failures, checks


def test_ac2_negative_stabilization_delta():
    failures, checks = _stabilization_deltas(-1, -2)
    record("AC2 negative stabilization changes sl by -2 (500 instances, every binding)", failures, checks)


def test_ac3_positive_stabilization_invariance():
    failures, checks = _stabilization_deltas(+1, 0)
    record("AC3 positive stabilization leaves sl unchanged (500 instances, every binding)", failures, checks)


def test_ac4_census_formula_equivalence():
    failures = []
    for trial, ob, mm, er, sol in null_homologous_population(500, salt=1):
        sl = self_linking(mm, er, sol)
        normal = normalize_nonnegative(StabilizedState(er, sol.s), mm)
        assert all(x >= 0 for x in normal.s)
        census = singularity_census(mm, normal.record, normal.s)
        if census.sl_census != sl:
            failures.append((trial, census.sl_census, sl))
    record("AC4 census sl = formula sl after s >= 0 normalization (500 instances)", failures, 500)


def test_ac5_matrix_symmetry_and_diagonal():
    failures = []
    for trial in range(1000):
        ob = random_open_book(trial_rng(SEED + 5, trial))
        mm = monodromy_matrix(ob)
        k = ob.boundary_exponents()
        ok = mm.T.is_symmetric() and all(
            mm.t(i, i) - mm.off_diagonal_row_sum(i) == k[i] for i in range(2, ob.r + 1)
        )
        if not ok:
            failures.append(trial)
    record("AC5 T symmetric with t_ii - sum_{j!=i} t_ij = k_i (1000 words)", failures, 1000)


def test_ac6_snf_contracts():
    rng = random.Random(SEED + 6)
    failures = []
    for trial in range(1000):
        m, n = rng.randint(0, 5), rng.randint(0, 5)
        A = IntMatrix.from_rows([[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)], n)
        snf = smith_normal_form(A)
        ok = (
            snf.U @ A @ snf.V == snf.D
            and abs(determinant(snf.U)) == 1
            and abs(determinant(snf.V)) == 1
            and is_smith_normal_form(snf.D)
        )
        if ok and m == n and determinant(A):
            order = 1
            for d in cokernel_invariants(A).torsion:
                order *= d
            ok = order == abs(determinant(A))
        if not ok:
            failures.append(A.tolist())
    record("AC6 SNF: UAV = D, unimodular, divisibility, |det| = torsion order (1000)", failures, 1000)


def test_ac7_solver_matches_brute_force():
    rng = random.Random(SEED + 7)
    box = range(-50, 51)
    failures = []
    for trial in range(300):
        A = IntMatrix.from_rows([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        y = (rng.randint(-6, 6), rng.randint(-6, 6))
        brute = any(A @ x == y for x in itertools.product(box, repeat=2))
        sol = solve_integer(A, y)
        if sol.solvable != brute or (sol.solvable and A @ sol.x != y):
            failures.append((A.tolist(), y))
    record("AC7 solve_integer existence matches brute force over [-50,50]^2 (300)", failures, 300)


def test_ac8_normalization_preserves_sl():
    failures, found, trial = [], 0, 0
    while found < 200:
        rng = trial_rng(SEED + 8, trial)
        trial += 1
        ob = random_open_book(rng, r=rng.randint(2, 6))
        mm = monodromy_matrix(ob)
        s = [rng.randint(-4, 3) for _ in range(ob.r - 1)]
        if min(s) >= 0:
            s[rng.randrange(len(s))] = -rng.randint(1, 4)
        b = braid_with_exponents(rng, rng.randint(1, 6), mm.T @ s, rng.randint(0, 8))
        er = exponent_record(b, ob.r)
        sol = null_homology_solve(mm, er)
        if min(sol.s) >= 0:
            continue
        found += 1
        state = StabilizedState(er, sol.s)
        out = normalize_nonnegative(state, mm)
        if min(out.s) < 0 or out.sl(mm) != state.sl(mm):
            failures.append((trial, sol.s, out.s))
    record("AC8 normalization gives s >= 0 with sl unchanged (200 negative-s instances)", failures, 200)


GOLDENS = [
    ("disk_trefoil.txt", True, 1),
    ("disk_sigma1.txt", True, -1),
    ("annulus_odd.txt", False, None),
    ("annulus_even.txt", True, -1),
]


def test_ac9_goldens(data_dir, capsys):
    failures = []
    for name, null_hom, sl in GOLDENS:
        inst = parse_instance((data_dir / name).read_text())
        rep = analyze(inst.open_book, inst.braid)
        if (rep.null_homologous, rep.sl) != (null_hom, sl):
            failures.append((name, rep.null_homologous, rep.sl))
    main(["stabilize", str(data_dir / "annulus_even.txt"), "--sign", "neg", "--binding", "2", "--json"])
    d = json.loads(capsys.readouterr().out)
    if (d["sl_before"], d["sl_after"]) != (-1, -3):
        failures.append(("stabilization", d["sl_before"], d["sl_after"]))
    record("AC9 hand-worked goldens from committed instance files", failures, len(GOLDENS) + 1)


if __name__ == "__main__":
    import sys
    from pathlib import Path

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "--rootdir", str(Path(__file__).parent.parent)]))
