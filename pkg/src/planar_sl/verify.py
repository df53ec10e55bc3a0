"""Random instances and the property checks run by ``planar-sl verify``.

Every trial gets its own ``random.Random`` seeded from ``(seed, trial)``, so
any single trial can be replayed and results do not depend on how trials
are scheduled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .census import singularity_census
from .intlinalg import cokernel_invariants, determinant, is_smith_normal_form, smith_normal_form
from .model import (
    BoundaryTwist,
    BraidLetter,
    BraidWord,
    MonodromyLetter,
    OpenBook,
    PairTwist,
    Rho,
    Sigma,
    exponent_record,
)
from .monodromy import monodromy_matrix
from .parsing import Instance, format_instance
from .selflink import check_certificate, kernel_delta, null_homology_solve, self_linking
from .stabilize import StabilizedState, normalize_nonnegative, stabilize

__all__ = [
    "trial_rng",
    "random_exponent",
    "random_open_book",
    "random_braid",
    "braid_with_exponents",
    "random_null_homologous_instance",
    "PROPERTIES",
    "check_instance",
    "VerifyResult",
    "run_verify",
]

MAX_R = 6
MAX_MONODROMY_LETTERS = 12
MAX_N = 6
MAX_BRAID_LETTERS = 15
MAX_EXPONENT = 3


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial)


def random_exponent(rng: random.Random, bound: int = MAX_EXPONENT) -> int:
    return rng.choice([e for e in range(-bound, bound + 1) if e])


def random_open_book(rng: random.Random, r: Optional[int] = None) -> OpenBook:
    """Random monodromy word; half the time every ``A_i`` appears at least once."""
    r = rng.randint(1, MAX_R) if r is None else r
    if r == 1:
        return OpenBook(1)
    written: list[MonodromyLetter] = []
    if rng.random() < 0.5:
        written += [MonodromyLetter(BoundaryTwist(i), random_exponent(rng)) for i in range(2, r + 1)]
    while len(written) < MAX_MONODROMY_LETTERS and rng.random() < 0.8:
        if r >= 3 and rng.random() < 0.6:
            i, j = sorted(rng.sample(range(2, r + 1), 2))
            twist = PairTwist(i, j)
        else:
            twist = BoundaryTwist(rng.randint(2, r))
        written.append(MonodromyLetter(twist, random_exponent(rng)))
    rng.shuffle(written)
    return OpenBook.from_written(r, written[:MAX_MONODROMY_LETTERS])


def _random_generator(rng: random.Random, n: int, r: int):
    if n >= 2 and (r == 1 or rng.random() < 0.5):
        return Sigma(rng.randint(1, n - 1))
    return Rho(rng.randint(2, r))


def random_braid(rng: random.Random, r: int, n: Optional[int] = None,
                 max_letters: int = MAX_BRAID_LETTERS) -> BraidWord:
    n = rng.randint(1, MAX_N) if n is None else n
    if n == 1 and r == 1:
        return BraidWord(1)
    count = rng.randint(0, max_letters)
    return BraidWord(n, tuple(
        BraidLetter(_random_generator(rng, n, r), random_exponent(rng)) for _ in range(count)
    ))


def braid_with_exponents(rng: random.Random, n: int, a_rho, sigma_letters: int) -> BraidWord:
    """A shuffled word with the given rho exponent sums plus random sigma letters."""
    letters = []
    for j, a in enumerate(a_rho, start=2):
        while a:
            step = max(-MAX_EXPONENT, min(MAX_EXPONENT, a))
            step = rng.choice([e for e in range(1, abs(step) + 1)]) * (1 if a > 0 else -1)
            letters.append(BraidLetter(Rho(j), step))
            a -= step
    if n >= 2:
        letters += [
            BraidLetter(Sigma(rng.randint(1, n - 1)), random_exponent(rng))
            for _ in range(sigma_letters)
        ]
    rng.shuffle(letters)
    return BraidWord(n, tuple(letters))


def random_null_homologous_instance(rng: random.Random, r: Optional[int] = None) -> Instance:
    """A random instance whose braid is null-homologous.

    Half the time a plain random braid is tried first. Otherwise (or when
    that braid is not null-homologous) a random ``s`` with entries in
    ``[-3, 3]`` is drawn and the braid is built with ``a_rho = T s``.
    """
    ob = random_open_book(rng, r)
    mm = monodromy_matrix(ob)
    if rng.random() < 0.5:
        b = random_braid(rng, ob.r)
        if null_homology_solve(mm, exponent_record(b, ob.r)) is not None:
            return Instance(ob, b)
    s = [rng.randint(-3, 3) for _ in range(ob.r - 1)]
    a_rho = mm.T @ s
    n = rng.randint(1, MAX_N)
    return Instance(ob, braid_with_exponents(rng, n, a_rho, rng.randint(0, 8)))


# -- properties ---------------------------------------------------------------

def _t_symmetric(ob, mm, er, sol, rng):
    if not mm.T.is_symmetric():
        return "T is not symmetric"
    k = ob.boundary_exponents()
    for i in range(2, ob.r + 1):
        if mm.t(i, i) - mm.off_diagonal_row_sum(i) != k[i]:
            return f"diagonal identity fails at i={i}"
    return None


def _snf(ob, mm, er, sol, rng):
    snf = smith_normal_form(mm.T)
    if snf.U @ mm.T @ snf.V != snf.D:
        return "U T V != D"
    if abs(determinant(snf.U)) != 1 or abs(determinant(snf.V)) != 1:
        return "transform not unimodular"
    if not is_smith_normal_form(snf.D):
        return "D not in Smith form"
    det = determinant(mm.T)
    if det:
        order = 1
        for d in cokernel_invariants(mm.T).torsion:
            order *= d
        if order != abs(det):
            return f"torsion order {order} != |det T| = {abs(det)}"
    return None


def _certificate(ob, mm, er, sol, rng):
    if not check_certificate(mm, er.a_rho, sol.s):
        return "T s != a_rho"
    if any(any(x for x in mm.T @ v) for v in sol.kernel_basis):
        return "kernel vector not in ker T"
    return None


def _census(ob, mm, er, sol, rng):
    sl = self_linking(mm, er, sol)
    normal = normalize_nonnegative(StabilizedState(er, sol.s), mm)
    census = singularity_census(mm, normal.record, normal.s)
    if census.sl_census != sl:
        return f"census sl {census.sl_census} != formula sl {sl}"
    return None


def _stabilization_deltas(ob, mm, er, sol, rng):
    state = StabilizedState(er, sol.s)
    before = state.sl(mm)
    for k in range(1, ob.r + 1):
        for sign, expected in ((1, 0), (-1, -2)):
            after = stabilize(state, sign, k, mm)
            if not check_certificate(mm, after.record.a_rho, after.s):
                return f"move ({sign:+d}, {k}) broke T s = a_rho"
            delta = after.sl(mm) - before
            if delta != expected:
                return f"move ({sign:+d}, {k}) changed sl by {delta}, expected {expected}"
    return None


def _normalization(ob, mm, er, sol, rng):
    state = StabilizedState(er, sol.s)
    normal = normalize_nonnegative(state, mm)
    if any(x < 0 for x in normal.s):
        return "normalized s has a negative entry"
    if normal.sl(mm) != state.sl(mm):
        return "normalization changed sl"
    if normalize_nonnegative(normal, mm) != normal:
        return "normalization not idempotent"
    return None


def _kernel_linearity(ob, mm, er, sol, rng):
    sl = self_linking(mm, er, sol)
    for v in sol.kernel_basis:
        c = random_exponent(rng)
        moved = [x + c * y for x, y in zip(sol.s, v)]
        if self_linking(mm, er, moved) - sl != c * kernel_delta(mm, er, v):
            return f"kernel vector {list(v)} breaks linearity"
    return None


PROPERTIES: dict[str, Callable] = {
    "t_symmetry": _t_symmetric,
    "snf_contracts": _snf,
    "certificate": _certificate,
    "census_formula": _census,
    "stabilization_deltas": _stabilization_deltas,
    "normalization": _normalization,
    "kernel_linearity": _kernel_linearity,
}


def check_instance(inst: Instance, rng: random.Random) -> dict[str, Optional[str]]:
    """Run every property on a null-homologous instance; None marks a pass."""
    ob, b = inst.open_book, inst.braid
    mm = monodromy_matrix(ob)
    er = exponent_record(b, ob.r)
    sol = null_homology_solve(mm, er)
    if sol is None:
        raise ValueError("instance is not null-homologous")
    out = {}
    for name, prop in PROPERTIES.items():
        try:
            out[name] = prop(ob, mm, er, sol, rng)
        except Exception as exc:  # a crash counts as a failure of that property
            out[name] = f"{type(exc).__name__}: {exc}"
    return out


@dataclass
class VerifyResult:
    trials: int
    passed: dict = field(default_factory=lambda: {name: 0 for name in PROPERTIES})
    failed: dict = field(default_factory=lambda: {name: 0 for name in PROPERTIES})
    counterexample: Optional[tuple[int, str, str, str]] = None  # trial, property, message, instance

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def summary(self) -> str:
        lines = [f"trials: {self.trials}"]
        for name in PROPERTIES:
            lines.append(f"  {name:<22} passed {self.passed[name]:>6}  failed {self.failed[name]:>6}")
        if self.ok:
            lines.append("all properties hold")
        else:
            trial, name, message, text = self.counterexample
            lines.append(f"FAILED: first counterexample at trial {trial} ({name}): {message}")
            lines.append(text.rstrip())
        return "\n".join(lines)


def run_verify(seed: int = 0, trials: int = 500) -> VerifyResult:
    result = VerifyResult(trials)
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        inst = random_null_homologous_instance(rng)
        for name, message in check_instance(inst, rng).items():
            if message is None:
                result.passed[name] += 1
            else:
                result.failed[name] += 1
                if result.counterexample is None:
                    result.counterexample = (trial, name, message, format_instance(inst))
    return result
