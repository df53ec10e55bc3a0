"""Braid stabilization about a binding component, on exponent records.

A stabilization about ``gamma_1`` adds a strand and a kink of the given sign.
A stabilization about ``gamma_k`` (``k >= 2``) additionally drags the new
strand around ``gamma_k``, which costs ``[d_k] - phi_*[d_k]`` in homology:

    n       -> n + 1
    a_sigma -> a_sigma + sign + 2 a_rho_k
    s_k     -> s_k + 1
    a_rho_j -> a_rho_j + t_{k,j}       for every j

The word-level image of such a move depends on ``phi`` itself, not just on
``T``, so moves act on records. :func:`stabilize_word_first_binding` is the
one word-level move provided, since about ``gamma_1`` it is canonical.

Positive moves leave ``sl`` unchanged and negative moves lower it by 2.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .model import BraidLetter, BraidWord, ExponentRecord, Sigma
from .monodromy import MonodromyMatrix
from .selflink import SolutionMismatchError, check_certificate, self_linking

__all__ = [
    "StabilizedState",
    "stabilize",
    "normalize_nonnegative",
    "stabilize_word_first_binding",
]


@dataclass(frozen=True)
class StabilizedState:
    """A record with its Seifert coefficients and the moves applied so far.

    ``history`` holds ``(sign, k)`` pairs in the order they were applied.
    """

    record: ExponentRecord
    s: tuple[int, ...]
    history: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "history", tuple(self.history))

    def sl(self, mm: MonodromyMatrix) -> int:
        return self_linking(mm, self.record, self.s)


def stabilize(state: StabilizedState, sign: int, k: int, mm: MonodromyMatrix) -> StabilizedState:
    """One stabilization of sign ``sign`` (+1 or -1) about ``gamma_k``, ``1 <= k <= r``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if not 1 <= k <= mm.r:
        raise IndexError(f"binding index {k} out of range 1..{mm.r}")
    rec = state.record
    if len(rec.a_rho) != mm.r - 1 or len(state.s) != mm.r - 1:
        raise ValueError("state does not match the monodromy matrix")
    history = state.history + ((sign, k),)

    if k == 1:
        new = replace(rec, n=rec.n + 1, a_sigma=rec.a_sigma + sign)
        return StabilizedState(new, state.s, history)

    a_rho = tuple(a + mm.t(k, j) for j, a in enumerate(rec.a_rho, start=2))
    s = list(state.s)
    s[k - 2] += 1
    new = ExponentRecord(rec.n + 1, rec.a_sigma + sign + 2 * rec.rho(k), a_rho)
    return StabilizedState(new, tuple(s), history)


def normalize_nonnegative(state: StabilizedState, mm: MonodromyMatrix) -> StabilizedState:
    """Positive stabilizations about each ``gamma_k`` until every ``s_k >= 0``.

    Exactly ``-s_k`` moves are made about ``gamma_k`` when ``s_k < 0``; ``sl``
    is checked to be unchanged.
    """
    if not check_certificate(mm, state.record.a_rho, state.s):
        raise SolutionMismatchError("state does not satisfy T s = a_rho")
    before = state.sl(mm)
    for k in range(2, mm.r + 1):
        for _ in range(max(0, -state.s[k - 2])):
            state = stabilize(state, +1, k, mm)
    after = state.sl(mm)
    if after != before:
        raise AssertionError(f"positive stabilization changed sl from {before} to {after}")
    return state


def stabilize_word_first_binding(b: BraidWord, sign: int) -> BraidWord:
    """Stabilize about ``gamma_1`` at the word level.

    The new strand is put first: every ``sigma_i`` is shifted to
    ``sigma_{i+1}`` and ``sigma_1^sign`` is prepended. Rho letters keep acting
    on the last strand, which is the same strand as before, so the record
    changes by ``n + 1`` and ``a_sigma + sign`` exactly.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    shifted = [
        BraidLetter(Sigma(l.generator.i + 1), l.exponent) if isinstance(l.generator, Sigma) else l
        for l in b.letters
    ]
    return BraidWord(b.n + 1, (BraidLetter(Sigma(1), sign), *shifted))
