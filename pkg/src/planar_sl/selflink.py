"""Null-homology certificates and the self-linking formula.

A braid ``b`` is null-homologous exactly when its rho exponent vector lies in
the integer image of ``T``: there are integers ``s_2..s_r`` with

    a_rho_j = sum_i s_i t_{i,j}       for every j.

Given such ``s``, the self-linking number relative to the Seifert class it
determines is

    sl = -n + a_sigma + sum_j a_rho_j (1 - s_j) - sum_j s_j sum_{i != j} t_{j,i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .intlinalg import solve_integer
from .model import ExponentRecord
from .monodromy import MonodromyMatrix

__all__ = [
    "SeifertSolution",
    "SolutionMismatchError",
    "null_homology_solve",
    "check_certificate",
    "self_linking",
    "kernel_delta",
    "sl_variation_over_kernel",
]


class SolutionMismatchError(ValueError):
    """``s`` does not satisfy ``a_rho_j = sum_i s_i t_{i,j}``."""


@dataclass(frozen=True)
class SeifertSolution:
    """Coefficients ``s`` (index ``j`` at position ``j - 2``) and a basis of ``ker T``."""

    s: tuple[int, ...]
    kernel_basis: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "kernel_basis", tuple(tuple(v) for v in self.kernel_basis))


def _check_lengths(mm: MonodromyMatrix, er: ExponentRecord):
    if len(er.a_rho) != mm.r - 1:
        raise ValueError(f"a_rho has length {len(er.a_rho)}, expected r-1 = {mm.r - 1}")


def null_homology_solve(mm: MonodromyMatrix, er: ExponentRecord) -> Optional[SeifertSolution]:
    """Canonical integer solution of ``T s = a_rho``, or None if ``b`` is not null-homologous.

    ``T`` is symmetric, so solving with ``T`` or its transpose is the same.
    """
    _check_lengths(mm, er)
    sol = solve_integer(mm.T, er.a_rho)
    if sol.x is None:
        return None
    return SeifertSolution(sol.x, sol.kernel_basis)


def check_certificate(mm: MonodromyMatrix, a_rho: Sequence[int], s: Sequence[int]) -> bool:
    """``a_rho_j == sum_i s_i t_{i,j}`` for all ``j``, summing down columns of ``T``."""
    size = mm.r - 1
    if len(s) != size or len(a_rho) != size:
        return False
    return all(
        a_rho[j] == sum(s[i] * mm.T[i, j] for i in range(size)) for j in range(size)
    )


def _formula(mm: MonodromyMatrix, er: ExponentRecord, s: Sequence[int]) -> int:
    sl = -er.n + er.a_sigma
    for j in range(2, mm.r + 1):
        s_j = s[j - 2]
        sl += er.rho(j) * (1 - s_j) - s_j * mm.off_diagonal_row_sum(j)
    return sl


def self_linking(mm: MonodromyMatrix, er: ExponentRecord, sol: SeifertSolution | Sequence[int]) -> int:
    """Self-linking number of the braid relative to the Seifert class of ``sol``.

    ``sol`` may be a :class:`SeifertSolution` or a bare coefficient vector.
    Negative coefficients are accepted: the value is the formula evaluated
    at that certificate.

    >>> from planar_sl.intlinalg import IntMatrix
    >>> disk = MonodromyMatrix(1, IntMatrix.zeros(0, 0))
    >>> self_linking(disk, ExponentRecord(n=2, a_sigma=3, a_rho=()), ())
    1
    """
    _check_lengths(mm, er)
    s = sol.s if isinstance(sol, SeifertSolution) else tuple(sol)
    if not check_certificate(mm, er.a_rho, s):
        raise SolutionMismatchError(f"s = {list(s)} does not solve T s = a_rho = {list(er.a_rho)}")
    return _formula(mm, er, s)


def kernel_delta(mm: MonodromyMatrix, er: ExponentRecord, v: Sequence[int]) -> int:
    """Change of ``sl`` when ``s`` moves to ``s + v`` with ``v`` in ``ker T``.

    The formula is affine in ``s``, so the change is
    ``-sum_j v_j (a_rho_j + sum_{i != j} t_{j,i})``.
    """
    return -sum(
        v[j - 2] * (er.rho(j) + mm.off_diagonal_row_sum(j)) for j in range(2, mm.r + 1)
    )


def sl_variation_over_kernel(
    mm: MonodromyMatrix, er: ExponentRecord, sol: SeifertSolution
) -> list[tuple[tuple[int, ...], int]]:
    """``(v, delta)`` for each kernel basis vector ``v``.

    All deltas vanish iff ``sl`` is the same for every integer solution.
    """
    _check_lengths(mm, er)
    return [(v, kernel_delta(mm, er, v)) for v in sol.kernel_basis]
