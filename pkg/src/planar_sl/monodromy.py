"""The monodromy matrix of a planar open book and the homology it presents.

Let ``d_i`` (``i = 2..r``) be disjoint arcs from ``gamma_i`` to ``gamma_1``.
The monodromy matrix ``T`` records

    [d_i] - phi_*[d_i] = sum_j t_{i,j} [gamma_j]   in H_1(page),

and ``H_1(M; Z)`` is the cokernel of ``T``. In terms of the monodromy word,
``t_{i,j}`` (``i != j``) is the total exponent of the twists ``A_{i,j}`` and
``t_{i,i} = k_i + sum_{j != i} t_{i,j}`` where ``k_i`` is the total exponent
of ``A_i``.

Those sums run over letter occurrences regardless of position, so ``T`` is
a function of the abelianized monodromy only. Nothing here may rely on the
order of the word; features that need ``phi`` itself (images of curves,
word-level stabilization about ``gamma_k``) are outside this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import CokernelInvariants, IntMatrix, cokernel_invariants, smith_normal_form
from .model import OpenBook

__all__ = [
    "MonodromyMatrix",
    "monodromy_matrix",
    "first_homology",
    "well_definedness_rank",
]


@dataclass(frozen=True)
class MonodromyMatrix:
    """``T`` as an ``(r-1) x (r-1)`` matrix; :meth:`t` takes indices in 2..r."""

    r: int
    T: IntMatrix

    def __post_init__(self):
        if self.T.shape != (self.r - 1, self.r - 1):
            raise ValueError(f"T has shape {self.T.shape}, expected {(self.r - 1,) * 2}")

    def t(self, i: int, j: int) -> int:
        if not (2 <= i <= self.r and 2 <= j <= self.r):
            raise IndexError(f"({i}, {j}) outside 2..{self.r}")
        return self.T[i - 2, j - 2]

    def off_diagonal_row_sum(self, j: int) -> int:
        """``sum_{i != j} t_{j,i}``."""
        return sum(self.t(j, i) for i in range(2, self.r + 1) if i != j)

    def tolist(self) -> list[list[int]]:
        return self.T.tolist()


def monodromy_matrix(ob: OpenBook) -> MonodromyMatrix:
    """
    >>> from planar_sl.parsing import parse_open_book
    >>> monodromy_matrix(parse_open_book("r=3; A{2,3}")).tolist()
    [[1, 1], [1, 1]]
    """
    size = ob.r - 1
    t = [[0] * size for _ in range(size)]
    for (i, j), eps in ob.pair_exponents().items():
        t[i - 2][j - 2] += eps
        t[j - 2][i - 2] += eps
    for i, k in ob.boundary_exponents().items():
        row = i - 2
        t[row][row] = k + sum(t[row][c] for c in range(size) if c != row)
    return MonodromyMatrix(ob.r, IntMatrix.from_rows(t, size))


def first_homology(ob: OpenBook) -> CokernelInvariants:
    """``H_1`` of the closed 3-manifold carrying ``ob``."""
    return cokernel_invariants(monodromy_matrix(ob).T)


def well_definedness_rank(mm: MonodromyMatrix) -> bool:
    """True when ``T`` has full rank ``r - 1``.

    Then ``H^2(M; Z)`` is torsion, the Euler class pairs trivially with every
    closed class, and the self-linking number does not depend on which
    Seifert class is used.
    """
    return smith_normal_form(mm.T).rank == mm.r - 1
