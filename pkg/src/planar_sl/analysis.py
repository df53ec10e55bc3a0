"""End-to-end analysis of a braid in a planar open book."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .census import CONTRIBUTIONS, CensusReport, singularity_census
from .intlinalg import CokernelInvariants
from .model import BraidWord, ExponentRecord, OpenBook, exponent_record
from .monodromy import MonodromyMatrix, first_homology, monodromy_matrix, well_definedness_rank
from .selflink import SeifertSolution, null_homology_solve, self_linking, sl_variation_over_kernel
from .stabilize import StabilizedState, normalize_nonnegative

__all__ = ["SlReport", "analyze"]


@dataclass(frozen=True)
class SlReport:
    """Everything computed for one (open book, braid) pair.

    When the braid is not null-homologous, ``solution``, ``sl``,
    ``kernel_variation_zero`` and ``census`` are None.
    """

    exponents: ExponentRecord
    matrix: MonodromyMatrix
    homology: CokernelInvariants
    null_homologous: bool
    solution: Optional[SeifertSolution]
    sl: Optional[int]
    well_defined: bool
    kernel_variation_zero: Optional[bool]
    kernel_deltas: tuple[tuple[tuple[int, ...], int], ...]
    census: Optional[CensusReport]

    def to_dict(self) -> dict:
        """JSON-ready dict with a fixed key order."""
        er = self.exponents
        census = None
        if self.census is not None:
            census = {
                "e_plus": self.census.e_plus,
                "e_minus": self.census.e_minus,
                "h_net": self.census.h_net,
                "contributions": {k: self.census.contributions[k] for k in CONTRIBUTIONS},
                "sl_census": self.census.sl_census,
            }
        return {
            "r": self.matrix.r,
            "n": er.n,
            "a_sigma": er.a_sigma,
            "a_rho": list(er.a_rho),
            "t_matrix": self.matrix.tolist(),
            "h1": {"torsion": list(self.homology.torsion), "free_rank": self.homology.free_rank},
            "null_homologous": self.null_homologous,
            "s": list(self.solution.s) if self.solution else None,
            "sl": self.sl,
            "well_defined": self.well_defined,
            "kernel_variation_zero": self.kernel_variation_zero,
            "census": census,
        }


def analyze(ob: OpenBook, b: BraidWord) -> SlReport:
    """Exponent sums, ``T``, ``H_1``, certificate, ``sl`` and the census cross-check.

    The census runs on the record after positive stabilizations that make
    ``s >= 0``; those leave ``sl`` unchanged, so ``census.sl_census`` must
    equal ``sl``.
    """
    er = exponent_record(b, ob.r)
    mm = monodromy_matrix(ob)
    h1 = first_homology(ob)
    full_rank = well_definedness_rank(mm)
    sol = null_homology_solve(mm, er)
    if sol is None:
        return SlReport(er, mm, h1, False, None, None, full_rank, None, (), None)

    sl = self_linking(mm, er, sol)
    deltas = tuple(sl_variation_over_kernel(mm, er, sol))
    normal = normalize_nonnegative(StabilizedState(er, sol.s), mm)
    census = singularity_census(mm, normal.record, normal.s)
    return SlReport(
        exponents=er,
        matrix=mm,
        homology=h1,
        null_homologous=True,
        solution=sol,
        sl=sl,
        well_defined=full_rank,
        kernel_variation_zero=all(d == 0 for _, d in deltas),
        kernel_deltas=deltas,
        census=census,
    )
