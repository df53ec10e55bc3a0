"""Self-linking from the singularities of the constructed Seifert surface.

For a Seifert surface whose characteristic foliation is Morse-Smale,
``sl = -(e+ - e-) + (h+ - h-)`` where ``e+-`` count elliptic and ``h+-``
hyperbolic singular points by sign. For the surface built from the braid
word and ``s_j >= 0`` copies of the rectangles ``d_j x [0, 1]``:

* elliptic points: one positive per strand (its disk), and each rectangle
  copy meets ``gamma_j`` in a positive and ``gamma_1`` in a negative one;
* hyperbolic points, algebraically:

  - ``bands``      twisted bands of the sigma letters: ``a_sigma``
  - ``annuli``     one per rho annulus: ``sum_j a_rho_j``
  - ``reglue``     cut-and-reglue resolutions: ``-sum_j s_j a_rho_j``
  - ``t_tunnels``  one per T-tunnel, sign opposite to the twist exponent:
                   ``-sum_j s_j sum_{i != j} t_{j,i}``
  - ``u_tunnels``  cancel in pairs: ``0``

Only the algebraic count ``h+ - h-`` is produced; the separate totals
depend on dummy annuli that the construction inserts and later cancels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .model import ExponentRecord
from .monodromy import MonodromyMatrix

__all__ = ["CensusReport", "NegativeCoefficientError", "singularity_census", "CONTRIBUTIONS"]

CONTRIBUTIONS = ("bands", "annuli", "reglue", "t_tunnels", "u_tunnels")


class NegativeCoefficientError(ValueError):
    """The surface is only built for ``s_j >= 0``; normalize first."""


@dataclass(frozen=True)
class CensusReport:
    e_plus: int
    e_minus: int
    h_net: int
    contributions: dict = field(hash=False)
    sl_census: int


def _t_tunnels(mm: MonodromyMatrix, s: Sequence[int]) -> int:
    # (s_i + s_j)|eps| tunnels per A_{i,j}^eps letter, each of sign -sgn(eps)
    total = 0
    for (i, j), eps in _pair_totals(mm).items():
        total -= (s[i - 2] + s[j - 2]) * eps
    return total


def _pair_totals(mm: MonodromyMatrix) -> dict[tuple[int, int], int]:
    return {
        (i, j): mm.t(i, j)
        for i in range(2, mm.r + 1)
        for j in range(i + 1, mm.r + 1)
        if mm.t(i, j)
    }


def singularity_census(mm: MonodromyMatrix, er: ExponentRecord, s: Sequence[int]) -> CensusReport:
    """Count singular points of the Seifert surface for coefficients ``s >= 0``.

    >>> from planar_sl.intlinalg import IntMatrix
    >>> mm = MonodromyMatrix(2, IntMatrix.from_rows([[2]]))
    >>> singularity_census(mm, ExponentRecord(1, 0, (2,)), [1]).sl_census
    -1
    """
    s = tuple(s)
    if len(s) != mm.r - 1 or len(er.a_rho) != mm.r - 1:
        raise ValueError("s and a_rho must have length r - 1")
    if any(x < 0 for x in s):
        raise NegativeCoefficientError(f"census needs s >= 0, got {list(s)}")

    copies = sum(s)
    e_plus = er.n + copies
    e_minus = copies
    contributions = {
        "bands": er.a_sigma,
        "annuli": sum(er.a_rho),
        "reglue": -sum(sj * a for sj, a in zip(s, er.a_rho)),
        "t_tunnels": _t_tunnels(mm, s),
        "u_tunnels": 0,
    }
    h_net = sum(contributions.values())
    return CensusReport(e_plus, e_minus, h_net, contributions, -(e_plus - e_minus) + h_net)
