"""Open books with planar pages and braids inside them.

The page is a sphere with ``r`` disks removed; its boundary circles are
``gamma_1 .. gamma_r``. The monodromy is a word in the Dehn twists ``A_i``
(about a curve parallel to ``gamma_i``) and ``A_{i,j}`` (about a curve
enclosing ``gamma_i`` and ``gamma_j``). A braid is a word in the half twists
``sigma_i`` and the windings ``rho_j`` of the last strand around ``gamma_j``.

Storage conventions:

* :attr:`OpenBook.monodromy` is in *application* order. A written word is
  read right to left, so its rightmost letter comes first in the tuple.
* :attr:`BraidWord.letters` is in written order (braid words compose left
  to right).

Only exponent sums feed the downstream invariants, so these orders matter
for serialization and nothing else.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "BoundaryTwist",
    "PairTwist",
    "MonodromyLetter",
    "OpenBook",
    "Sigma",
    "Rho",
    "BraidLetter",
    "BraidWord",
    "ExponentRecord",
    "ValidationError",
    "exponent_record",
    "full_twist_expansion",
]


class ValidationError(ValueError):
    """A well-formed word that violates an index or exponent constraint."""


def _check_exponent(exponent: int) -> None:
    if not isinstance(exponent, int) or isinstance(exponent, bool):
        raise TypeError(f"exponent must be int, got {exponent!r}")
    if exponent == 0:
        raise ValidationError("zero exponent")


@dataclass(frozen=True)
class BoundaryTwist:
    """``A_i``: positive Dehn twist about a curve parallel to ``gamma_i``."""

    i: int

    def __str__(self):
        return f"A{self.i}"


@dataclass(frozen=True)
class PairTwist:
    """``A_{i,j}``: positive Dehn twist about a curve around ``gamma_i`` and ``gamma_j``."""

    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ValidationError(f"pair twist indices must increase, got ({self.i},{self.j})")

    def __str__(self):
        return f"A{{{self.i},{self.j}}}"


@dataclass(frozen=True)
class MonodromyLetter:
    twist: Union[BoundaryTwist, PairTwist]
    exponent: int = 1

    def __post_init__(self):
        _check_exponent(self.exponent)

    def __str__(self):
        return str(self.twist) if self.exponent == 1 else f"{self.twist}^{self.exponent}"


@dataclass(frozen=True)
class OpenBook:
    """Planar open book: ``r`` binding components and a monodromy word.

    ``monodromy`` is stored in application order (first letter acts first).
    """

    r: int
    monodromy: tuple[MonodromyLetter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 1:
            raise ValidationError(f"r must be a positive integer, got {self.r!r}")
        object.__setattr__(self, "monodromy", tuple(self.monodromy))
        if self.r == 1 and self.monodromy:
            raise ValidationError("the disk page (r=1) admits only the trivial monodromy")
        for letter in self.monodromy:
            tw = letter.twist
            indices = (tw.i,) if isinstance(tw, BoundaryTwist) else (tw.i, tw.j)
            for idx in indices:
                if not 2 <= idx <= self.r:
                    raise ValidationError(
                        f"twist index {idx} in {tw} out of range 2..{self.r}"
                    )

    @classmethod
    def from_written(cls, r: int, written: Iterable[MonodromyLetter]) -> "OpenBook":
        """Build from letters in written (right-to-left) order."""
        return cls(r, tuple(reversed(tuple(written))))

    @property
    def written(self) -> tuple[MonodromyLetter, ...]:
        return tuple(reversed(self.monodromy))

    def boundary_exponents(self) -> dict[int, int]:
        """``k_i``: total exponent of ``A_i`` for each ``i`` in 2..r."""
        k = {i: 0 for i in range(2, self.r + 1)}
        for letter in self.monodromy:
            if isinstance(letter.twist, BoundaryTwist):
                k[letter.twist.i] += letter.exponent
        return k

    def pair_exponents(self) -> dict[tuple[int, int], int]:
        """Total exponent of ``A_{i,j}`` for each pair ``i < j``."""
        eps: Counter = Counter()
        for letter in self.monodromy:
            if isinstance(letter.twist, PairTwist):
                eps[(letter.twist.i, letter.twist.j)] += letter.exponent
        return dict(eps)


def full_twist_expansion(r: int, power: int = 1) -> tuple[MonodromyLetter, ...]:
    """Written-order word equal to ``A_1 ** power`` on the page with ``r`` boundaries.

    The boundary-parallel twist ``A_1`` satisfies the generalized lantern
    relation ``A_1 = prod_{i<j} A_{i,j} * prod_i A_i^(3-r)`` (every factor
    here commutes with ``A_1``). For ``r = 2`` this reduces to ``A_1 = A_2``
    and for ``r = 3`` to ``A_1 = A_{2,3}``. On the disk ``A_1`` is trivial.
    """
    if r == 1:
        return ()
    once = [MonodromyLetter(PairTwist(i, j)) for i in range(2, r + 1) for j in range(i + 1, r + 1)]
    if r != 3:
        once += [MonodromyLetter(BoundaryTwist(i), 3 - r) for i in range(2, r + 1)]
    if power < 0:
        once = [MonodromyLetter(l.twist, -l.exponent) for l in reversed(once)]
    return tuple(once) * abs(power)


@dataclass(frozen=True)
class Sigma:
    """``sigma_i``: half twist of strands ``i`` and ``i+1``."""

    i: int

    def __str__(self):
        return f"s{self.i}"


@dataclass(frozen=True)
class Rho:
    """``rho_j``: the last strand winding once around ``gamma_j``."""

    j: int

    def __str__(self):
        return f"r{self.j}"


@dataclass(frozen=True)
class BraidLetter:
    generator: Union[Sigma, Rho]
    exponent: int = 1

    def __post_init__(self):
        _check_exponent(self.exponent)

    def __str__(self):
        g = str(self.generator)
        return g if self.exponent == 1 else f"{g}^{self.exponent}"


@dataclass(frozen=True)
class BraidWord:
    """An ``n``-strand braid word, letters in written order."""

    n: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            g = letter.generator
            if isinstance(g, Sigma) and not 1 <= g.i <= self.n - 1:
                raise ValidationError(f"{g} needs 1 <= i <= n-1 = {self.n - 1}")

    def check_against(self, r: int) -> None:
        """Raise unless every ``rho_j`` has ``2 <= j <= r``."""
        for letter in self.letters:
            g = letter.generator
            if isinstance(g, Rho) and not 2 <= g.j <= r:
                if r == 1:
                    raise ValidationError(f"{g} is meaningless on the disk page (r=1)")
                raise ValidationError(f"{g} index out of range 2..{r}")


@dataclass(frozen=True)
class ExponentRecord:
    """Exponent sums of a braid word.

    ``a_rho[j - 2]`` is the exponent sum of ``rho_j``; use :meth:`rho` to index
    by binding number.
    """

    n: int
    a_sigma: int
    a_rho: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a_rho", tuple(self.a_rho))

    @property
    def r(self) -> int:
        return len(self.a_rho) + 1

    def rho(self, j: int) -> int:
        if not 2 <= j <= self.r:
            raise IndexError(f"binding index {j} out of range 2..{self.r}")
        return self.a_rho[j - 2]


def exponent_record(b: BraidWord, r: int) -> ExponentRecord:
    b.check_against(r)
    a_sigma = 0
    a_rho = [0] * (r - 1)
    for letter in b.letters:
        if isinstance(letter.generator, Sigma):
            a_sigma += letter.exponent
        else:
            a_rho[letter.generator.j - 2] += letter.exponent
    return ExponentRecord(b.n, a_sigma, tuple(a_rho))
