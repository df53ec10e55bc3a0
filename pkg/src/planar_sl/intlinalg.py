"""Exact integer matrix algebra.

Smith normal form with transformation matrices, integer linear solving and
kernel lattices, and cokernel invariants of presentation matrices. Entries are
Python ints throughout, so nothing overflows no matter how large the Dehn
twist exponents get.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "IntegerSolution",
    "CokernelInvariants",
    "smith_normal_form",
    "solve_integer",
    "cokernel_invariants",
    "determinant",
    "is_smith_normal_form",
]


@dataclass(frozen=True)
class IntMatrix:
    """An immutable ``rows x cols`` matrix of exact integers, stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in self.entries):
            raise TypeError("IntMatrix entries must be int")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = [other.column(j) for j in range(other.cols)]
            return IntMatrix.from_rows(
                [[_dot(self.row(i), col) for col in cols] for i in range(self.rows)],
                other.cols,
            )
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(vec)}")
        return tuple(_dot(self.row(i), vec) for i in range(self.rows))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def __str__(self):
        return str(self.tolist())


def _dot(a: Iterable[int], b: Iterable[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form of ``A`` together with the unimodular transforms.

    The pivot at each stage is the entry of smallest nonzero absolute value
    in the remaining block, ties broken by row-major position, so the output
    is a deterministic function of the input.

    >>> snf = smith_normal_form(IntMatrix.from_rows([[1, 1], [1, 1]]))
    >>> snf.diagonal
    (1, 0)
    """
    m, n = A.shape
    a = A.tolist()
    u = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    x = abs(a[i][j])
                    if x and (pivot is None or x < pivot[0]):
                        pivot = (x, i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)

            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # a remainder smaller than |p| is now present; re-pivot
                continue

            bad_row = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad_row is None:
                break
            add_row(bad_row, t, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SmithDecomposition(
        IntMatrix.from_rows(u, m), IntMatrix.from_rows(a, n), IntMatrix.from_rows(v, n)
    )


def is_smith_normal_form(D: IntMatrix) -> bool:
    """Diagonal, nonnegative, and each diagonal entry divides the next."""
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j and D[i, j]:
                return False
    diag = [D[i, i] for i in range(min(D.shape))]
    if any(d < 0 for d in diag):
        return False
    for prev, nxt in zip(diag, diag[1:]):
        if prev == 0:
            if nxt != 0:
                return False
        elif nxt % prev:
            return False
    return True


def determinant(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    a = A.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class IntegerSolution:
    """Result of :func:`solve_integer`.

    ``x`` is None when ``A x = y`` has no integer solution. ``kernel_basis``
    spans the integer kernel lattice of ``A`` either way.
    """

    x: Optional[tuple[int, ...]]
    kernel_basis: tuple[tuple[int, ...], ...]

    @property
    def solvable(self) -> bool:
        return self.x is not None


def solve_integer(A: IntMatrix, y: Sequence[int]) -> IntegerSolution:
    """Solve ``A x = y`` over the integers through the Smith decomposition.

    With ``U A V = D`` the system becomes ``D z = U y`` for ``z = V^{-1} x``.
    Pivot coordinates of ``z`` are forced; the free ones are set to zero,
    which makes the particular solution canonical. The trailing columns of
    ``V`` give a basis of the kernel lattice.
    """
    y = tuple(int(c) for c in y)
    if len(y) != A.rows:
        raise ValueError(f"right-hand side has length {len(y)}, expected {A.rows}")
    snf = smith_normal_form(A)
    rank = snf.rank
    kernel = tuple(snf.V.column(j) for j in range(rank, A.cols))

    c = snf.U @ y
    z = [0] * A.cols
    for i in range(rank):
        d = snf.D[i, i]
        if c[i] % d:
            return IntegerSolution(None, kernel)
        z[i] = c[i] // d
    if any(c[i] for i in range(rank, A.rows)):
        return IntegerSolution(None, kernel)
    return IntegerSolution(snf.V @ z, kernel)


@dataclass(frozen=True)
class CokernelInvariants:
    """Finitely generated abelian group ``Z^free_rank + sum Z/d`` for d in torsion."""

    torsion: tuple[int, ...]
    free_rank: int

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel_invariants(A: IntMatrix) -> CokernelInvariants:
    """Invariant factors and free rank of ``Z^cols / (row space of A)``.

    ``A`` is read as a relation matrix whose rows are relations among the
    ``cols`` generators.
    """
    snf = smith_normal_form(A)
    return CokernelInvariants(
        torsion=tuple(d for d in snf.diagonal if d > 1),
        free_rank=A.cols - snf.rank,
    )
