"""Exact integer linear algebra: matrices, Smith normal form, cokernels.

Everything here works over Python's arbitrary-precision ``int``; there is no
floating point anywhere.  Matrices are small (tens of rows at most), so the
Smith form is computed by plain elementary row/column reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InputError(ValueError):
    """Raised when an operation receives arguments outside its domain."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix."""

    entries: tuple[tuple[int, ...], ...]
    cols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(map(int, row)) for row in self.entries)
        ncols = len(rows[0]) if rows else max(self.cols, 0)
        if any(len(row) != ncols for row in rows):
            raise InputError("ragged matrix rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "cols", ncols)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int = -1) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows), cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        rows = []
        for i in range(n):
            row = [0] * n
            row[i] = 1
            rows.append(row)
        return cls(rows, n)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        return cls(
            tuple(
                tuple(values[i] if i == j and i < len(values) else 0 for j in range(cols))
                for i in range(rows)
            ),
            cols,
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.rows else (), self.rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ocols)
                for row in self.entries
            ),
            other.cols,
        )

    def row_times(self, v: Sequence[int]) -> tuple[int, ...]:
        """Row vector ``v`` multiplied on the left: ``v @ self``."""
        if len(v) != self.rows:
            raise InputError(f"vector of length {len(v)} against {self.rows} rows")
        return tuple(
            sum(v[i] * self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        )


def as_matrix(A) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix.from_rows(A)


def det(A) -> int:
    """Exact determinant by fraction-free integer row reduction.

    Each column is cleared by Euclidean steps between the rows that are
    nonzero there, so sparse (e.g. tridiagonal) matrices stay cheap.
    """
    A = as_matrix(A)
    if not A.is_square():
        raise InputError(f"determinant of a non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    M = A.tolist()
    sign = 1
    result = 1
    for k in range(n):
        live = [i for i in range(k, n) if M[i][k]]
        if not live:
            return 0
        while len(live) > 1:
            r = min(live, key=lambda i: abs(M[i][k]))
            rk = M[r]
            for i in live:
                if i != r:
                    c = M[i][k] // rk[k]
                    row = M[i]
                    for j in range(k, n):
                        if rk[j]:
                            row[j] -= c * rk[j]
            live = [i for i in live if M[i][k]]
        (r,) = live
        if r != k:
            M[k], M[r] = M[r], M[k]
            sign = -sign
        result *= M[k][k]
    return sign * result


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``D`` diagonal, ``d1 | d2 | ...``, all ``di >= 0``."""

    A: IntMatrix
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    def check(self) -> None:
        """Raise ``AssertionError`` if any defining property fails."""
        assert self.U @ self.A @ self.V == self.D, "U*A*V != D"
        assert abs(det(self.U)) == 1 and abs(det(self.V)) == 1, "transform not unimodular"
        d = self.diagonal
        assert all(
            self.D[i, j] == 0
            for i in range(self.D.rows)
            for j in range(self.D.cols)
            if i != j
        ), "D not diagonal"
        assert all(x >= 0 for x in d), "negative invariant factor"
        for a, b in zip(d, d[1:]):
            assert (b == 0) if a == 0 else (b % a == 0), f"{a} does not divide {b}"


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with unimodular change-of-basis matrices.

    Pivots on the nonzero entry of least absolute value in the remaining
    block, clears its row and column by Euclidean steps, and repairs the
    divisibility chain by folding offending rows into the pivot row.
    """
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        if i == j:
            return
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i == j:
            return
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for j, x in enumerate(rs):
                if x:
                    rd[j] += c * x

    def add_col(dst, src, c):
        for M in (D, V):
            for row in M:
                row[dst] += c * row[src]

    for t in range(min(m, n)):
        best, best_abs = None, 0
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                a = abs(row[j])
                if a and (best is None or a < best_abs):
                    best, best_abs = (i, j), a
                    if a == 1:
                        break
            if best_abs == 1:
                break
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            piv = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
            # leftover remainders are strictly smaller than the pivot
            cands = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            cands += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if cands:
                _, i, j = min(cands)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            if abs(piv) == 1:
                break
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]

    return SmithDecomposition(
        A=A,
        D=IntMatrix.from_rows(D, n),
        U=IntMatrix.from_rows(U, m),
        V=IntMatrix.from_rows(V, n),
    )


@dataclass(frozen=True)
class ClassImage:
    """An element of a presented group in Smith coordinates.

    ``residues[i]`` lies in ``[0, factors[i])``, or is an arbitrary integer
    when ``factors[i] == 0`` (an infinite cyclic summand).
    """

    factors: tuple[int, ...]
    residues: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.residues)

    def nontrivial(self) -> list[tuple[int, int]]:
        """(factor, residue) pairs with unit factors dropped."""
        return [(d, r) for d, r in zip(self.factors, self.residues) if d != 1]

    def __neg__(self) -> "ClassImage":
        return ClassImage(self.factors, _reduce(self.factors, [-r for r in self.residues]))

    def __add__(self, other: "ClassImage") -> "ClassImage":
        if self.factors != other.factors:
            raise InputError("adding elements of different groups")
        return ClassImage(
            self.factors,
            _reduce(self.factors, [a + b for a, b in zip(self.residues, other.residues)]),
        )

    def scale(self, c: int) -> "ClassImage":
        return ClassImage(self.factors, _reduce(self.factors, [c * r for r in self.residues]))

    def to_dict(self) -> dict:
        return {
            "factors": [d for d, _ in self.nontrivial()],
            "residues": [r for _, r in self.nontrivial()],
            "zero": self.is_zero,
        }


def _reduce(factors, values) -> tuple[int, ...]:
    return tuple(v % d if d else v for d, v in zip(factors, values))


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Free abelian group on ``generators`` modulo the rows of ``relations``."""

    generators: tuple[str, ...]
    relations: IntMatrix
    smith: SmithDecomposition = field(repr=False)
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        """Rank of the free part."""
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` if the group is infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        return all(d == 1 for d in self.invariant_factors)

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors if d > 1]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"

    def class_image(self, v: Sequence[int]) -> ClassImage:
        return class_image(self, v)


def cokernel(A, labels: Sequence[str] | None = None) -> AbelianGroupPresentation:
    """Present ``Z^n / rowspace(A)`` where ``n`` is the number of columns."""
    A = as_matrix(A)
    n = A.cols
    if labels is None:
        labels = [f"g{j + 1}" for j in range(n)]
    labels = tuple(labels)
    if len(labels) != n:
        raise InputError(f"{len(labels)} labels for {n} generators")
    snf = smith_normal_form(A)
    diag = list(snf.diagonal) + [0] * (n - min(A.shape))
    return AbelianGroupPresentation(labels, A, snf, tuple(diag))


def class_image(G: AbelianGroupPresentation, v: Sequence[int]) -> ClassImage:
    """Reduce ``sum v[j] * generator[j]`` to Smith coordinates.

    With ``U A V = D`` the substitution ``w = v V`` carries the relation
    lattice onto ``diag(D)``, so each coordinate is reduced modulo its factor.
    """
    if len(v) != len(G.generators):
        raise InputError(
            f"vector of length {len(v)} for a group on {len(G.generators)} generators"
        )
    w = G.smith.V.row_times([int(x) for x in v])
    return ClassImage(G.invariant_factors, _reduce(G.invariant_factors, w))
