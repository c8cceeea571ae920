"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction`` and matrices are tuples of row tuples.
Everything here is pure: inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple
Matrix = tuple


def Q(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vector(xs: Iterable) -> Vector:
    return tuple(Q(x) for x in xs)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(M: Matrix, cols: int | None = None) -> tuple[int, int]:
    if M:
        return len(M), len(M[0])
    return 0, (cols or 0)


def mat_vec(M: Matrix, v: Sequence) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in M)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return ()
    cols = list(zip(*B)) if B else []
    return tuple(
        tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols)
        for row in A
    )


def transpose(M: Matrix, cols: int = 0) -> Matrix:
    if not M:
        return tuple(() for _ in range(cols))
    return tuple(zip(*M))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def rref(M: Sequence[Sequence], cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Zero rows are dropped, so ``len(rows) == len(pivots) == rank``.
    """
    rows = [list(map(Q, r)) for r in M]
    ncols = len(rows[0]) if rows else (cols or 0)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M: Sequence[Sequence]) -> int:
    return len(rref(M)[1])


def det(M: Sequence[Sequence]) -> Fraction:
    n = len(M)
    rows = [list(map(Q, r)) for r in M]
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            result = -result
        piv = rows[c][c]
        result *= piv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [list(map(Q, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its reduced echelon basis.

    The echelon form is canonical, so equal subspaces compare equal.
    """

    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [v for v in vectors]
        if not vecs:
            return cls(ambient_dim)
        rows, piv = rref(vecs, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows), tuple(piv))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def __contains__(self, v: Sequence) -> bool:
        return is_zero(reduce_mod(self, v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)


def kernel_basis(M: Sequence[Sequence], cols: int | None = None) -> Subspace:
    """Null space of ``M``; ``cols`` is needed only when ``M`` has no rows."""
    ncols = len(M[0]) if M else (cols or 0)
    rows, piv = rref(M, ncols)
    pivset = set(piv)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, piv):
            v[p] = -row[f]
        vecs.append(v)
    return Subspace.span(ncols, vecs)


def image_basis(M: Sequence[Sequence], cols: int | None = None) -> Subspace:
    """Column space of ``M`` as a subspace of Q^rows."""
    nrows = len(M)
    return Subspace.span(nrows, transpose(M) if M else [])


class NoSolution:
    """Returned by ``solve_any`` when the system is inconsistent."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "NoSolution"

    def __bool__(self) -> bool:
        return False


NO_SOLUTION = NoSolution()


def solve_any(M: Sequence[Sequence], b: Sequence, cols: int | None = None):
    """Some ``x`` with ``M x = b``, or ``NO_SOLUTION``.

    Free variables are set to zero; pivots are taken left to right.
    """
    ncols = len(M[0]) if M else (cols or 0)
    if len(b) != len(M):
        raise ValueError(f"rhs has length {len(b)}, expected {len(M)}")
    aug = [list(map(Q, row)) + [Q(bi)] for row, bi in zip(M, b)]
    rows, piv = rref(aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return NO_SOLUTION
    x = [Fraction(0)] * ncols
    for row, p in zip(rows, piv):
        x[p] = row[ncols]
    return tuple(x)


def reduce_mod(S: Subspace, v: Sequence) -> Vector:
    """Canonical representative of ``v + S``: pivot coordinates of S are cleared."""
    if len(v) != S.ambient_dim:
        raise ValueError(f"vector has length {len(v)}, expected {S.ambient_dim}")
    out = list(map(Q, v))
    for row, p in zip(S.basis, S.pivots):
        f = out[p]
        if f:
            out = [a - f * b if b else a for a, b in zip(out, row)]
    return tuple(out)
