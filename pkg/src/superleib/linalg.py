"""Exact dense linear algebra over :class:`~superleib.scalars.Scalar`.

Matrices are lists of rows; vectors are tuples.  Every routine is exact,
so ranks and kernels are true ranks and kernels, not numerical estimates.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .scalars import Scalar

Vector = tuple
Matrix = list


class SingularMatrixError(ValueError):
    pass


def zeros(rows: int, cols: int, conductor: int = 1) -> Matrix:
    z = Scalar.zero(conductor)
    return [[z] * cols for _ in range(rows)]


def identity(size: int, conductor: int = 1) -> Matrix:
    z, o = Scalar.zero(conductor), Scalar.one(conductor)
    return [[o if i == j else z for j in range(size)] for i in range(size)]


def as_matrix(rows, conductor: int = 1) -> Matrix:
    """Coerce nested sequences of ints/Fractions/Scalars into a Scalar matrix."""
    out = []
    for row in rows:
        out.append([v if isinstance(v, Scalar) else Scalar.rational(v, conductor) for v in row])
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            out_row.append(acc if acc is not None else row[0] * 0)
        out.append(out_row)
    return out


def matvec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    return tuple(_dot(row, v) for row in a)


def _dot(row, v):
    acc = row[0] * 0 if row else None
    for x, y in zip(row, v):
        if x and y:
            acc = acc + x * y
    return acc


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r][col]
        if lead != 1:
            inv = lead.inverse()
            work[r] = [x * inv if x else x for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r:
                f = work[i][col]
                if f:
                    work[i] = [x - f * p if p else x for x, p in zip(work[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a, len(a[0]))[0])


def nullspace(a: Matrix, ncols: int, conductor: int = 1) -> list[Vector]:
    """Basis of {v : a v = 0}, one vector per free column."""
    rows, pivots = rref(a, ncols)
    zero, one = Scalar.zero(conductor), Scalar.one(conductor)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def inverse(a: Matrix) -> Matrix:
    size = len(a)
    if size == 0:
        return []
    conductor = a[0][0].conductor
    aug = [list(row) + list(irow) for row, irow in zip(a, identity(size, conductor))]
    rows, pivots = rref(aug, 2 * size)
    if pivots[:size] != list(range(size)) or len(rows) < size:
        raise SingularMatrixError("matrix is singular")
    return [list(row[size:]) for row in rows]


def is_zero_matrix(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


# -- rational fast path -------------------------------------------------------------
# Most tables live over Q; plain Fractions avoid the Scalar wrapper in hot loops.


def to_fractions(a: Matrix) -> list[list[Fraction]] | None:
    """The matrix as Fractions, or None if some entry is irrational."""
    out = []
    for row in a:
        r = []
        for x in row:
            if not x.is_rational():
                return None
            r.append(x.coeffs[0])
        out.append(r)
    return out


def common_denominator(a: list[list[Fraction]]) -> int:
    den = 1
    for row in a:
        for x in row:
            den = lcm(den, x.denominator)
    return den


def integer_multiple(a: list[list[Fraction]]) -> list[list[int]]:
    """A positive integer multiple of a rational matrix (same rank, same Jordan type)."""
    den = common_denominator(a)
    return [[int(x * den) for x in row] for row in a]


def rank_z(a: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    work = [list(r) for r in a if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    r, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        lead = prow[col]
        for i in range(r + 1, len(work)):
            row = work[i]
            f = row[col]
            work[i] = [(lead * x - f * p) // prev for x, p in zip(row, prow)]
        prev = lead
        r += 1
        if r == len(work):
            break
    return r


def matmul_z(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def echelon_q(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Row echelon basis of the row space of a Fraction matrix."""
    work = [list(r) for r in a if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        lead = prow[col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                f = f / lead
                work[i] = [x - f * p if p else x for x, p in zip(work[i], prow)]
        r += 1
        if r == len(work):
            break
    return work[:r]


def inverse_q(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a square Fraction matrix."""
    size = len(a)
    work = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(a)]
    for col in range(size):
        piv = next((i for i in range(col, size) if work[i][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        lead = work[col][col]
        prow = work[col] = [x / lead for x in work[col]]
        for i in range(size):
            f = work[i][col]
            if i != col and f:
                work[i] = [x - f * p if p else x for x, p in zip(work[i], prow)]
    return [row[size:] for row in work]


def echelon_z(a: list[list[int]]) -> list[list[int]]:
    """Row echelon basis of the rational row space of an integer matrix (rows kept primitive)."""
    work = [_primitive(r) for r in a if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        lead = prow[col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                work[i] = _primitive([lead * x - f * p for x, p in zip(work[i], prow)])
        work = work[: r + 1] + [w for w in work[r + 1 :] if any(w)]
        r += 1
        if r == len(work):
            break
    return work[:r]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row
