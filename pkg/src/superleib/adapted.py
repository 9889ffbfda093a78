"""Adapted bases: an even generator x1 that shifts the odd chain, [y_j, x1] = y_{j+1}."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .core import Subspace, SuperAlgebra, change_basis
from .invariants import DEFAULT_SAMPLES, DEFAULT_SEED, CharSequence, char_sequence, jordan_profile
from .scalars import Scalar

MAX_REPAIR_SCALE = 1000


class AdaptationError(ValueError):
    pass


@dataclass(frozen=True)
class AdaptedBasis:
    algebra: SuperAlgebra
    P_even: list  # columns: old coordinates of the new x_i
    P_odd: list  # columns: old coordinates of the new y_j
    witness: tuple  # the even element renamed x1
    repaired: bool  # True when x1 = A*w + x_{i0} replaced a witness w inside L^2
    scale: int | None = None  # the A used by the repair

    def to_json(self) -> dict:
        return {
            "witness": [str(c) for c in self.witness],
            "repaired": self.repaired,
            "scale": self.scale,
            "P_even": [[str(c) for c in row] for row in self.P_even],
            "P_odd": [[str(c) for c in row] for row in self.P_odd],
        }


def square(A: SuperAlgebra) -> Subspace:
    """L^2 = [L, L], spanned by the nonzero products of basis vectors."""
    z = Scalar.zero(A.conductor)
    rows = [tuple(row.get(k, z) for k in range(A.dim)) for _, _, row in A.entries()]
    return Subspace(A.n, A.m, rows, A.conductor)


def _odd_block(A: SuperAlgebra, x) -> linalg.Matrix:
    R = A.right_multiplication(x)
    return [row[A.n :] for row in R[A.n :]]


def _chain(A: SuperAlgebra, x) -> list[tuple] | None:
    """y, R_x y, ..., R_x^(m-1) y for the first odd basis vector y that gives a full chain."""
    m = A.m
    R = _odd_block(A, x)
    for start in range(m):
        v = tuple(Scalar.one(A.conductor) if i == start else Scalar.zero(A.conductor) for i in range(m))
        chain = [v]
        for _ in range(m - 1):
            chain.append(linalg.matvec(R, chain[-1]))
        if any(chain[-1]):
            return chain
    return None


def adapted_basis(
    A: SuperAlgebra,
    *,
    generator_repair: bool = True,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    charseq: CharSequence | None = None,
) -> AdaptedBasis:
    """Rewrite A in a basis with [y_j, x1] = y_{j+1} for 1 <= j <= m-1.

    x1 is the witness of the odd part of the characteristic sequence.  With
    ``generator_repair`` a witness lying in L^2 is replaced by
    A*w + x_{i0} for the smallest positive integer A that keeps a single
    Jordan block on L_1, where x_{i0} is the first even basis vector outside
    L^2; the new x1 is then a generator.  When every even element lies in
    L^2 (single-generated algebras) the witness is kept.  ``charseq`` may
    pass an already computed characteristic sequence of A.
    """
    if A.m == 0 or A.n == 0:
        raise AdaptationError("an adapted basis needs nonzero even and odd parts")
    cs = charseq or char_sequence(A, "combined", samples, seed)
    if cs.c1 != (A.m,):
        raise AdaptationError(f"maximal C_1 is {cs.c1}, not a single block of size {A.m}")
    w = cs.witness1
    x1 = w
    repaired = False
    scale = None
    L2 = square(A)
    i0 = None
    if generator_repair and L2.contains(w):
        # single-generated algebras have no even generator at all; nothing to repair
        i0 = next((i for i in range(A.n) if not L2.contains(A.basis_vector(i))), None)
    if i0 is not None:
        e = A.basis_vector(i0)
        for a in range(1, MAX_REPAIR_SCALE + 1):
            cand = tuple(c * a + d for c, d in zip(w, e))
            if jordan_profile(_odd_block(A, cand)) == (A.m,):
                x1, repaired, scale = cand, True, a
                break
        else:
            raise AdaptationError("generator repair found no admissible scale")
    chain = _chain(A, x1)
    if chain is None:  # cannot happen for a single block, kept as a guard
        raise AdaptationError("no odd vector generates a full chain")
    even_cols = [tuple(x1[: A.n])]
    span = Subspace(A.n, 0, even_cols, A.conductor)
    for i in range(A.n):
        v = tuple(Scalar.one(A.conductor) if k == i else Scalar.zero(A.conductor) for k in range(A.n))
        if not span.contains(v):
            even_cols.append(v)
            span = Subspace(A.n, 0, even_cols, A.conductor)
    P_even = linalg.transpose([list(c) for c in even_cols])
    P_odd = linalg.transpose([list(c) for c in chain])
    B = change_basis(A, P_even, P_odd)
    return AdaptedBasis(B, P_even, P_odd, w, repaired, scale)


def chain_defects(A: SuperAlgebra) -> list[str]:
    """Products [y_j, x1] that differ from y_{j+1}; empty iff the basis is adapted."""
    out = []
    for j in range(1, A.m):
        got = A.product_by_name(f"y{j}", "x1")
        if got != {f"y{j + 1}": Scalar.one(A.conductor)}:
            shown = {k: str(v) for k, v in got.items()}
            out.append(f"[y{j}, x1] = {shown or 0}, expected y{j + 1}")
    return out


__all__ = ["AdaptationError", "AdaptedBasis", "adapted_basis", "chain_defects", "square"]
