"""Descending central series, Jordan profiles, characteristic sequence, gr(A)."""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .core import (
    Subspace,
    SuperAlgebra,
    even_subspace,
    is_lie,
    odd_subspace,
    product_span,
    right_annihilator,
)
from .scalars import Scalar

DEFAULT_SAMPLES = 16
DEFAULT_SEED = 0
STRATEGIES = ("basis-candidates", "seeded-random", "combined")


class NotNilpotentError(ValueError):
    pass


class NotNilpotentMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesReport:
    terms: tuple[Subspace, ...]
    nilindex: int | None  # None: the series stabilised at a nonzero term

    @property
    def nilpotent(self) -> bool:
        return self.nilindex is not None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    def term(self, k: int) -> Subspace:
        """L^k (1-based); terms past the end are zero for nilpotent algebras."""
        if k - 1 < len(self.terms):
            return self.terms[k - 1]
        if not self.nilpotent:
            return self.terms[-1]
        return Subspace.zero(*self.terms[0].ambient, self.terms[0].conductor)


def central_series(A: SuperAlgebra) -> SeriesReport:
    """L^1 = L, L^{k+1} = [L^k, L] until zero or stabilisation."""
    whole = Subspace.whole(A.n, A.m, A.conductor)
    terms = [whole]
    current = whole
    while current.dim:
        nxt = product_span(A, current, whole)
        if nxt.dim == current.dim:
            return SeriesReport(tuple(terms), None)
        terms.append(nxt)
        current = nxt
    # terms[-1] is the first zero term L^s
    return SeriesReport(tuple(terms), len(terms))


def nilindex(A: SuperAlgebra) -> int | None:
    dims = series_dims(A)
    return len(dims) if dims[-1] == 0 else None


def series_dims(A: SuperAlgebra) -> list[int]:
    """dim L^1, dim L^2, ... up to the first zero (or stable) term."""
    q = _integer_table(A)
    if q is None:
        return central_series(A).dims
    d = A.dim
    by_right: dict[int, list[tuple[int, dict[int, int]]]] = {}
    for (i, j), row in q.items():
        by_right.setdefault(j, []).append((i, row))
    basis = [[int(i == k) for k in range(d)] for i in range(d)]
    dims = [d]
    while basis:
        images = []
        for v in basis:
            for j in range(d):
                w = [0] * d
                hit = False
                for i, row in by_right.get(j, ()):
                    if v[i]:
                        hit = True
                        for k, c in row.items():
                            w[k] += v[i] * c
                if hit:
                    images.append(w)
        nxt = linalg.echelon_z(images)
        if len(nxt) == len(basis):
            return dims
        dims.append(len(nxt))
        basis = nxt
    return dims


def _integer_table(A: SuperAlgebra):
    """Structure constants times a common denominator, or None for irrational tables.

    Scaling every product by D > 0 gives an isomorphic algebra (v -> D v),
    so every dimension computed from it is unchanged.
    """
    frac = {}
    den = 1
    for i, j, row in A.entries():
        r = {}
        for k, c in row.items():
            if not c.is_rational():
                return None
            r[k] = c.coeffs[0]
            den = lcm(den, r[k].denominator)
        frac[(i, j)] = r
    return {key: {k: int(c * den) for k, c in row.items()} for key, row in frac.items()}


def minimal_generator_count(A: SuperAlgebra) -> int:
    """dim L - dim L^2, which counts generators of a nilpotent algebra."""
    dims = series_dims(A)
    if dims[-1] != 0:
        raise NotNilpotentError("generator count is only defined for nilpotent algebras")
    return A.dim - (dims[1] if len(dims) > 1 else 0)


# -- Jordan profiles -------------------------------------------------------------


def jordan_profile(N: linalg.Matrix) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, in descending order.

    The number of blocks of size >= k is rank(N^(k-1)) - rank(N^k).
    """
    size = len(N)
    if size == 0:
        return ()
    if any(len(r) != size for r in N):
        raise ValueError("matrix must be square")
    q = linalg.to_fractions(N)
    if q is not None:
        return _profile_from_ranks(linalg.integer_multiple(q), linalg.rank_z, linalg.matmul_z)
    return _profile_from_ranks(N, linalg.rank, linalg.matmul)


def _profile_from_ranks(N, rank, matmul) -> tuple[int, ...]:
    size = len(N)
    ranks = [size]
    power = N
    while True:
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        if len(ranks) > size + 1 or r == ranks[-2]:
            raise NotNilpotentMatrixError("matrix is not nilpotent")
        power = matmul(power, N)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    blocks = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        blocks.extend([k] * exact)
    return tuple(blocks)


def _lex_key(profile: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(profile) + (0,) * (length - len(profile))


def profile_greater(a: Sequence[int], b: Sequence[int]) -> bool:
    size = max(len(a), len(b))
    return _lex_key(a, size) > _lex_key(b, size)


# -- characteristic sequence ----------------------------------------------------------


@dataclass(frozen=True)
class CharSequence:
    c0: tuple[int, ...]
    c1: tuple[int, ...]
    witness0: tuple
    witness1: tuple
    strategy: str = "combined"
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    candidates_checked: int = 0

    @property
    def head(self) -> int:
        return self.c0[0] if self.c0 else 0

    def display(self) -> str:
        return "(" + ",".join(map(str, self.c0)) + " | " + ",".join(map(str, self.c1)) + ")"

    def profiles(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.c0, self.c1)


def even_square(A: SuperAlgebra) -> Subspace:
    """L_0^2 = [L_0, L_0]."""
    L0 = even_subspace(A)
    return product_span(A, L0, L0)


def _rational_square_test(A: SuperAlgebra):
    """x -> (x in L_0^2) by integer ranks, or None for irrational tables."""
    T = _integer_table(A)
    if T is None:
        return None
    n = A.n
    rows = [[row.get(k, 0) for k in range(n)] for (i, j), row in T.items() if i < n and j < n]
    basis = linalg.echelon_z(rows)
    r = len(basis)

    def contains(x):
        # candidates are rational even vectors
        v = linalg.integer_multiple(linalg.to_fractions([list(x[:n])]))[0]
        return linalg.rank_z(basis + [v]) == r

    return contains


def restricted_right_multiplication(A: SuperAlgebra, x: Sequence[Scalar]) -> tuple[linalg.Matrix, linalg.Matrix]:
    """R_x on L_0 and on L_1 for an even element x."""
    R = A.right_multiplication(x)
    n = A.n
    on_even = [row[:n] for row in R[:n]]
    on_odd = [row[n:] for row in R[n:]]
    return on_even, on_odd


def _random_even_element(A: SuperAlgebra, rng: random.Random) -> tuple:
    coeffs = []
    for _ in range(A.n):
        c = 0
        while c == 0:
            c = rng.randint(-97, 97)
        coeffs.append(Scalar.rational(c, A.conductor))
    return tuple(coeffs) + (Scalar.zero(A.conductor),) * A.m


def char_sequence(
    A: SuperAlgebra,
    strategy: str = "combined",
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> CharSequence:
    """Lexicographic maxima of the Jordan types of R_x on L_0 and L_1 over x in L_0 minus L_0^2.

    The infinite maximisation is realised on candidates: even basis vectors
    outside L_0^2 and/or ``samples`` seeded random integer combinations.
    The two maxima are taken independently and may have different witnesses.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    in_square = _rational_square_test(A) or even_square(A).contains
    candidates = []
    if strategy in ("basis-candidates", "combined"):
        candidates.extend(A.basis_vector(i) for i in range(A.n))
    if strategy in ("seeded-random", "combined"):
        rng = random.Random(seed)
        candidates.extend(_random_even_element(A, rng) for _ in range(samples))
    best0 = best1 = None
    w0 = w1 = None
    checked = 0
    profiles = _rational_profiler(A)
    for x in candidates:
        if in_square(x):
            continue
        checked += 1
        if profiles is not None:
            p0, p1 = profiles(x)
        else:
            on_even, on_odd = restricted_right_multiplication(A, x)
            p0, p1 = jordan_profile(on_even), jordan_profile(on_odd)
        if best0 is None or profile_greater(p0, best0):
            best0, w0 = p0, x
        if best1 is None or profile_greater(p1, best1):
            best1, w1 = p1, x
    if best0 is None:
        raise ValueError("no candidate even element lies outside L_0^2")
    return CharSequence(best0, best1, w0, w1, strategy, samples, seed, checked)


def _rational_profiler(A: SuperAlgebra):
    """For rational tables: x -> (C_0(x), C_1(x)) via integer matrices.

    R_x = sum x_i R_{e_i}, read off the integer-scaled table (scaling R_x
    keeps its Jordan type); each candidate is scaled by its common
    denominator.
    """
    n, m = A.n, A.m
    T = _integer_table(A)
    if T is None:
        return None
    size = n + m
    ints = [[[0] * size for _ in range(size)] for _ in range(n)]
    for (j, i), row in T.items():
        if i < n:
            for k, c in row.items():
                ints[i][k][j] = c
    def profiles(x):
        xs = linalg.to_fractions([list(x[:n])])
        if xs is None:
            return None
        xs = xs[0]
        d = 1
        for c in xs:
            d = lcm(d, c.denominator)
        coeffs = [int(c * d) for c in xs]
        size = n + m
        total = [[0] * size for _ in range(size)]
        for c, M in zip(coeffs, ints):
            if c:
                for r in range(size):
                    row, src = total[r], M[r]
                    for t in range(size):
                        if src[t]:
                            row[t] += c * src[t]
        on_even = [row[:n] for row in total[:n]]
        on_odd = [row[n:] for row in total[n:]]
        return (
            _profile_from_ranks(on_even, linalg.rank_z, linalg.matmul_z) if n else (),
            _profile_from_ranks(on_odd, linalg.rank_z, linalg.matmul_z) if m else (),
        )

    return profiles


# -- natural gradation ----------------------------------------------------------------


@dataclass(frozen=True)
class GradedAlgebra:
    layers: tuple[int, ...]
    algebra: SuperAlgebra
    layer_of: tuple[int, ...]  # basis index -> layer number (1-based)
    basis: tuple[tuple, ...] = field(repr=False)  # representatives in the original coordinates

    def layer_indices(self, layer: int) -> list[int]:
        return [i for i, l in enumerate(self.layer_of) if l == layer]

    def component(self, layer: int) -> Subspace:
        A = self.algebra
        return Subspace.of(A, [A.basis_vector(i) for i in self.layer_indices(layer)])


def natural_gradation(A: SuperAlgebra) -> GradedAlgebra:
    """gr(A) = sum of A^i / A^(i+1) with the induced bracket.

    A basis adapted to the filtration is chosen parity by parity, so the
    result is again a superalgebra (even elements first, each parity ordered
    layer by layer).
    """
    series = central_series(A)
    if not series.nilpotent:
        raise NotNilpotentError("natural gradation needs a nilpotent algebra")
    s = series.nilindex
    layer_vectors: dict[int, list[list[tuple]]] = {}
    for i in range(1, s):
        upper, lower = series.term(i), series.term(i + 1)
        parts = []
        for project in (Subspace.even_part, Subspace.odd_part):
            parts.append(project(upper).complement_basis(project(lower)))
        layer_vectors[i] = parts
    basis: list[tuple] = []
    layer_of: list[int] = []
    for parity in (0, 1):
        for i in range(1, s):
            for v in layer_vectors[i][parity]:
                basis.append(v)
                layer_of.append(i)
    n_new = sum(len(layer_vectors[i][0]) for i in range(1, s))
    if n_new != A.n or len(basis) != A.dim:
        raise ValueError("filtration terms are not graded subspaces")
    P = linalg.transpose([list(v) for v in basis]) if basis else []
    P_inv = linalg.inverse(P) if basis else []
    d = A.dim
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    sparse = [{k: c for k, c in enumerate(v) if c} for v in basis]
    for a in range(d):
        for b in range(d):
            w = A.bracket_sparse(sparse[a], sparse[b])
            if not w:
                continue
            z = Scalar.zero(A.conductor)
            coords = linalg.matvec(P_inv, [w.get(k, z) for k in range(d)])
            target = layer_of[a] + layer_of[b]
            out = {}
            for t, c in enumerate(coords):
                if not c:
                    continue
                if layer_of[t] < target:
                    raise ValueError(
                        f"[gr_{layer_of[a]}, gr_{layer_of[b]}] is not contained in A^{target}"
                    )
                if layer_of[t] == target:
                    out[t] = c
            if out:
                table[(a, b)] = out
    graded = SuperAlgebra(A.n, A.m, table, A.conductor)
    layers = tuple(layer_of.count(i) for i in range(1, s))
    return GradedAlgebra(layers, graded, tuple(layer_of), tuple(basis))


# -- fingerprint ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    series_dims: tuple[int, ...]
    nilindex: int
    c0: tuple[int, ...]
    c1: tuple[int, ...]
    annihilator_dim: int
    is_lie: bool

    def to_json(self) -> dict:
        return {
            "series_dims": list(self.series_dims),
            "nilindex": self.nilindex,
            "char_sequence": {"c0": list(self.c0), "c1": list(self.c1)},
            "right_annihilator_dim": self.annihilator_dim,
            "is_lie": self.is_lie,
        }


def invariant_fingerprint(
    A: SuperAlgebra, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> Fingerprint:
    """Isomorphism invariants; equal fingerprints are necessary, not sufficient."""
    series = central_series(A)
    if not series.nilpotent:
        raise NotNilpotentError("fingerprint needs a nilpotent algebra")
    if A.n:
        cs = char_sequence(A, "combined", samples, seed)
        c0, c1 = cs.c0, cs.c1
    else:
        c0, c1 = (), ()
    return Fingerprint(
        tuple(series.dims),
        series.nilindex,
        c0,
        c1,
        right_annihilator(A).dim,
        is_lie(A),
    )


def series_report_json(A: SuperAlgebra, series: SeriesReport) -> dict:
    return {
        "n": A.n,
        "m": A.m,
        "dims": series.dims,
        "even_dims": [t.even_part().dim for t in series.terms],
        "odd_dims": [t.odd_part().dim for t in series.terms],
        "nilindex": series.nilindex,
        "nilpotent": series.nilpotent,
    }


__all__ = [
    "CharSequence",
    "Fingerprint",
    "GradedAlgebra",
    "NotNilpotentError",
    "NotNilpotentMatrixError",
    "SeriesReport",
    "central_series",
    "char_sequence",
    "even_square",
    "invariant_fingerprint",
    "jordan_profile",
    "minimal_generator_count",
    "natural_gradation",
    "nilindex",
    "profile_greater",
    "restricted_right_multiplication",
    "series_dims",
    "series_report_json",
]
