"""Z2-graded algebras given by structure constants.

Basis elements are addressed by a global 0-based index: the ``n`` even
elements ``x1..xn`` come first, followed by the ``m`` odd elements
``y1..ym``.  Vectors are dense tuples of :class:`Scalar` in that order.

The multiplication table is sparse: ``table[(i, j)]`` maps an output index
to a nonzero coefficient, and a missing pair means the product is zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping, Sequence

from . import linalg
from .scalars import Scalar, embed

EVEN, ODD = 0, 1

_NAME_RE = re.compile(r"^([xy])([1-9][0-9]*)$")


class GradingError(ValueError):
    """A table entry sends a product into the wrong parity."""


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class BasisIndex:
    parity: int
    index: int  # 1-based within its parity

    @property
    def name(self) -> str:
        return ("x" if self.parity == EVEN else "y") + str(self.index)


def parse_basis_name(name: str, n: int, m: int) -> int:
    """Global index of ``"x3"`` or ``"y1"``; raises ValueError when out of range."""
    match = _NAME_RE.match(name.strip()) if isinstance(name, str) else None
    if not match:
        raise ValueError(f"bad basis name {name!r}")
    k = int(match.group(2))
    if match.group(1) == "x":
        if k > n:
            raise ValueError(f"basis element {name} outside even dimension {n}")
        return k - 1
    if k > m:
        raise ValueError(f"basis element {name} outside odd dimension {m}")
    return n + k - 1


def _as_scalar(value, conductor: int) -> Scalar:
    if isinstance(value, Scalar):
        if value.conductor != conductor:
            return embed(value, conductor)
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.rational(value, conductor)
    raise TypeError(f"cannot use {value!r} as a structure constant")


class SuperAlgebra:
    """An (n|m)-dimensional superalgebra over Q(zeta_conductor).

    >>> A = SuperAlgebra.from_names(1, 2, {("y1", "x1"): {"y2": 1}})
    >>> A.product_by_name("y1", "x1")
    {'y2': Scalar('1')}
    """

    __slots__ = ("n", "m", "conductor", "_table", "_parities", "metadata")

    def __init__(
        self,
        n: int,
        m: int,
        table: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
        conductor: int = 1,
        metadata: Mapping | None = None,
    ):
        if n < 0 or m < 0:
            raise DimensionError("dimensions must be non-negative")
        self.n, self.m, self.conductor = n, m, conductor
        self._parities = (EVEN,) * n + (ODD,) * m
        self.metadata = dict(metadata or {})
        d = n + m
        clean: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), row in (table or {}).items():
            if not (0 <= i < d and 0 <= j < d):
                raise DimensionError(f"product index ({i}, {j}) outside dimension {d}")
            out = {}
            for k, c in row.items():
                if not 0 <= k < d:
                    raise DimensionError(f"output index {k} outside dimension {d}")
                c = _as_scalar(c, conductor)
                if not c:
                    continue
                if self._parities[k] != self._parities[i] ^ self._parities[j]:
                    raise GradingError(
                        f"[{self.name(i)}, {self.name(j)}] has a component on "
                        f"{self.name(k)} of the wrong parity"
                    )
                out[k] = c
            if out:
                clean[(i, j)] = out
        self._table = clean

    @classmethod
    def from_names(cls, n: int, m: int, products: Mapping, conductor: int = 1, metadata=None):
        """Build from ``{("x1", "y1"): {"y2": Fraction(1, 2)}}``-style tables."""
        table: dict[tuple[int, int], dict[int, object]] = {}
        for (left, right), row in products.items():
            key = (parse_basis_name(left, n, m), parse_basis_name(right, n, m))
            out = table.setdefault(key, {})
            for target, c in row.items():
                k = parse_basis_name(target, n, m)
                out[k] = out.get(k, 0) + _as_scalar(c, conductor)
        return cls(n, m, table, conductor, metadata)

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.n + self.m

    def parity(self, i: int) -> int:
        return self._parities[i]

    @property
    def parities(self) -> tuple[int, ...]:
        return self._parities

    def name(self, i: int) -> str:
        return f"x{i + 1}" if i < self.n else f"y{i - self.n + 1}"

    def index(self, name: str) -> int:
        return parse_basis_name(name, self.n, self.m)

    @property
    def basis_names(self) -> list[str]:
        return [self.name(i) for i in range(self.dim)]

    @property
    def table(self) -> dict[tuple[int, int], dict[int, Scalar]]:
        return {key: dict(row) for key, row in self._table.items()}

    def product(self, i: int, j: int) -> dict[int, Scalar]:
        return self._table.get((i, j), {})

    def product_by_name(self, left: str, right: str) -> dict[str, Scalar]:
        return {self.name(k): c for k, c in self.product(self.index(left), self.index(right)).items()}

    def entries(self) -> Iterator[tuple[int, int, dict[int, Scalar]]]:
        for (i, j) in sorted(self._table):
            yield i, j, self._table[(i, j)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.n, self.m, self.conductor, self._table) == (
            other.n,
            other.m,
            other.conductor,
            other._table,
        )

    def __hash__(self):
        return hash((self.n, self.m, self.conductor, len(self._table)))

    def __repr__(self) -> str:
        return f"SuperAlgebra(n={self.n}, m={self.m}, conductor={self.conductor}, products={len(self._table)})"

    # -- vectors --------------------------------------------------------------

    def zero_vector(self) -> tuple:
        return (Scalar.zero(self.conductor),) * self.dim

    def basis_vector(self, i: int) -> tuple:
        v = list(self.zero_vector())
        v[i] = Scalar.one(self.conductor)
        return tuple(v)

    def vector(self, coords: Mapping[str, object]) -> tuple:
        v = list(self.zero_vector())
        for name, c in coords.items():
            v[self.index(name)] = _as_scalar(c, self.conductor)
        return tuple(v)

    def even_part(self, v: Sequence[Scalar]) -> tuple:
        return tuple(v[: self.n])

    def odd_part(self, v: Sequence[Scalar]) -> tuple:
        return tuple(v[self.n :])

    def _check_vector(self, v):
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} for algebra of dimension {self.dim}")
        for c in v:
            if not isinstance(c, Scalar) or c.conductor != self.conductor:
                raise DimensionError("vector entries must be scalars of the algebra's conductor")

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple:
        """Bilinear extension of the multiplication table."""
        self._check_vector(u)
        self._check_vector(v)
        su = {i: c for i, c in enumerate(u) if c}
        sv = {j: c for j, c in enumerate(v) if c}
        out = list(self.zero_vector())
        for k, c in self.bracket_sparse(su, sv).items():
            out[k] = c
        return tuple(out)

    def bracket_sparse(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        table = self._table
        for i, a in u.items():
            for j, b in v.items():
                row = table.get((i, j))
                if row:
                    ab = a * b
                    for k, c in row.items():
                        out[k] = out[k] + ab * c if k in out else ab * c
        return {k: c for k, c in out.items() if c}

    def right_multiplication(self, x: Sequence[Scalar]) -> linalg.Matrix:
        """Matrix of R_x : y -> [y, x] on the whole space (columns = images)."""
        sx = {i: c for i, c in enumerate(x) if c}
        cols = []
        for j in range(self.dim):
            img = self.bracket_sparse({j: Scalar.one(self.conductor)}, sx)
            cols.append([img.get(k, Scalar.zero(self.conductor)) for k in range(self.dim)])
        return linalg.transpose(cols) if cols else []


# -- superidentity ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """Nonzero residual of the Leibniz superidentity at a basis triple."""

    triple: tuple[int, int, int]
    names: tuple[str, str, str]
    residual: dict[str, Scalar]

    def to_json(self) -> dict:
        return {
            "triple": list(self.names),
            "residual": [{"basis": b, "coeff": str(c)} for b, c in self.residual.items()],
        }


def superidentity_residual(A: SuperAlgebra, i: int, j: int, k: int) -> dict[int, Scalar]:
    """[x,[y,z]] - [[x,y],z] + (-1)^(|y||z|) [[x,z],y] for x=e_i, y=e_j, z=e_k."""
    table = A._table
    acc: dict[int, Scalar] = {}

    def add(vec, scale):
        for idx, c in vec.items():
            c = c if scale == 1 else -c
            acc[idx] = acc[idx] + c if idx in acc else c

    # [x, [y, z]]
    for l, c in table.get((j, k), {}).items():
        row = table.get((i, l))
        if row:
            add({t: c * v for t, v in row.items()}, 1)
    # [[x, y], z]
    for l, c in table.get((i, j), {}).items():
        row = table.get((l, k))
        if row:
            add({t: c * v for t, v in row.items()}, -1)
    # (-1)^(|y||z|) [[x, z], y]
    sign = -1 if (A.parity(j) and A.parity(k)) else 1
    for l, c in table.get((i, k), {}).items():
        row = table.get((l, j))
        if row:
            add({t: c * v for t, v in row.items()}, sign)
    return {t: c for t, c in acc.items() if c}


def check_superidentity(A: SuperAlgebra) -> list[Violation]:
    """Exhaustive check over all ordered basis triples; empty iff A is Leibniz."""
    violations = []
    d = A.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                res = superidentity_residual(A, i, j, k)
                if res:
                    violations.append(
                        Violation(
                            (i, j, k),
                            (A.name(i), A.name(j), A.name(k)),
                            {A.name(t): res[t] for t in sorted(res)},
                        )
                    )
    return violations


def is_leibniz(A: SuperAlgebra) -> bool:
    d = A.dim
    return not any(
        superidentity_residual(A, i, j, k) for i in range(d) for j in range(d) for k in range(d)
    )


def is_lie(A: SuperAlgebra) -> bool:
    """Graded antisymmetry [x,y] = -(-1)^(|x||y|) [y,x] on all basis pairs."""
    d = A.dim
    for i in range(d):
        for j in range(i, d):
            sign = -1 if (A.parity(i) and A.parity(j)) else 1
            a, b = A.product(i, j), A.product(j, i)
            for k in set(a) | set(b):
                lhs = a.get(k, 0)
                rhs = b.get(k, 0)
                total = lhs + rhs if sign == 1 else lhs - rhs
                if total:
                    return False
    return True


# -- subspaces --------------------------------------------------------------------


class Subspace:
    """A linear subspace of the (n|m) coordinate space, in reduced echelon form."""

    __slots__ = ("n", "m", "conductor", "rows", "pivots")

    def __init__(self, n: int, m: int, vectors: Iterable[Sequence[Scalar]] = (), conductor: int = 1):
        self.n, self.m, self.conductor = n, m, conductor
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != n + m:
                raise DimensionError("vector length does not match ambient dimension")
        rows, pivots = linalg.rref(vecs, n + m)
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def whole(cls, n: int, m: int, conductor: int = 1) -> "Subspace":
        return cls(n, m, [tuple(r) for r in linalg.identity(n + m, conductor)], conductor)

    @classmethod
    def zero(cls, n: int, m: int, conductor: int = 1) -> "Subspace":
        return cls(n, m, (), conductor)

    @classmethod
    def of(cls, A: SuperAlgebra, vectors: Iterable[Sequence[Scalar]] = ()) -> "Subspace":
        return cls(A.n, A.m, vectors, A.conductor)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.n, self.m)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def _same_ambient(self, other: "Subspace"):
        if (self.n, self.m, self.conductor) != (other.n, other.m, other.conductor):
            raise DimensionError("subspaces live in different ambient spaces")

    def contains(self, v: Sequence[Scalar]) -> bool:
        if len(v) != self.n + self.m:
            raise DimensionError("vector length does not match ambient dimension")
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = w[p]
            if f:
                w = [a - f * b if b else a for a, b in zip(w, row)]
        return not any(w)

    __contains__ = contains

    def reduce(self, v: Sequence[Scalar]) -> tuple:
        """Canonical representative of ``v`` modulo this subspace."""
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = w[p]
            if f:
                w = [a - f * b if b else a for a, b in zip(w, row)]
        return tuple(w)

    def sum(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace(self.n, self.m, self.rows + other.rows, self.conductor)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.n, self.m, self.conductor)
        # a.U = b.V  <=>  (a, b) in kernel of [U^T | -V^T]
        cols = list(self.rows) + [tuple(-x for x in r) for r in other.rows]
        mat = linalg.transpose([list(c) for c in cols])
        kernel = linalg.nullspace(mat, len(cols), self.conductor)
        vecs = []
        for coeffs in kernel:
            v = [Scalar.zero(self.conductor)] * (self.n + self.m)
            for a, row in zip(coeffs[: self.dim], self.rows):
                if a:
                    v = [x + a * y for x, y in zip(v, row)]
            vecs.append(v)
        return Subspace(self.n, self.m, vecs, self.conductor)

    def issubset(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(other.contains(r) for r in self.rows)

    __le__ = issubset

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.n, self.m, self.conductor, self.rows) == (other.n, other.m, other.conductor, other.rows)

    def __hash__(self):
        return hash((self.n, self.m, self.rows))

    def even_part(self) -> "Subspace":
        """Projection to even coordinates (equals the even intersection for graded subspaces)."""
        z = Scalar.zero(self.conductor)
        return Subspace(self.n, self.m, [tuple(r[: self.n]) + (z,) * self.m for r in self.rows], self.conductor)

    def odd_part(self) -> "Subspace":
        z = Scalar.zero(self.conductor)
        return Subspace(self.n, self.m, [(z,) * self.n + tuple(r[self.n :]) for r in self.rows], self.conductor)

    def is_graded(self) -> bool:
        return self.even_part().sum(self.odd_part()) == self

    def complement_basis(self, sub: "Subspace") -> list[tuple]:
        """Vectors of this subspace (taken from its echelon rows) completing ``sub`` to a basis."""
        self._same_ambient(sub)
        current = sub
        chosen = []
        for r in self.rows:
            if not current.contains(r):
                chosen.append(r)
                current = current.sum(Subspace(self.n, self.m, [r], self.conductor))
        return chosen

    def __repr__(self) -> str:
        return f"Subspace(ambient=({self.n}|{self.m}), dim={self.dim})"


def product_span(A: SuperAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """span{[u, v] : u, v basis vectors of U, V} = [U, V] by bilinearity."""
    if U.ambient != (A.n, A.m) or V.ambient != (A.n, A.m):
        raise DimensionError("subspace ambient does not match the algebra")
    z = Scalar.zero(A.conductor)
    vecs = []
    su = [{i: c for i, c in enumerate(u) if c} for u in U.rows]
    sv = [{j: c for j, c in enumerate(v) if c} for v in V.rows]
    for a in su:
        for b in sv:
            w = A.bracket_sparse(a, b)
            if w:
                vecs.append(tuple(w.get(k, z) for k in range(A.dim)))
    return Subspace(A.n, A.m, vecs, A.conductor)


def even_subspace(A: SuperAlgebra) -> Subspace:
    return Subspace.of(A, [A.basis_vector(i) for i in range(A.n)])


def odd_subspace(A: SuperAlgebra) -> Subspace:
    return Subspace.of(A, [A.basis_vector(A.n + j) for j in range(A.m)])


def right_annihilator(A: SuperAlgebra) -> Subspace:
    """{z : [y, z] = 0 for every y}, as the kernel of the stacked maps z -> [e_i, z]."""
    d = A.dim
    z = Scalar.zero(A.conductor)
    rows = []
    for i in range(d):
        block = [[z] * d for _ in range(d)]
        for j in range(d):
            for k, c in A.product(i, j).items():
                block[k][j] = c
        rows.extend(r for r in block if any(r))
    if not rows:
        return Subspace.whole(A.n, A.m, A.conductor)
    return Subspace.of(A, linalg.nullspace(rows, d, A.conductor))


# -- constructions -----------------------------------------------------------------


def change_basis(A: SuperAlgebra, P_even, P_odd) -> SuperAlgebra:
    """The same algebra written in the basis given by the columns of P_even, P_odd.

    Column ``i`` of ``P_even`` holds the old coordinates of the new ``x_{i+1}``.
    ``change_basis(change_basis(A, P, Q), P2, Q2) == change_basis(A, P @ P2, Q @ Q2)``.
    """
    n, m, N = A.n, A.m, A.conductor
    pe = linalg.as_matrix(P_even, N) if n else []
    po = linalg.as_matrix(P_odd, N) if m else []
    if len(pe) != n or any(len(r) != n for r in pe) or len(po) != m or any(len(r) != m for r in po):
        raise DimensionError("basis change matrices have the wrong shape")
    pe = [[_as_scalar(c, N) for c in r] for r in pe]
    po = [[_as_scalar(c, N) for c in r] for r in po]
    fast = _change_basis_rational(A, pe, po)
    if fast is not None:
        return fast
    inv_e = linalg.inverse(pe) if n else []
    inv_o = linalg.inverse(po) if m else []
    d = n + m
    cols: list[dict[int, Scalar]] = []
    for i in range(n):
        cols.append({k: pe[k][i] for k in range(n) if pe[k][i]})
    for j in range(m):
        cols.append({n + k: po[k][j] for k in range(m) if po[k][j]})
    inv_cols: list[dict[int, Scalar]] = []  # old basis vector -> new coordinates
    for k in range(n):
        inv_cols.append({i: inv_e[i][k] for i in range(n) if inv_e[i][k]})
    for k in range(m):
        inv_cols.append({n + i: inv_o[i][k] for i in range(m) if inv_o[i][k]})

    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for a in range(d):
        for b in range(d):
            w = A.bracket_sparse(cols[a], cols[b])
            if not w:
                continue
            out: dict[int, Scalar] = {}
            for k, c in w.items():
                for t, v in inv_cols[k].items():
                    out[t] = out[t] + c * v if t in out else c * v
            out = {t: c for t, c in out.items() if c}
            if out:
                table[(a, b)] = out
    return SuperAlgebra(n, m, table, N, A.metadata)


def _change_basis_rational(A: SuperAlgebra, pe, po) -> SuperAlgebra | None:
    """change_basis in integer arithmetic; None unless the table and both matrices are rational.

    Table, basis columns and inverse are scaled to integers by their common
    denominators, and the scale is divided out once per output coefficient.
    """
    if not all(c.is_rational() for _, _, row in A.entries() for c in row.values()):
        return None
    qe, qo = linalg.to_fractions(pe), linalg.to_fractions(po)
    if qe is None or qo is None:
        return None
    n, m, d = A.n, A.m, A.dim
    P = [[Fraction(0)] * d for _ in range(d)]  # block diagonal
    for i in range(n):
        P[i][:n] = qe[i]
    for i in range(m):
        P[n + i][n:] = qo[i]
    Pinv = linalg.inverse_q(P)
    dp, di = linalg.common_denominator(P), linalg.common_denominator(Pinv)
    Pz = [[int(x * dp) for x in row] for row in P]
    Iz = [[int(x * di) for x in row] for row in Pinv]
    fr = {key: {k: c.coeffs[0] for k, c in row.items()} for key, row in A._table.items()}
    dt = 1
    for row in fr.values():
        for c in row.values():
            dt = lcm(dt, c.denominator)
    table = {key: [(k, int(c * dt)) for k, c in row.items()] for key, row in fr.items()}
    cols = [[(k, Pz[k][a]) for k in range(d) if Pz[k][a]] for a in range(d)]
    inv_cols = [[(t, Iz[t][k]) for t in range(d) if Iz[t][k]] for k in range(d)]
    scale = Fraction(1) / (dp * dp * di * dt)
    out_table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for a in range(d):
        for b in range(d):
            w: dict[int, int] = {}
            for i, ci in cols[a]:
                for j, cj in cols[b]:
                    row = table.get((i, j))
                    if row:
                        f = ci * cj
                        for k, c in row:
                            w[k] = w.get(k, 0) + f * c
            out: dict[int, int] = {}
            for k, c in w.items():
                if c:
                    for t, v in inv_cols[k]:
                        out[t] = out.get(t, 0) + c * v
            out_row = {t: Scalar.rational(c * scale, A.conductor) for t, c in out.items() if c}
            if out_row:
                out_table[(a, b)] = out_row
    return SuperAlgebra(n, m, out_table, A.conductor, A.metadata)


def with_conductor(A: SuperAlgebra, conductor: int) -> SuperAlgebra:
    if conductor == A.conductor:
        return A
    table = {key: {k: embed(c, conductor) for k, c in row.items()} for key, row in A._table.items()}
    return SuperAlgebra(A.n, A.m, table, conductor, A.metadata)


def even_subalgebra(A: SuperAlgebra) -> SuperAlgebra:
    """L_0 as an ordinary (purely even) algebra."""
    n = A.n
    table = {
        (i, j): dict(row) for (i, j), row in A._table.items() if i < n and j < n
    }
    return SuperAlgebra(n, 0, table, A.conductor)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """A + B with even parts and odd parts concatenated (A's elements first)."""
    N = lcm(A.conductor, B.conductor)
    A, B = with_conductor(A, N), with_conductor(B, N)
    n, m = A.n + B.n, A.m + B.m

    def remap_a(i):
        return i if i < A.n else n + (i - A.n)

    def remap_b(i):
        return A.n + i if i < B.n else n + A.m + (i - B.n)

    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for remap, alg in ((remap_a, A), (remap_b, B)):
        for (i, j), row in alg._table.items():
            table[(remap(i), remap(j))] = {remap(k): c for k, c in row.items()}
    return SuperAlgebra(n, m, table, N)
