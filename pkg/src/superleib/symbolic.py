"""Polynomials in the family parameters and the constraint emitter.

A :class:`ParamAlgebra` is a family table whose coefficients are
polynomials in the parameters.  Expanding the Leibniz superidentity
coefficient-wise gives, for every basis triple and output coordinate, a
residual polynomial; the table is consistent for all parameter values
exactly when every residual is the zero polynomial.

No system solving happens here.  Constraints are produced, deduplicated up
to nonzero scalar multiples, and evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .catalog import FamilySpec, build_entries, check_dimensions, default_odd_dimension, param_names
from .core import EVEN, ODD, GradingError, SuperAlgebra, parse_basis_name
from .scalars import Scalar, embed, normalize_conductor

__all__ = [
    "Constraint",
    "ParamAlgebra",
    "Poly",
    "PolyError",
    "constraints_report",
    "emit_constraints",
    "residual_polys",
    "residual_table",
    "specialize",
    "symbolic_family",
]


class PolyError(ValueError):
    pass


def _key(exps: tuple[int, ...]) -> tuple:
    # graded lexicographic: higher total degree first, then lexicographic
    return (sum(exps), exps)


class Poly:
    """Polynomial with Scalar coefficients over a fixed ordered variable list."""

    __slots__ = ("variables", "terms", "conductor")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], object] | None = None,
        conductor: int = 1,
    ):
        self.variables = tuple(variables)
        self.conductor = conductor
        clean: dict[tuple[int, ...], Scalar] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise PolyError("exponent vector length does not match the variable list")
            c = c if isinstance(c, Scalar) else Scalar.rational(c, conductor)
            if c.conductor != conductor:
                c = embed(c, conductor)
            if c:
                clean[exps] = clean[exps] + c if exps in clean else c
        self.terms = {e: clean[e] for e in sorted(clean, key=_key, reverse=True) if clean[e]}

    @classmethod
    def constant(cls, value, variables: Sequence[str], conductor: int = 1) -> "Poly":
        return cls(variables, {(0,) * len(variables): value}, conductor)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str], conductor: int = 1) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise PolyError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1}, conductor)

    @classmethod
    def gens(cls, variables: Sequence[str], conductor: int = 1) -> list["Poly"]:
        return [cls.variable(v, variables, conductor) for v in variables]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise PolyError(f"variable lists differ: {self.variables} vs {other.variables}")
            if other.conductor != self.conductor:
                N = normalize_conductor(lcm(self.conductor, other.conductor))
                if N != self.conductor:
                    raise PolyError("conductor mismatch; lift the left operand first")
                return other.lift(N)
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return Poly.constant(other, self.variables, self.conductor)
        return NotImplemented

    def lift(self, conductor: int) -> "Poly":
        if conductor == self.conductor:
            return self
        return Poly(self.variables, {e: embed(c, conductor) for e, c in self.terms.items()}, conductor)

    def _aligned(self, other):
        if isinstance(other, Poly) and other.conductor != self.conductor:
            N = normalize_conductor(lcm(self.conductor, other.conductor))
            return self.lift(N), other.lift(N)
        return self, other

    def __add__(self, other):
        a, b = self._aligned(other)
        b = a._coerce(b)
        if b is NotImplemented:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return Poly(a.variables, terms, a.conductor)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.variables, {e: -c for e, c in self.terms.items()}, self.conductor)

    def __sub__(self, other):
        a, b = self._aligned(other)
        b = a._coerce(b)
        if b is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._aligned(other)
        b = a._coerce(b)
        if b is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                terms[e] = terms[e] + c if e in terms else c
        return Poly(a.variables, terms, a.conductor)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise PolyError("negative powers are not polynomials")
        out = Poly.constant(1, self.variables, self.conductor)
        for _ in range(k):
            out = out * self
        return out

    # -- predicates -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.constant(other, self.variables, self.conductor)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.variables != self.variables:
            return False
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self.terms.items())))

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def leading_coefficient(self) -> Scalar:
        return next(iter(self.terms.values())) if self.terms else Scalar.zero(self.conductor)

    def monic(self) -> "Poly":
        """Scalar multiple with leading coefficient 1 (zero stays zero)."""
        if not self.terms:
            return self
        inv = self.leading_coefficient().inverse()
        return Poly(self.variables, {e: c * inv for e, c in self.terms.items()}, self.conductor)

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, point: Mapping[str, object]) -> Scalar:
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise PolyError(f"no value bound for {', '.join(missing)}")
        values = [point[v] if isinstance(point[v], Scalar) else Scalar.rational(point[v]) for v in self.variables]
        N = normalize_conductor(lcm(self.conductor, *(v.conductor for v in values)))
        values = [embed(v, N) for v in values]
        acc = Scalar.zero(N)
        for e, c in self.terms.items():
            term = embed(c, N)
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            acc = acc + term
        return acc

    # -- printing -------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms.items():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            negative = c.is_rational() and c.as_fraction() < 0
            mag = -c if negative else c
            text = str(mag)
            if not mag.is_rational():
                text = f"({text})"
            if mono:
                body = mono if mag == 1 else f"{text}*{mono}"
            else:
                body = text
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


class ParamAlgebra:
    """A superalgebra table with polynomial structure constants."""

    def __init__(
        self,
        n: int,
        m: int,
        variables: Sequence[str],
        table: Mapping[tuple[int, int], Mapping[int, object]],
        conductor: int = 1,
        metadata: dict | None = None,
    ):
        self.n, self.m = n, m
        self.variables = tuple(variables)
        self.conductor = conductor
        self.metadata = dict(metadata or {})
        d = n + m
        clean: dict[tuple[int, int], dict[int, Poly]] = {}
        for (i, j), row in table.items():
            if not (0 <= i < d and 0 <= j < d):
                raise GradingError(f"basis index out of range in product ({i}, {j})")
            out = {}
            for k, c in row.items():
                p = c if isinstance(c, Poly) else Poly.constant(c, self.variables, conductor)
                if p.variables != self.variables:
                    raise PolyError("table polynomials must share the variable list")
                if not p:
                    continue
                if not 0 <= k < d:
                    raise GradingError(f"basis index {k} out of range")
                if self.parity(k) != (self.parity(i) + self.parity(j)) % 2:
                    raise GradingError(
                        f"[{self.name(i)}, {self.name(j)}] has a {self.name(k)} component of the wrong parity"
                    )
                out[k] = p
            if out:
                clean[(i, j)] = out
        self.table = clean

    @classmethod
    def from_names(cls, n, m, variables, products: Mapping, conductor: int = 1, metadata=None):
        table: dict[tuple[int, int], dict[int, object]] = {}
        for (left, right), row in products.items():
            i, j = parse_basis_name(left, n, m), parse_basis_name(right, n, m)
            table[(i, j)] = {parse_basis_name(t, n, m): c for t, c in row.items()}
        return cls(n, m, variables, table, conductor, metadata)

    @property
    def dim(self) -> int:
        return self.n + self.m

    def parity(self, i: int) -> int:
        return EVEN if i < self.n else ODD

    def name(self, i: int) -> str:
        return f"x{i + 1}" if i < self.n else f"y{i - self.n + 1}"

    def zero(self) -> Poly:
        return Poly(self.variables, {}, self.conductor)


def residual_polys(A: ParamAlgebra, i: int, j: int, k: int) -> dict[int, Poly]:
    """Coordinates of [x,[y,z]] - [[x,y],z] + (-1)^(|y||z|) [[x,z],y] at x=e_i, y=e_j, z=e_k."""
    T = A.table
    out: dict[int, Poly] = {}

    def add(t: int, term: Poly, sign: int):
        term = term if sign > 0 else -term
        out[t] = out[t] + term if t in out else term

    # [x, [y, z]]
    for l, c in T.get((j, k), {}).items():
        for t, d in T.get((i, l), {}).items():
            add(t, c * d, 1)
    # - [[x, y], z]
    for l, c in T.get((i, j), {}).items():
        for t, d in T.get((l, k), {}).items():
            add(t, c * d, -1)
    # (-1)^(|y||z|) [[x, z], y]
    sign = -1 if A.parity(j) and A.parity(k) else 1
    for l, c in T.get((i, k), {}).items():
        for t, d in T.get((l, j), {}).items():
            add(t, c * d, sign)
    return {t: p for t, p in sorted(out.items()) if p}


def residual_table(A: ParamAlgebra) -> dict[tuple[str, str, str], dict[str, Poly]]:
    """All nonzero residual polynomials, in triple order then coordinate order."""
    out = {}
    d = A.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                res = residual_polys(A, i, j, k)
                if res:
                    out[(A.name(i), A.name(j), A.name(k))] = {A.name(t): p for t, p in res.items()}
    return out


@dataclass(frozen=True)
class Constraint:
    triple: tuple[str, str, str]
    coordinate: str
    poly: Poly

    def to_json(self) -> dict:
        return {"triple": list(self.triple), "coordinate": self.coordinate, "poly": str(self.poly)}


def emit_constraints(A: ParamAlgebra) -> list[Constraint]:
    """Residual polynomials, deduplicated up to nonzero scalar multiples.

    Each distinct constraint keeps the first triple and coordinate at which
    it occurs.  The list is empty iff the identity holds for all parameter
    values.
    """
    seen = set()
    out = []
    for triple, row in residual_table(A).items():
        for coord, p in row.items():
            key = p.monic()
            if key in seen:
                continue
            seen.add(key)
            out.append(Constraint(triple, coord, p))
    return out


def constraints_report(constraints: Iterable[Constraint]) -> list[dict]:
    return [c.to_json() for c in constraints]


def specialize(A: ParamAlgebra, point: Mapping[str, object]) -> SuperAlgebra:
    """Numeric algebra obtained by substituting ``point`` for the parameters."""
    missing = [v for v in A.variables if v not in point]
    if missing:
        raise PolyError(f"no value bound for {', '.join(missing)}")
    values = {v: point[v] if isinstance(point[v], Scalar) else Scalar.rational(point[v]) for v in A.variables}
    N = normalize_conductor(lcm(A.conductor, *(s.conductor for s in values.values())))
    table = {}
    for pair, row in A.table.items():
        out = {k: embed(p.evaluate(values), N) for k, p in row.items()}
        table[pair] = {k: c for k, c in out.items() if c}
    return SuperAlgebra(A.n, A.m, table, N, dict(A.metadata, params={k: str(v) for k, v in values.items()}))


def symbolic_family(name: str, n: int, m: int | None = None) -> ParamAlgebra:
    """A catalog family with its parameters left as indeterminates."""
    if m is None:
        m = default_odd_dimension(name, n)
    check_dimensions(name, n, m)
    names = param_names(name, n, m)
    gens = dict(zip(names, Poly.gens(names)))
    # FamilySpec only validates the name and dimensions here
    FamilySpec(name, n, m, {})
    products = build_entries(name, n, m, gens)
    return ParamAlgebra.from_names(n, m, names, products, 1, {"family": name})
