"""Constructors for the classified families of nilpotent Leibniz superalgebras.

Every family table is written once, against an abstract coefficient ring:
the builder receives parameter values (exact scalars, or polynomials for
the symbolic layer) and emits ``[left, right] += coeff * target`` entries.

Readings of the printed tables that differ from a literal transcription
are listed in ``TABLE_READINGS`` and copied into each algebra's metadata.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Mapping, Sequence

from .core import SuperAlgebra, Violation, check_superidentity
from .scalars import Scalar, embed, minimal_conductor, normalize_conductor, parse_scalar, root_of_unity

FAMILIES = (
    "Thm21-even",
    "Thm21-mixed",
    "Leib1m",
    "Leibn1",
    "Leib22-a",
    "Leib22-b",
    "Leib2m-a",
    "Leib2m-b",
    "L",
    "G",
    "M",
    "H",
)

HALF = Fraction(1, 2)

TABLE_READINGS = {
    "Leib2m-a": "[y_i, y_{m+1-i}] = (-1)^(i+1) x2 for all 1 <= i <= m (printed range stops at m-1); "
    "requires odd m, since the x1 row of the identity forces it",
    "Leib2m-b": "[y_i, y_{m+1-i}] = (-1)^(i+1) x2 for all 1 <= i <= m, the graded-symmetric completion "
    "of the printed half table [y_{m+1-i}, y_i]; requires odd m",
    "M": "[y2, x2] uses a5*y5 where the table prints a5*y4; [x2, x2] equals the right side of [x1, x2] "
    "(forced by the triple (x2, x2, y1) since [x2, y1] = y2/2); gamma4 is an extra additive x4 "
    "coefficient (default 0), and any nonzero gamma4 violates the identity",
    "H": "[y_j, x1] = y_{j+1} for 1 <= j <= n-1 and [x_i, y1] = y_i/2 for 3 <= i <= n (printed ranges "
    "stop one short, which breaks the identity once b_n != 0 and leaves C1 != (m)); with these "
    "readings the triple (x2, x2, y1) leaves -gamma/2 * y_n, so only gamma = 0 is consistent",
}


class FamilyError(ValueError):
    """Bad family name, dimensions or parameters."""


class SuperidentityError(ValueError):
    def __init__(self, message: str, violations: list[Violation]):
        super().__init__(message)
        self.violations = violations


def param_names(name: str, n: int, m: int | None = None) -> list[str]:
    """Ordered parameter names of a family at even dimension ``n``."""
    if name == "Leibn1":
        return ["alpha"]
    if name == "L":
        return [f"a{k}" for k in range(4, n + 1)] + ["theta"]
    if name == "G":
        return [f"b{k}" for k in range(4, n + 1)] + ["gamma"]
    if name == "M":
        return [f"a{k}" for k in range(4, n + 1)] + ["theta", "tau", "gamma4"]
    if name == "H":
        return [f"b{k}" for k in range(4, n + 1)] + ["delta", "gamma"]
    if name in FAMILIES:
        return []
    raise FamilyError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def default_odd_dimension(name: str, n: int) -> int | None:
    if name in ("L", "G"):
        return n - 1
    if name in ("M", "H"):
        return n
    if name == "Thm21-even":
        return 0
    if name == "Thm21-mixed":
        return n
    if name == "Leibn1":
        return 1
    if name in ("Leib22-a", "Leib22-b"):
        return 2
    return None


def check_dimensions(name: str, n: int, m: int) -> None:
    def need(cond: bool, msg: str):
        if not cond:
            raise FamilyError(f"{name}: {msg} (got n={n}, m={m})")

    if name == "Thm21-even":
        need(n >= 1 and m == 0, "requires n >= 1 and m = 0")
    elif name == "Thm21-mixed":
        need(n >= 1 and m in (n, n + 1), "requires m = n (n+m even) or m = n+1 (n+m odd)")
    elif name == "Leib1m":
        need(n == 1 and m >= 1, "requires n = 1, m >= 1")
    elif name == "Leibn1":
        need(n >= 1 and m == 1, "requires m = 1")
    elif name in ("Leib22-a", "Leib22-b"):
        need(n == 2 and m == 2, "requires n = m = 2")
    elif name == "Leib2m-a":
        need(n == 2 and m >= 3 and m % 2 == 1, "requires n = 2 and odd m >= 3")
    elif name == "Leib2m-b":
        need(n == 2 and m >= 1 and m % 2 == 1, "requires n = 2 and odd m")
    elif name in ("L", "G"):
        need(n >= 3 and m == n - 1, "requires n >= 3 and m = n-1")
    elif name in ("M", "H"):
        need(n >= 3 and m == n, "requires n >= 3 and m = n")
    else:
        raise FamilyError(f"unknown family {name!r}")


@dataclass
class FamilySpec:
    name: str
    n: int
    m: int | None = None
    params: Mapping[str, object] | Sequence[object] = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}; expected one of {', '.join(FAMILIES)}")
        if self.m is None:
            self.m = default_odd_dimension(self.name, self.n)
            if self.m is None:
                raise FamilyError(f"{self.name}: odd dimension m must be given")
        check_dimensions(self.name, self.n, self.m)
        names = param_names(self.name, self.n, self.m)
        if isinstance(self.params, Mapping):
            unknown = set(self.params) - set(names)
            if unknown:
                raise FamilyError(f"{self.name}: unknown parameters {sorted(unknown)}; expected {names}")
            if "gamma4" in self.params and self.n < 4 and self.params["gamma4"] not in (0, "0"):
                raise FamilyError("M: gamma4 multiplies x4, which needs n >= 4")
            self.params = dict(self.params)
        else:
            values = list(self.params)
            if len(values) != len(names):
                raise FamilyError(f"{self.name}: expected {len(names)} parameters {names}, got {len(values)}")
            self.params = dict(zip(names, values))

    @property
    def param_names(self) -> list[str]:
        return param_names(self.name, self.n, self.m)


# -- family tables ----------------------------------------------------------------------

Put = Callable[[str, str, str, object], None]


def _x(i):
    return f"x{i}"


def _y(j):
    return f"y{j}"


def _thm21_even(n, m, p, put: Put):
    for i in range(1, n):
        put(_x(i), _x(1), _x(i + 1), 1)


def _thm21_mixed(n, m, p, put: Put):
    # single odd generator e1; e_{2k} = x_k, e_{2k-1} = y_k
    d = n + m

    def e(k):
        return _x(k // 2) if k % 2 == 0 else _y((k + 1) // 2)

    for i in range(1, d):
        put(e(i), e(1), e(i + 1), 1)
    for i in range(1, d - 1):
        put(e(i), e(2), e(i + 2), 2)


def _leib1m(n, m, p, put: Put):
    for i in range(1, m):
        put(_y(i), _x(1), _y(i + 1), 1)


def _leibn1(n, m, p, put: Put):
    for i in range(1, n):
        put(_x(i), _x(1), _x(i + 1), 1)
    put(_y(1), _y(1), _x(n), p["alpha"])


def _leib22_a(n, m, p, put: Put):
    put("y1", "x1", "y2", 1)
    put("x1", "y1", "y2", HALF)
    put("x2", "y1", "y2", 1)
    put("y1", "x2", "y2", 2)
    put("y1", "y1", "x2", 1)


def _leib22_b(n, m, p, put: Put):
    put("y1", "x1", "y2", 1)
    put("x2", "y1", "y2", 1)
    put("y1", "x2", "y2", 2)
    put("y1", "y1", "x2", 1)


def _odd_chain_with_antisym(m, put: Put):
    for i in range(1, m):
        put(_y(i), "x1", _y(i + 1), 1)
        put("x1", _y(i), _y(i + 1), -1)
    for i in range(1, m + 1):
        put(_y(i), _y(m + 1 - i), "x2", (-1) ** (i + 1))


def _leib2m_a(n, m, p, put: Put):
    put("x1", "x1", "x2", 1)
    _odd_chain_with_antisym(m, put)


def _leib2m_b(n, m, p, put: Put):
    _odd_chain_with_antisym(m, put)


def _family_L(n, m, p, put: Put):
    a = lambda k: p[f"a{k}"]  # noqa: E731
    put("x1", "x1", "x3", 1)
    for i in range(2, n):
        put(_x(i), "x1", _x(i + 1), 1)
    for j in range(1, n - 1):
        put(_y(j), "x1", _y(j + 1), 1)
    put("x1", "y1", "y2", HALF)
    for i in range(2, n):
        put(_x(i), "y1", _y(i), HALF)
    put("y1", "y1", "x1", 1)
    for j in range(2, n):
        put(_y(j), "y1", _x(j + 1), 1)
    for k in range(4, n):
        put("x1", "x2", _x(k), a(k))
    put("x1", "x2", _x(n), p["theta"])
    for j in range(2, n - 1):
        for k in range(4, n + 3 - j):
            put(_x(j), "x2", _x(j + k - 2), a(k))
    for k in range(4, n):
        put("y1", "x2", _y(k - 1), a(k))
    put("y1", "x2", _y(n - 1), p["theta"])
    for j in range(2, n - 2):
        for k in range(4, n + 2 - j):
            put(_y(j), "x2", _y(j + k - 2), a(k))


def _family_G(n, m, p, put: Put):
    b = lambda k: p[f"b{k}"]  # noqa: E731
    put("x1", "x1", "x3", 1)
    for i in range(3, n):
        put(_x(i), "x1", _x(i + 1), 1)
    for j in range(1, n - 1):
        put(_y(j), "x1", _y(j + 1), 1)
    for k in range(4, n + 1):
        put("x1", "x2", _x(k), b(k))
    put("x2", "x2", _x(n), p["gamma"])
    for j in range(3, n - 1):
        for k in range(4, n + 3 - j):
            put(_x(j), "x2", _x(j + k - 2), b(k))
    put("y1", "y1", "x1", 1)
    for j in range(2, n):
        put(_y(j), "y1", _x(j + 1), 1)
    put("x1", "y1", "y2", HALF)
    for i in range(3, n):
        put(_x(i), "y1", _y(i), HALF)
    for j in range(1, n - 2):
        for k in range(4, n + 2 - j):
            put(_y(j), "x2", _y(j + k - 2), b(k))


def _family_M(n, m, p, put: Put):
    a = lambda k: p[f"a{k}"]  # noqa: E731
    put("x1", "x1", "x3", 1)
    for i in range(2, n):
        put(_x(i), "x1", _x(i + 1), 1)
    for j in range(1, n):
        put(_y(j), "x1", _y(j + 1), 1)
    put("x1", "y1", "y2", HALF)
    for i in range(2, n + 1):
        put(_x(i), "y1", _y(i), HALF)
    put("y1", "y1", "x1", 1)
    for j in range(2, n):
        put(_y(j), "y1", _x(j + 1), 1)
    for k in range(4, n):
        put("x1", "x2", _x(k), a(k))
    put("x1", "x2", _x(n), p["theta"])
    for k in range(4, n):
        put("x2", "x2", _x(k), a(k))
    put("x2", "x2", _x(n), p["theta"])
    if n >= 4:
        put("x2", "x2", "x4", p["gamma4"])
    for j in range(3, n - 1):
        for k in range(4, n + 3 - j):
            put(_x(j), "x2", _x(j + k - 2), a(k))
    for k in range(4, n):
        put("y1", "x2", _y(k - 1), a(k))
    put("y1", "x2", _y(n - 1), p["theta"])
    put("y1", "x2", _y(n), p["tau"])
    for k in range(4, n):
        put("y2", "x2", _y(k), a(k))
    put("y2", "x2", _y(n), p["theta"])
    for j in range(3, n - 1):
        for k in range(4, n + 3 - j):
            put(_y(j), "x2", _y(j + k - 2), a(k))


def _family_H(n, m, p, put: Put):
    b = lambda k: p[f"b{k}"]  # noqa: E731
    put("x1", "x1", "x3", 1)
    for i in range(3, n):
        put(_x(i), "x1", _x(i + 1), 1)
    for j in range(1, n):
        put(_y(j), "x1", _y(j + 1), 1)
    for k in range(4, n + 1):
        put("x1", "x2", _x(k), b(k))
    put("x2", "x2", _x(n), p["gamma"])
    for j in range(3, n - 1):
        for k in range(4, n + 3 - j):
            put(_x(j), "x2", _x(j + k - 2), b(k))
    put("y1", "y1", "x1", 1)
    for j in range(2, n):
        put(_y(j), "y1", _x(j + 1), 1)
    put("x1", "y1", "y2", HALF)
    for i in range(3, n + 1):
        put(_x(i), "y1", _y(i), HALF)
    for k in range(4, n + 1):
        put("y1", "x2", _y(k - 1), b(k))
    put("y1", "x2", _y(n), p["delta"])
    for j in range(2, n - 1):
        for k in range(4, n + 3 - j):
            put(_y(j), "x2", _y(j + k - 2), b(k))


BUILDERS = {
    "Thm21-even": _thm21_even,
    "Thm21-mixed": _thm21_mixed,
    "Leib1m": _leib1m,
    "Leibn1": _leibn1,
    "Leib22-a": _leib22_a,
    "Leib22-b": _leib22_b,
    "Leib2m-a": _leib2m_a,
    "Leib2m-b": _leib2m_b,
    "L": _family_L,
    "G": _family_G,
    "M": _family_M,
    "H": _family_H,
}


def build_entries(name: str, n: int, m: int, values: Mapping[str, object]) -> dict:
    """Raw ``{(left, right): {target: coeff}}`` table with coefficients in whatever ring ``values`` holds."""
    products: dict[tuple[str, str], dict[str, object]] = {}

    def put(left, right, target, coeff):
        row = products.setdefault((left, right), {})
        row[target] = row[target] + coeff if target in row else coeff

    BUILDERS[name](n, m, values, put)
    return products


# -- numeric constructor ---------------------------------------------------------------------


def _scalar_params(spec: FamilySpec, conductor: int | None) -> tuple[dict[str, Scalar], int]:
    raw = {}
    for k in spec.param_names:
        v = spec.params.get(k, 0)
        if isinstance(v, str):
            v = parse_scalar(v, conductor or 1)
        elif not isinstance(v, Scalar):
            v = Scalar.rational(v)
        raw[k] = v
    if conductor is None:
        conductor = 1
        for v in raw.values():
            conductor = lcm(conductor, minimal_conductor(v))
        conductor = normalize_conductor(conductor)
    out = {}
    for k, v in raw.items():
        if v.conductor != conductor:
            if conductor % v.conductor == 0:
                v = embed(v, conductor)
            else:
                from .scalars import restrict

                v = embed(restrict(v, minimal_conductor(v)), conductor)
        out[k] = v
    return out, conductor


def make_family(
    spec: FamilySpec | str,
    n: int | None = None,
    m: int | None = None,
    params=None,
    *,
    verify: bool = True,
    conductor: int | None = None,
) -> SuperAlgebra:
    """Exact table of a classified family; verified against the superidentity by default.

    ``verify=False`` is the typo-investigation bypass: the algebra is built
    regardless and the residual count is recorded in its metadata.
    """
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(spec, n, m, params if params is not None else {})
    values, N = _scalar_params(spec, conductor)
    if spec.name == "Leibn1" and values["alpha"] not in (0, 1):
        raise FamilyError("Leibn1: alpha must be 0 or 1")
    products = build_entries(spec.name, spec.n, spec.m, values)
    metadata = {
        "family": spec.name,
        "params": {k: str(v) for k, v in values.items()},
    }
    if spec.name in TABLE_READINGS:
        metadata["reading"] = TABLE_READINGS[spec.name]
    A = SuperAlgebra.from_names(spec.n, spec.m, products, N, metadata)
    violations = check_superidentity(A)
    if violations:
        if verify:
            first = violations[0]
            raise SuperidentityError(
                f"{spec.name}(n={spec.n}, m={spec.m}) fails the Leibniz superidentity at "
                f"{len(violations)} triples, first {first.names}",
                violations,
            )
        A.metadata["violations"] = len(violations)
    return A


# -- parameter operators ------------------------------------------------------------------------


def _common_conductor(values: Sequence[Scalar], *orders: int) -> int:
    N = 1
    for v in values:
        N = lcm(N, v.conductor)
    for t in orders:
        N = lcm(N, t)
    return normalize_conductor(N)


def _lift(values, N):
    out = []
    for v in values:
        if not isinstance(v, Scalar):
            v = Scalar.rational(v, 1)
        out.append(embed(v, N) if v.conductor != N else v)
    return out


def op_V(m: int, j: int, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """(0,..,0, 1 at j, S_{m,j}^i * a_i for i > j); the zero vector when j = k+1.

    Positions are 1-based; the result lives in a field containing S_{m,j}.
    """
    k = len(vec)
    if not 1 <= j <= k + 1:
        raise FamilyError(f"V: j={j} outside 1..{k + 1}")
    if j == k + 1:
        N = _common_conductor([v for v in vec if isinstance(v, Scalar)])
        return tuple(Scalar.zero(N) for _ in range(k))
    if not 0 <= m < j:
        raise FamilyError(f"V: root index m={m} outside 0..{j - 1}")
    N = _common_conductor([v for v in vec if isinstance(v, Scalar)], j)
    vals = _lift(vec, N)
    S = root_of_unity(m, j, N)
    out = []
    for i in range(1, k + 1):
        if i < j:
            out.append(Scalar.zero(N))
        elif i == j:
            out.append(Scalar.one(N))
        else:
            out.append(S**i * vals[i - 1])
    return tuple(out)


def op_W(m: int, s: int, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """W^m_{s,k} on a V-normal-form vector of length k+1 whose last entry is gamma."""
    if len(vec) < 2:
        raise FamilyError("W: needs at least one entry besides gamma")
    k = len(vec) - 1
    N0 = _common_conductor([v for v in vec if isinstance(v, Scalar)])
    vals = _lift(vec, N0)
    j = next((i for i in range(1, k + 1) if vals[i - 1]), None)
    if j is None or vals[j - 1] != 1:
        raise FamilyError("W: input is not in V-normal form (no leading 1 among the first k entries)")
    if not 1 <= s <= k + 2 - j:
        raise FamilyError(f"W: s={s} outside 1..{k + 2 - j}")
    if not 0 <= m < s:
        raise FamilyError(f"W: root index m={m} outside 0..{s - 1}")
    if s == k + 2 - j:
        return tuple(Scalar.one(N0) if i == j else Scalar.zero(N0) for i in range(1, k + 2))
    if s == k + 1 - j:
        return tuple(Scalar.one(N0) if i in (j, k + 1) else Scalar.zero(N0) for i in range(1, k + 2))
    N = _common_conductor(vals, s)
    vals = _lift(vals, N)
    S = root_of_unity(m, s, N)
    out = []
    for p in range(1, k + 1):
        if p < j:
            out.append(Scalar.zero(N))
        elif p == j or p == s + j:
            out.append(Scalar.one(N))
        elif p < s + j:
            out.append(Scalar.zero(N))
        else:
            out.append(S ** (p - j) * vals[p - 1])
    out.append(S ** (k + 6 - 2 * j) * vals[k])
    return tuple(out)


# -- the classified list ---------------------------------------------------------------------------


@dataclass
class ListEntry:
    label: str
    spec: FamilySpec
    algebra: SuperAlgebra
    violations: int = 0  # residual triples; nonzero entries are not Leibniz superalgebras

    @property
    def valid(self) -> bool:
        return self.violations == 0


def _random_params(names: Sequence[str], rng: random.Random) -> dict[str, Scalar]:
    out = {}
    for k in names:
        num = 0
        while num == 0:
            num = rng.randint(-9, 9)
        out[k] = Scalar.rational(Fraction(num, rng.randint(1, 4)))
    return out


def _spec_from_values(name, n, m, names, values, extra=None):
    params = dict(zip(names, values))
    params.update(extra or {})
    return FamilySpec(name, n, m, params)


def _entry(label, spec) -> ListEntry:
    A = make_family(spec, verify=False)
    return ListEntry(label, spec, A, A.metadata.get("violations", 0))


def classified_list(n: int, m: int, params: Mapping[str, object] | None = None, seed: int = 0) -> list[ListEntry]:
    """Instances of every entry of the list with characteristic sequence (n-1, 1 | m).

    Entries are built without the strict check; an entry whose printed
    parameters violate the identity (H with a nonzero gamma) is returned
    with its residual count so callers can report it instead of losing it.

    Base parameters are seeded random non-zero rationals unless supplied.
    V/W positions 1..k correspond to parameter subscripts 4, 5, ...
    """
    if n < 3 or m not in (n - 1, n):
        raise FamilyError("classified list needs n >= 3 and m in {n-1, n}")
    rng = random.Random(seed)
    entries: list[ListEntry] = []
    if m == n - 1:
        entries += _list_L(n, m, _base(params, param_names("L", n), rng))
        entries += _list_G(n, m, _base(params, param_names("G", n), rng))
    else:
        entries += _list_M(n, m, _base(params, param_names("M", n)[:-1], rng))
        entries += _list_H(n, m, _base(params, param_names("H", n), rng))
    return entries


def _base(params, names, rng):
    values = _random_params(names, rng)
    for k, v in (params or {}).items():
        if k in values:
            values[k] = v if isinstance(v, Scalar) else parse_scalar(str(v))
    return values


def _zeros_and_one(name, n, m, names, last):
    zeros = {k: 0 for k in names}
    one = dict(zeros, **{last: 1})
    tail = ",".join(["0"] * (len(names) - 1))
    return [
        _entry(f"{name}({tail},1)", FamilySpec(name, n, m, one)),
        _entry(f"{name}({tail},0)", FamilySpec(name, n, m, zeros)),
    ]


def _list_L(n, m, base):
    k = n - 3
    names = param_names("L", n)
    alphas = [base[f"a{i}"] for i in range(4, n + 1)]
    out = []
    for j in range(1, k + 1):
        for r in range(j):
            vec = op_V(r, j, alphas)
            N = _common_conductor(list(vec), j)
            theta = root_of_unity(r, j, N) ** (n - 3) * embed(base["theta"], N)
            spec = _spec_from_values("L", n, m, names, list(vec) + [theta])
            out.append(_entry(f"L(V^{r}_{j},{k})", spec))
    return out + _zeros_and_one("L", n, m, names, "theta")


def _w_range(k, j):
    for s in range(1, k + 3 - j):
        generic = s <= k - j
        for r in range(s) if generic else [0]:
            yield s, r, generic


def _list_G(n, m, base):
    k = n - 3
    names = param_names("G", n)
    betas = [base[f"b{i}"] for i in range(4, n + 1)]
    out = []
    for j in range(1, k + 1):
        for r in range(j):
            v = list(op_V(r, j, betas))
            N = _common_conductor(v)
            v.append(embed(base["gamma"], N))
            for s, r2, generic in _w_range(k, j):
                w = op_W(r2, s, v)
                tag = f"W^{r2}_{s}" if generic else f"W_{s}"
                out.append(_entry(f"G({tag}(V^{r}_{j},{k}))", _spec_from_values("G", n, m, names, w)))
    return out + _zeros_and_one("G", n, m, names, "gamma")


def _list_M(n, m, base):
    k = n - 2
    names = param_names("M", n)  # ..., theta, tau, gamma4
    head = [base[f"a{i}"] for i in range(4, n + 1)] + [base["theta"]]
    out = []
    for j in range(1, k + 1):
        for r in range(j):
            vec = op_V(r, j, head)
            N = _common_conductor(list(vec), j)
            tau = root_of_unity(r, j, N) ** (n - 3) * embed(base["tau"], N)
            spec = _spec_from_values("M", n, m, names, list(vec) + [tau, 0])
            out.append(_entry(f"M(V^{r}_{j},{k})", spec))
    zeros = {key: 0 for key in names}
    one = dict(zeros, tau=1)
    tail = ",".join(["0"] * (len(names) - 2))
    out.append(_entry(f"M({tail},1)", FamilySpec("M", n, m, one)))
    out.append(_entry(f"M({tail},0)", FamilySpec("M", n, m, zeros)))
    return out


def _list_H(n, m, base):
    k = n - 2
    names = param_names("H", n)
    head = [base[f"b{i}"] for i in range(4, n + 1)] + [base["delta"]]
    out = []
    for j in range(1, k + 1):
        for r in range(j):
            v = list(op_V(r, j, head))
            N = _common_conductor(v)
            v.append(embed(base["gamma"], N))
            for s, r2, generic in _w_range(k, j):
                w = op_W(r2, s, v)
                tag = f"W^{r2}_{s}" if generic else f"W_{s}"
                out.append(_entry(f"H({tag}(V^{r}_{j},{k}))", _spec_from_values("H", n, m, names, w)))
    return out + _zeros_and_one("H", n, m, names, "gamma")


def random_family_params(name: str, n: int, m: int, seed: int) -> dict[str, Scalar]:
    """Seeded random rational parameters (alpha of Leibn1 drawn from {0, 1})."""
    rng = random.Random(seed)
    names = param_names(name, n, m)
    if name == "Leibn1":
        return {"alpha": Scalar.rational(rng.randint(0, 1))}
    values = _random_params(names, rng)
    if "gamma4" in values:
        # not part of the family signature; stays at its default
        values["gamma4"] = Scalar.rational(0)
    return values
