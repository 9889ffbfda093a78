"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its remainder modulo the N-th cyclotomic
polynomial, i.e. a vector of ``phi(N)`` rationals giving the coefficients
of ``1, z, z^2, ...`` where ``z = exp(2*pi*i/N)``.  This remainder is
canonical, so equality and hashing are structural.

Literal syntax (files and CLI) is ordinary arithmetic in ``z``::

    "3/2"   "-1"   "z^3"   "(1/2)*z^2 + 1"
"""

from __future__ import annotations

import ast
import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "ScalarParseError",
    "ConductorMismatch",
    "cyclotomic_polynomial",
    "totient",
    "root_of_unity",
    "embed",
    "restrict",
    "minimal_conductor",
    "normalize_conductor",
    "parse_scalar",
]

Number = Union[int, Fraction]


class ScalarParseError(ValueError):
    """Raised for malformed scalar literals (including division by zero)."""


class ConductorMismatch(ValueError):
    """Raised when combining scalars that live in different cyclotomic fields."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    # x^n - 1 divided by all Phi_d for proper divisors d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] // den[-1]
        out[i - dn] = c
        if c:
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    assert not any(num[:dn]), "cyclotomic division left a remainder"
    return out


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def normalize_conductor(n: int) -> int:
    """Smallest conductor describing the same field (Q(zeta_2k) = Q(zeta_k) for odd k)."""
    return n // 2 if n % 4 == 2 else n


def _reduce(coeffs: list, n: int) -> tuple[Fraction, ...]:
    """Remainder of ``sum coeffs[i] z^i`` modulo Phi_n (Phi_n is monic)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if lead:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    c[base + j] -= lead * phi[j]
        c[i] = 0
    c = c[:deg] + [0] * (deg - len(c))
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in c)


class Scalar:
    """An immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, coeffs: Union[Number, Iterable[Number]] = 0, conductor: int = 1):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        if isinstance(coeffs, (int, Fraction)):
            coeffs = [coeffs]
        self.conductor = conductor
        self.coeffs = _reduce(list(coeffs), conductor)

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple) -> "Scalar":
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, conductor: int = 1) -> "Scalar":
        return cls._raw(conductor, (Fraction(0),) * totient(conductor))

    @classmethod
    def one(cls, conductor: int = 1) -> "Scalar":
        return cls.rational(1, conductor)

    @classmethod
    def rational(cls, value: Number, conductor: int = 1) -> "Scalar":
        if not isinstance(value, Fraction):
            value = Fraction(value)
        return cls._raw(conductor, (value,) + (Fraction(0),) * (totient(conductor) - 1))

    @classmethod
    def zeta(cls, conductor: int) -> "Scalar":
        """The generator exp(2*pi*i/N) of Q(zeta_N)."""
        return cls([0, 1], conductor)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.rational(other, self.conductor)
        return NotImplemented

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> "Scalar":
        return Scalar._raw(self.conductor, tuple(-a for a in self.coeffs))

    def __pos__(self) -> "Scalar":
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar._raw(self.conductor, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return Scalar._raw(self.conductor, (a[0] * b[0],))
        prod = [0] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Scalar._raw(self.conductor, _reduce(prod, self.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero scalar")
        if len(self.coeffs) == 1:
            return Scalar._raw(self.conductor, (1 / self.coeffs[0],))
        # solve (multiplication-by-self) * b = 1 over Q
        deg = len(self.coeffs)
        z = Scalar.zeta(self.conductor)
        cols = []
        power = self
        for _ in range(deg):
            cols.append(power.coeffs)
            power = power * z
        rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        return Scalar._raw(self.conductor, tuple(_solve_augmented(rows)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._raw(self.conductor, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = Scalar.one(self.conductor)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- presentation -----------------------------------------------------

    def to_complex(self) -> complex:
        w = cmath.exp(2j * math.pi / self.conductor)
        return sum(float(c) * w**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        parts: list[str] = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            zpow = "" if power == 0 else ("z" if power == 1 else f"z^{power}")
            if not zpow:
                term = str(mag)
            elif mag == 1:
                term = zpow
            elif mag.denominator == 1:
                term = f"{mag}*{zpow}"
            else:
                term = f"({mag})*{zpow}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self) -> str:
        if self.conductor == 1:
            return f"Scalar({str(self)!r})"
        return f"Scalar({str(self)!r}, conductor={self.conductor})"


def _solve_augmented(rows: list[list[Fraction]]) -> list[Fraction]:
    """Gauss-Jordan on a square nonsingular augmented system."""
    size = len(rows)
    for col in range(size):
        piv = next(r for r in range(col, size) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[r][size] for r in range(size)]


def root_of_unity(m: int, t: int, conductor: int) -> Scalar:
    """exp(2*pi*i*m/t) as an element of Q(zeta_conductor).

    Requires ``t | conductor``; for odd conductors ``t | 2*conductor`` is also
    accepted since Q(zeta_2N) = Q(zeta_N) then.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if not 0 <= m < t:
        raise ValueError(f"root index m={m} outside 0..{t - 1}")
    if conductor % t == 0:
        return Scalar.zeta(conductor) ** (m * conductor // t)
    if conductor % 2 == 1 and (2 * conductor) % t == 0:
        # zeta_2N = -zeta_N^((N+1)/2)
        zeta2 = -(Scalar.zeta(conductor) ** ((conductor + 1) // 2))
        return zeta2 ** (m * 2 * conductor // t)
    raise ValueError(f"t={t} does not divide conductor {conductor}")


def embed(a: Scalar, conductor: int) -> Scalar:
    """Image of ``a`` under Q(zeta_N) -> Q(zeta_N'), zeta_N -> zeta_N'^(N'/N)."""
    if conductor == a.conductor:
        return a
    if conductor % a.conductor:
        raise ValueError(f"conductor {a.conductor} does not divide {conductor}")
    step = conductor // a.conductor
    poly = [0] * ((len(a.coeffs) - 1) * step + 1)
    for i, c in enumerate(a.coeffs):
        poly[i * step] = c
    return Scalar(poly, conductor)


def restrict(a: Scalar, conductor: int) -> Scalar:
    """Inverse of :func:`embed`; raises if ``a`` is not in the subfield."""
    if conductor == a.conductor:
        return a
    if a.conductor % conductor:
        raise ValueError(f"conductor {conductor} does not divide {a.conductor}")
    small = totient(conductor)
    basis = [embed(Scalar.zeta(conductor) ** i, a.conductor).coeffs for i in range(small)]
    big = len(a.coeffs)
    rows = [[basis[j][i] for j in range(small)] + [a.coeffs[i]] for i in range(big)]
    sol = _solve_overdetermined(rows, small)
    if sol is None:
        raise ValueError(f"{a} does not lie in Q(zeta_{conductor})")
    return Scalar(sol, conductor)


def _solve_overdetermined(rows: list[list[Fraction]], nvars: int):
    rows = [list(r) for r in rows]
    piv_row = 0
    pivots = []
    for col in range(nvars):
        piv = next((r for r in range(piv_row, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[piv_row], rows[piv] = rows[piv], rows[piv_row]
        inv = 1 / rows[piv_row][col]
        rows[piv_row] = [v * inv for v in rows[piv_row]]
        for r in range(len(rows)):
            if r != piv_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_row])]
        pivots.append(col)
        piv_row += 1
    if any(r[nvars] for r in rows[piv_row:]):
        return None
    sol = [Fraction(0)] * nvars
    for r, col in enumerate(pivots):
        sol[col] = rows[r][nvars]
    return sol


def minimal_conductor(a: Scalar) -> int:
    """Smallest normalized conductor whose field contains ``a``."""
    if a.is_rational():
        return 1
    for d in sorted(d for d in range(1, a.conductor + 1) if a.conductor % d == 0):
        if normalize_conductor(d) != d:
            continue
        try:
            restrict(a, d)
        except ValueError:
            continue
        return d
    return a.conductor


_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_scalar(text: str, conductor: int = 1) -> Scalar:
    """Parse a literal such as ``"(1/2)*z^2 + 1"`` into Q(zeta_conductor)."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Scalar.rational(text, conductor)
        raise ScalarParseError(f"scalar literal must be a string, got {text!r}")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ScalarParseError(f"malformed scalar literal {text!r}") from exc
    try:
        return _eval_node(tree.body, conductor, text)
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"division by zero in scalar literal {text!r}") from exc


def _eval_node(node, conductor: int, text: str):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Scalar.rational(node.value, conductor)
    if isinstance(node, ast.Name) and node.id == "z":
        return Scalar.zeta(conductor)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval_node(node.operand, conductor, text)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp) and isinstance(node.op, _BINOPS):
        left = _eval_node(node.left, conductor, text)
        right = _eval_node(node.right, conductor, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
        if not (right.is_rational() and right.as_fraction().denominator == 1):
            raise ScalarParseError(f"exponent must be an integer in {text!r}")
        return left ** int(right.as_fraction())
    raise ScalarParseError(f"unsupported syntax in scalar literal {text!r}")
