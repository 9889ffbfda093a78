import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_unimodular
from superleib.catalog import make_family
from superleib.core import (
    DimensionError,
    GradingError,
    Subspace,
    SuperAlgebra,
    change_basis,
    check_superidentity,
    direct_sum,
    is_leibniz,
    is_lie,
    product_span,
    right_annihilator,
)
from superleib.corpus import random_invertible
from superleib.invariants import nilindex
from superleib.scalars import Scalar


def abelian(n, m):
    return SuperAlgebra(n, m)


def expand_residual(A, x, y, z):
    """Independent oracle: the identity on vectors via bracket(), not the table walk."""
    lhs = A.bracket(x, A.bracket(y, z))
    t1 = A.bracket(A.bracket(x, y), z)
    t2 = A.bracket(A.bracket(x, z), y)
    py = 1 if any(y[A.n :]) else 0
    pz = 1 if any(z[A.n :]) else 0
    s = -1 if py and pz else 1
    return tuple(a - b + s * c for a, b, c in zip(lhs, t1, t2))


def test_bracket_examples():
    # mixed variant: e1 = y1, e2 = x1, e3 = y2
    T = make_family("Thm21-mixed", 2, 2)
    e1, e2, e3 = (T.basis_vector(T.index(k)) for k in ("y1", "x1", "y2"))
    assert T.bracket(e1, e2) == tuple(2 * c for c in e3)
    assert T.bracket(e1, e1) == e2
    A = abelian(2, 2)
    assert not any(A.bracket(A.basis_vector(0), A.basis_vector(3)))
    L = make_family("L", 5, 4, {})
    assert L.product_by_name("y1", "y1") == {"x1": Scalar.one()}


def test_bracket_is_bilinear():
    L = make_family("L", 4, 3, {"a4": 1, "theta": 2})
    rng = random.Random(1)
    for _ in range(10):
        u = tuple(Scalar.rational(rng.randint(-3, 3)) for _ in range(L.dim))
        v = tuple(Scalar.rational(rng.randint(-3, 3)) for _ in range(L.dim))
        total = L.zero_vector()
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                if a and b:
                    total = tuple(s + a * b * c for s, c in zip(total, L.bracket(L.basis_vector(i), L.basis_vector(j))))
        assert L.bracket(u, v) == total


def test_superidentity_examples():
    for n in range(1, 6):
        assert check_superidentity(make_family("Thm21-even", n, 0)) == []
        for m in (n, n + 1):
            if (n + m) % 2 == 0 and m == n or (n + m) % 2 == 1 and m == n + 1:
                assert check_superidentity(make_family("Thm21-mixed", n, m)) == []
    assert check_superidentity(abelian(3, 2)) == []
    bad = SuperAlgebra.from_names(1, 0, {("x1", "x1"): {"x1": 1}})
    v = check_superidentity(bad)
    assert [x.names for x in v] == [("x1", "x1", "x1")]
    # x1 - x1 + x1 under [x,[y,z]] - [[x,y],z] + (-1)^{|y||z|} [[x,z],y]
    assert v[0].residual == {"x1": Scalar.one()}


def test_superidentity_sign_uses_second_and_third_parities():
    # [y1, y1] = x1 with [x1, y1] = y2: the triple (y1, y1, y1) needs the (-1)^{|y||z|} sign
    A = SuperAlgebra.from_names(1, 2, {("y1", "y1"): {"x1": 1}, ("x1", "y1"): {"y2": 1}})
    x, y = A.basis_vector(1), A.basis_vector(1)
    got = {v.names: v.residual for v in check_superidentity(A)}
    oracle = expand_residual(A, x, y, y)
    assert got.get(("y1", "y1", "y1"), {}) == {A.name(k): c for k, c in enumerate(oracle) if c}


@pytest.mark.parametrize("seed", range(25))
def test_table_walk_agrees_with_vector_oracle(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 2), rng.randint(0, 2)
    d = n + m
    table = {}
    for i in range(d):
        for j in range(d):
            if rng.random() < 0.4:
                par = (i >= n) ^ (j >= n)
                targets = [k for k in range(d) if (k >= n) == par]
                if targets:
                    table[(i, j)] = {rng.choice(targets): rng.randint(-2, 2)}
    A = SuperAlgebra(n, m, table)
    got = {v.triple: v.residual for v in check_superidentity(A)}
    for i in range(d):
        for j in range(d):
            for k in range(d):
                oracle = expand_residual(A, A.basis_vector(i), A.basis_vector(j), A.basis_vector(k))
                expected = {A.name(t): c for t, c in enumerate(oracle) if c}
                assert got.get((i, j, k), {}) == expected
    assert is_leibniz(A) == (not got)


def test_is_lie_examples():
    assert not is_lie(make_family("Leib2m-a", 2, 3))
    assert is_lie(abelian(2, 3))
    for n in range(2, 5):
        assert not is_lie(make_family("Thm21-even", n, 0))
    heis = SuperAlgebra.from_names(3, 0, {("x1", "x2"): {"x3": 1}, ("x2", "x1"): {"x3": -1}})
    assert is_lie(heis)
    odd = SuperAlgebra.from_names(1, 1, {("y1", "y1"): {"x1": 1}})
    assert is_lie(odd)  # graded antisymmetry allows a symmetric odd square


def test_grading_and_dimension_errors():
    with pytest.raises(GradingError):
        SuperAlgebra.from_names(1, 1, {("x1", "x1"): {"y1": 1}})
    with pytest.raises(ValueError):
        SuperAlgebra.from_names(1, 1, {("x2", "x1"): {"x1": 1}})
    with pytest.raises(DimensionError):
        SuperAlgebra(1, 0, {(0, 3): {0: 1}})


def test_right_annihilator_examples():
    A = abelian(2, 2)
    assert right_annihilator(A).dim == 4
    T = make_family("Thm21-even", 4, 0)
    R = right_annihilator(T)
    assert R == Subspace.of(T, [T.basis_vector(i) for i in range(1, 4)])
    L = make_family("L", 3, 2, {})
    assert right_annihilator(L).contains(L.basis_vector(2))


def test_right_annihilator_absorbs():
    for A in (make_family("L", 4, 3, {"a4": 1, "theta": 1}), make_family("M", 4, 4, {"a4": 2, "theta": 1, "tau": -1})):
        R = right_annihilator(A)
        assert product_span(A, Subspace.whole(A.n, A.m), R).dim == 0


def test_change_basis_identity_and_scaling():
    T = make_family("Thm21-even", 3, 0)
    I = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert change_basis(T, I, []) == T
    P = [[2, 0, 0], [0, 1, 0], [0, 0, 1]]
    S = change_basis(T, P, [])
    # [2e1, 2e1] = 4 e2 = 4 e2' so the coefficient scales by 4
    assert S.product_by_name("x1", "x1") == {"x2": Scalar.rational(4)}
    assert nilindex(S) == nilindex(T) == 4


def test_change_basis_composes():
    A = make_family("G", 4, 3, {"b4": 1, "gamma": 2})
    rng = random.Random(3)
    P1, Q1 = random_invertible(4, rng), random_invertible(3, rng)
    P2, Q2 = random_invertible(4, rng), random_invertible(3, rng)
    mul = lambda a, b: [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]
    left = change_basis(change_basis(A, P1, Q1), P2, Q2)
    assert left == change_basis(A, mul(P1, P2), mul(Q1, Q2))


@given(st.integers(0, 10_000))
def test_identity_preserved_by_basis_change(seed):
    rng = random.Random(seed)
    G = make_family("G", 4, 3, {"b4": Fraction(1, 2), "gamma": -1})
    P, Q = random_unimodular(4, rng), random_unimodular(3, rng)
    assert check_superidentity(change_basis(G, P, Q)) == []
    bad = SuperAlgebra.from_names(2, 1, {("x1", "x1"): {"x1": 1}, ("y1", "x1"): {"y1": 1}})
    P2, Q2 = random_unimodular(2, rng), [[rng.choice((1, -1, 2))]]
    assert bool(check_superidentity(change_basis(bad, P2, Q2)))


def test_change_basis_singular():
    with pytest.raises(ValueError):
        change_basis(make_family("Thm21-even", 2, 0), [[1, 1], [1, 1]], [])


def test_subspace_ops():
    T = make_family("Thm21-even", 4, 0)
    U = Subspace.of(T, [T.basis_vector(0), T.basis_vector(1)])
    assert U.sum(U) == U
    assert product_span(abelian(3, 0), Subspace.whole(3, 0), Subspace.whole(3, 0)).dim == 0
    W = Subspace.whole(4, 0)
    assert product_span(T, W, W) == Subspace.of(T, [T.basis_vector(i) for i in (1, 2, 3)])
    V = Subspace.of(T, [T.basis_vector(1), T.basis_vector(2)])
    assert U.intersect(V) == Subspace.of(T, [T.basis_vector(1)])
    assert U.contains(T.basis_vector(1)) and not U.contains(T.basis_vector(3))
    with pytest.raises(ValueError):
        U.sum(Subspace.whole(3, 1))


def test_subspace_echelon_is_canonical():
    rng = random.Random(5)
    vecs = [tuple(Scalar.rational(rng.randint(-3, 3)) for _ in range(5)) for _ in range(3)]
    U = Subspace(3, 2, vecs)
    mixed = [tuple(a + 2 * b for a, b in zip(vecs[0], vecs[1])), vecs[1], tuple(-c for c in vecs[2])]
    assert Subspace(3, 2, mixed).rows == U.rows


def test_direct_sum():
    A = make_family("Thm21-even", 2, 0)
    B = make_family("Leib1m", 1, 2)
    S = direct_sum(A, B)
    assert (S.n, S.m) == (3, 2)
    assert check_superidentity(S) == []
    assert S.product_by_name("y1", "x3") == {"y2": Scalar.one()}


@pytest.mark.parametrize("seed", range(8))
def test_rational_change_basis_matches_generic_path(seed, monkeypatch):
    from superleib import core

    rng = random.Random(seed)
    A = make_family("M", 4, 4, {"a4": Fraction(1, 3), "theta": 2, "tau": -1})
    P = [[Fraction(c, rng.randint(1, 3)) for c in row] for row in random_invertible(4, rng)]
    Q = random_invertible(4, rng)
    fast = change_basis(A, P, Q)
    monkeypatch.setattr(core, "_change_basis_rational", lambda *args: None)
    assert change_basis(A, P, Q) == fast
