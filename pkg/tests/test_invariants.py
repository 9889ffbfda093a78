import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_unimodular
from superleib import linalg
from superleib.catalog import make_family, random_family_params
from superleib.core import Subspace, SuperAlgebra, change_basis, even_subalgebra, is_lie, product_span
from superleib.corpus import random_basis_change
from superleib.invariants import (
    NotNilpotentError,
    NotNilpotentMatrixError,
    central_series,
    char_sequence,
    invariant_fingerprint,
    jordan_profile,
    minimal_generator_count,
    natural_gradation,
    nilindex,
    profile_greater,
    series_dims,
)
from superleib.scalars import Scalar


def block_matrix(blocks):
    size = sum(blocks)
    N = [[0] * size for _ in range(size)]
    start = 0
    for b in blocks:
        for r in range(start, start + b - 1):
            N[r][r + 1] = 1
        start += b
    return N


def conjugate(N, P):
    q = linalg.as_matrix(P)
    return linalg.matmul(linalg.matmul(linalg.inverse(q), linalg.as_matrix(N)), q)


partitions = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda p: tuple(sorted(p, reverse=True)))


# -- series -------------------------------------------------------------------------------


def test_series_examples():
    for n, m in ((1, 0), (3, 2), (0, 4)):
        assert nilindex(SuperAlgebra(n, m)) == 2
    for n in range(1, 6):
        assert nilindex(make_family("Thm21-even", n, 0)) == n + 1
    for n, m in ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3)):
        assert nilindex(make_family("Thm21-mixed", n, m)) == n + m + 1
    A = make_family("Leib1m", 1, 4)
    s = central_series(A)
    for k in range(2, 5):
        expected = Subspace.of(A, [A.basis_vector(A.index(f"y{j}")) for j in range(k, 5)])
        assert s.term(k) == expected
    assert s.nilindex == 5


def test_series_dims_fast_path_matches_exact_series():
    for A in (
        make_family("L", 5, 4, {"a4": 1, "a5": -2, "theta": 3}),
        make_family("Leibn1", 3, 1, {"alpha": 1}),
        make_family("Leib2m-b", 2, 5),
        make_family("M", 4, 4, {"theta": "z", "tau": 1}, conductor=3),
    ):
        assert series_dims(A) == central_series(A).dims


def test_not_nilpotent():
    A = SuperAlgebra.from_names(1, 0, {("x1", "x1"): {"x1": 1}})
    assert nilindex(A) is None and not central_series(A).nilpotent
    with pytest.raises(NotNilpotentError):
        natural_gradation(A)
    with pytest.raises(NotNilpotentError):
        minimal_generator_count(A)


def test_series_strictly_decreasing():
    A = make_family("G", 5, 4, {"b4": 1, "b5": 2, "gamma": -1})
    s = central_series(A)
    dims = s.dims
    assert all(a > b for a, b in zip(dims, dims[1:])) and dims[-1] == 0
    for k in range(1, len(dims) - 1):
        assert s.term(k + 1).issubset(s.term(k))


def test_generator_counts():
    for n in range(1, 5):
        assert minimal_generator_count(make_family("Thm21-even", n, 0)) == 1
    assert minimal_generator_count(SuperAlgebra(2, 3)) == 5
    L = make_family("L", 4, 3, {"a4": 1, "theta": 1})
    assert minimal_generator_count(L) == 2


# -- Jordan profiles ----------------------------------------------------------------------


def test_jordan_examples():
    Z = [[Scalar.zero()] * 3 for _ in range(3)]
    assert jordan_profile(Z) == (1, 1, 1)
    assert jordan_profile(linalg.as_matrix(block_matrix((4,)))) == (4,)
    P = [[1, 2, 0], [0, 1, -1], [3, 0, 1]]
    assert jordan_profile(conjugate(block_matrix((2, 1)), P)) == (2, 1)
    with pytest.raises(NotNilpotentMatrixError):
        jordan_profile(linalg.as_matrix([[1, 0], [0, 0]]))


def test_jordan_over_cyclotomic_field():
    z = Scalar.zeta(5)
    N = [[Scalar.zero(5), z], [Scalar.zero(5), Scalar.zero(5)]]
    assert jordan_profile(N) == (2,)


@given(partitions, st.integers(0, 10_000))
def test_jordan_recovers_partition(blocks, seed):
    rng = random.Random(seed)
    P = random_unimodular(sum(blocks), rng)
    assert jordan_profile(conjugate(block_matrix(blocks), P)) == blocks


@given(partitions)
def test_kernel_increments_non_increasing(blocks):
    N = linalg.as_matrix(block_matrix(blocks))
    size = len(N)
    kernels, power = [0], linalg.identity(size)
    for _ in range(size):
        power = linalg.matmul(power, N)
        kernels.append(size - linalg.rank(power))
    inc = [b - a for a, b in zip(kernels, kernels[1:])]
    assert all(a >= b for a, b in zip(inc, inc[1:]))
    assert inc[0] == len(jordan_profile(N))


def test_profile_order():
    assert profile_greater((3, 1), (2, 2))
    assert profile_greater((2, 1, 1), (2, 1))
    assert not profile_greater((1, 1), (1, 1))


# -- characteristic sequence -------------------------------------------------------------


def test_charseq_examples():
    cs = char_sequence(SuperAlgebra(3, 2))
    assert (cs.c0, cs.c1) == ((1, 1, 1), (1, 1))
    for n in (3, 4, 5):
        L = make_family("L", n, n - 1, random_family_params("L", n, n - 1, n))
        cs = char_sequence(L)
        assert (cs.c0, cs.c1) == ((n - 1, 1), (n - 1,))
        assert cs.display() == f"({n - 1},1 | {n - 1})"
        x1 = L.basis_vector(0)
        assert char_sequence(L, "basis-candidates").witness0 == x1


def test_charseq_strategies_and_determinism():
    M = make_family("M", 4, 4, random_family_params("M", 4, 4, 7))
    a = char_sequence(M, "seeded-random", samples=8, seed=3)
    b = char_sequence(M, "seeded-random", samples=8, seed=3)
    assert a == b and a.strategy == "seeded-random" and a.seed == 3
    assert char_sequence(M).display() == "(3,1 | 4)"
    with pytest.raises(ValueError):
        char_sequence(M, "exhaustive")


def test_charseq_over_irrational_field():
    M = make_family("M", 4, 4, {"a4": "z", "theta": "z^2", "tau": 1}, conductor=3)
    cs = char_sequence(M)
    assert (cs.c0, cs.c1) == ((3, 1), (4,))


def test_charseq_maxima_are_independent():
    # x1 gives the larger even block, x2 the larger odd block
    A = SuperAlgebra.from_names(3, 2, {("x2", "x1"): {"x3": 1}, ("y1", "x2"): {"y2": 1}})
    cs = char_sequence(A, "basis-candidates")
    assert (cs.c0, cs.c1) == ((2, 1), (2,))
    assert cs.witness0 == A.basis_vector(0) and cs.witness1 == A.basis_vector(1)


def test_charseq_needs_a_candidate():
    # only the odd square reaches x1, so L_0^2 = 0 and x1 is a candidate
    A = SuperAlgebra.from_names(1, 1, {("y1", "y1"): {"x1": 1}})
    assert char_sequence(A).c0 == (1,)
    B = SuperAlgebra.from_names(1, 0, {("x1", "x1"): {"x1": 1}})
    with pytest.raises(ValueError):
        char_sequence(B)


# -- gradation ---------------------------------------------------------------------------


def test_gradation_examples():
    assert natural_gradation(make_family("Thm21-even", 5, 0)).layers == (1, 1, 1, 1, 1)
    assert natural_gradation(SuperAlgebra(2, 2)).layers == (4,)
    for n in (3, 4, 5):
        L0 = even_subalgebra(make_family("L", n, n - 1, {}))
        assert natural_gradation(L0).layers == (2,) + (1,) * (n - 2)


@pytest.mark.parametrize("seed", range(6))
def test_gradation_respects_layers(seed):
    rng = random.Random(seed)
    name, n = rng.choice((("L", 4), ("G", 5), ("M", 4), ("Leib2m-a", 2)))
    m = {"L": n - 1, "G": n - 1, "M": n, "Leib2m-a": 3}[name]
    A = make_family(name, n, m, random_family_params(name, n, m, seed))
    A, _ = random_basis_change(A, seed)
    gr = natural_gradation(A)
    G = gr.algebra
    assert sum(gr.layers) == A.dim
    for i in range(1, len(gr.layers) + 1):
        for j in range(1, len(gr.layers) + 1):
            prod = product_span(G, gr.component(i), gr.component(j))
            target = gr.component(i + j) if i + j <= len(gr.layers) else Subspace.zero(G.n, G.m, G.conductor)
            assert prod.issubset(target)


def test_gradation_of_graded_algebra_is_isomorphic_data():
    A = make_family("Thm21-even", 4, 0)
    gr = natural_gradation(A)
    assert invariant_fingerprint(gr.algebra) == invariant_fingerprint(A)


# -- fingerprint -------------------------------------------------------------------------


def test_fingerprint_totality():
    a = invariant_fingerprint(make_family("Thm21-even", 4, 0))
    b = invariant_fingerprint(make_family("Thm21-mixed", 2, 2))
    assert a.nilindex == b.nilindex == 5
    assert invariant_fingerprint(make_family("L", 5, 4, {"theta": 1}))
    assert invariant_fingerprint(make_family("L", 5, 4, {}))
    assert invariant_fingerprint(SuperAlgebra(0, 2)).c0 == ()


def test_leibn1_alpha_distinguished():
    a0 = invariant_fingerprint(make_family("Leibn1", 3, 1, {"alpha": 0}))
    a1 = invariant_fingerprint(make_family("Leibn1", 3, 1, {"alpha": 1}))
    assert a0 != a1


@given(st.sampled_from(("L", "G", "M", "H", "Leib2m-b", "Leib22-a")), st.integers(0, 10_000))
def test_invariants_unchanged_by_basis_change(name, seed):
    n = 2 if name.startswith("Leib") else 4
    m = {"L": 3, "G": 3, "M": 4, "H": 4, "Leib2m-b": 3, "Leib22-a": 2}[name]
    params = random_family_params(name, n, m, seed)
    if name == "H":
        params["gamma"] = 0
    A = make_family(name, n, m, params)
    rng = random.Random(seed)
    B = change_basis(A, random_unimodular(n, rng), random_unimodular(m, rng))
    assert invariant_fingerprint(B) == invariant_fingerprint(A)
    assert is_lie(B) == is_lie(A)


def test_integer_paths_match_generic_paths(small_corpus, monkeypatch):
    import superleib.invariants as inv

    entries = [e.algebra for e in small_corpus if e.algebra.n]
    fast = [inv.char_sequence(A) for A in entries]
    monkeypatch.setattr(inv, "_rational_profiler", lambda A: None)
    monkeypatch.setattr(inv, "_rational_square_test", lambda A: None)
    assert [inv.char_sequence(A) for A in entries] == fast
