"""The verification corpus: catalog instances plus isomorphic copies.

Each entry carries its provenance so any report line can be traced back
to a catalog spec, a file, or a seeded basis change of another entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .catalog import (
    FamilyError,
    FamilySpec,
    SuperidentityError,
    classified_list,
    make_family,
    random_family_params,
)
from .core import SuperAlgebra, change_basis, direct_sum
from .scalars import Scalar


@dataclass(frozen=True)
class CorpusConfig:
    max_n: int = 6
    param_samples: int = 2
    mutations: int = 20
    seed: int = 0
    list_max_n: int = 4  # classified-list entries are included up to this n
    direct_sums: bool = True

    @classmethod
    def from_mapping(cls, data: Mapping) -> "CorpusConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown corpus config keys: {', '.join(sorted(unknown))}")
        return cls(**dict(data))

    def to_json(self) -> dict:
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    algebra: SuperAlgebra
    provenance: dict

    @property
    def family(self) -> str | None:
        return self.provenance.get("family")


@dataclass
class Corpus:
    entries: list[CorpusEntry] = field(default_factory=list)
    rejected: list[dict] = field(default_factory=list)  # sampled specs that fail the identity
    config: CorpusConfig | None = None
    _labels: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for e in self.entries:
            if e.label in self._labels:
                raise ValueError(f"duplicate corpus label {e.label!r}")
            self._labels[e.label] = e

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self.entries)

    def add(self, label: str, A: SuperAlgebra, provenance: dict) -> CorpusEntry:
        if label in self._labels:
            raise ValueError(f"duplicate corpus label {label!r}")
        entry = CorpusEntry(label, A, provenance)
        self.entries.append(entry)
        self._labels[label] = entry
        return entry

    def originals(self) -> list[CorpusEntry]:
        return [e for e in self.entries if e.provenance.get("kind") != "basis-change"]

    def get(self, label: str) -> CorpusEntry:
        return self._labels[label]


# -- basis changes ------------------------------------------------------------------


def random_invertible(size: int, rng: random.Random) -> list[list[int]]:
    """L * D * U with unit triangular L, U (entries in [-2, 2]) and D = diag(+-1, +-2)."""
    L = [[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(size)] for i in range(size)]
    U = [[1 if i == j else (rng.randint(-2, 2) if i < j else 0) for j in range(size)] for i in range(size)]
    D = [rng.choice((1, -1, 2, -2)) for _ in range(size)]
    return [[sum(L[i][t] * D[t] * U[t][j] for t in range(size)) for j in range(size)] for i in range(size)]


def random_basis_change(A: SuperAlgebra, seed: int) -> tuple[SuperAlgebra, tuple]:
    """An isomorphic copy in a seeded random homogeneous basis; returns (copy, (P_even, P_odd))."""
    rng = random.Random(seed)
    pe = random_invertible(A.n, rng)
    po = random_invertible(A.m, rng)
    return change_basis(A, pe, po), (pe, po)


# -- construction ----------------------------------------------------------------------


def _thm21_dims(max_n: int):
    for n in range(1, max_n + 1):
        yield "Thm21-even", n, 0
    for n in range(1, max_n + 1):
        for m in (n, n + 1):
            yield "Thm21-mixed", n, m


def _small_family_dims(max_n: int):
    for m in range(1, max_n):
        yield "Leib1m", 1, m
    yield "Leib22-a", 2, 2
    yield "Leib22-b", 2, 2
    for m in range(3, max_n + 1, 2):
        yield "Leib2m-a", 2, m
        yield "Leib2m-b", 2, m


def _format_params(params: Mapping[str, Scalar]) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def build_corpus(config: CorpusConfig | None = None) -> Corpus:
    """Catalog families with sampled parameters, classified-list entries and their copies.

    H instances are sampled with gamma = 0: for gamma != 0 the H table leaves
    a nonzero residual (see ``catalog.TABLE_READINGS``).  Sampled specs that
    fail the identity are kept in ``Corpus.rejected`` rather than dropped
    silently.
    """
    config = config or CorpusConfig()
    corpus = Corpus(config=config)

    def add_spec(label, spec: FamilySpec, extra=None):
        try:
            A = make_family(spec)
        except SuperidentityError as exc:
            corpus.rejected.append({"label": label, "reason": str(exc)})
            return
        prov = {"kind": "catalog", "family": spec.name, "n": spec.n, "m": spec.m}
        prov["params"] = {k: str(v) for k, v in A.metadata.get("params", {}).items()}
        prov.update(extra or {})
        corpus.add(label, A, prov)

    for name, n, m in _thm21_dims(config.max_n):
        add_spec(f"{name}(n={n},m={m})", FamilySpec(name, n, m, {}))
    for name, n, m in _small_family_dims(config.max_n):
        add_spec(f"{name}(n={n},m={m})", FamilySpec(name, n, m, {}))
    for n in range(2, config.max_n + 1):
        for alpha in (0, 1):
            add_spec(f"Leibn1(n={n},alpha={alpha})", FamilySpec("Leibn1", n, 1, {"alpha": alpha}))

    for name, shift in (("L", -1), ("G", -1), ("M", 0), ("H", 0)):
        for n in range(3, config.max_n + 1):
            m = n + shift
            for k in range(config.param_samples):
                seed = config.seed * 1000 + 17 * n + k
                params = random_family_params(name, n, m, seed)
                if name == "H":
                    params["gamma"] = Scalar.rational(0)
                spec = FamilySpec(name, n, m, params)
                add_spec(f"{name}(n={n},sample={k})", spec, {"param_seed": seed})

    for n in range(3, config.list_max_n + 1):
        for m in (n - 1, n):
            for e in classified_list(n, m, seed=config.seed):
                label = f"list:{e.label}(n={n})"
                if not e.valid:
                    corpus.rejected.append({"label": label, "reason": f"{e.violations} residual triples"})
                    continue
                params = {k: str(v) for k, v in e.algebra.metadata.get("params", {}).items()}
                prov = {"kind": "classified-list", "family": e.spec.name, "n": n, "m": m, "params": params}
                corpus.add(label, e.algebra, prov)

    if config.direct_sums:
        for label, A, parts in _direct_sums():
            corpus.add(label, A, {"kind": "direct-sum", "parts": parts, "n": A.n, "m": A.m})

    for entry in list(corpus.entries):
        for k in range(config.mutations):
            seed = _copy_seed(config.seed, entry.label, k)
            B, _ = random_basis_change(entry.algebra, seed)
            prov = {"kind": "basis-change", "parent": entry.label, "seed": seed}
            if entry.family:
                prov["family"] = entry.family
            prov["n"], prov["m"] = B.n, B.m
            corpus.add(f"{entry.label}~{k}", B, prov)
    return corpus


def _copy_seed(seed: int, label: str, k: int) -> int:
    # stable across runs (str hash is salted per process, so avoid hash())
    h = 0
    for ch in label:
        h = (h * 131 + ord(ch)) % 1_000_003
    return seed * 10_000_019 + h * 101 + k


def _direct_sums():
    """Decomposable algebras whose even parts are not filiform (nilindex below the dimension)."""
    pairs = [
        (("Thm21-even", 2, 0, {}), ("Thm21-even", 2, 0, {})),
        (("Thm21-even", 3, 0, {}), ("Thm21-even", 2, 0, {})),
        (("Thm21-even", 3, 0, {}), ("Thm21-even", 3, 0, {})),
        (("Leibn1", 2, 1, {"alpha": 1}), ("Thm21-even", 3, 0, {})),
        (("Leib22-a", 2, 2, {}), ("Thm21-even", 2, 0, {})),
        (("Thm21-mixed", 1, 1, {}), ("Thm21-even", 4, 0, {})),
    ]
    for a, b in pairs:
        A, B = make_family(FamilySpec(*a)), make_family(FamilySpec(*b))
        la = f"{a[0]}(n={a[1]},m={a[2]})"
        lb = f"{b[0]}(n={b[1]},m={b[2]})"
        if a[3]:
            la = la[:-1] + "," + _format_params(a[3]) + ")"
        yield f"sum:{la}+{lb}", direct_sum(A, B), [la, lb]


__all__ = [
    "Corpus",
    "CorpusConfig",
    "CorpusEntry",
    "FamilyError",
    "build_corpus",
    "random_basis_change",
    "random_invertible",
]
