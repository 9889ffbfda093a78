import pytest

from superleib.core import check_superidentity
from superleib.corpus import Corpus, CorpusConfig, build_corpus, random_basis_change
from superleib.invariants import invariant_fingerprint


def test_default_config_size():
    corpus = build_corpus(CorpusConfig(mutations=0))
    assert len(corpus) >= 40
    assert len({e.label for e in corpus}) == len(corpus)


def test_every_entry_is_leibniz(small_corpus):
    for entry in small_corpus:
        assert check_superidentity(entry.algebra) == [], entry.label


def test_copies_share_parent_fingerprints(small_corpus):
    fp = {e.label: invariant_fingerprint(e.algebra) for e in small_corpus.originals()}
    for entry in small_corpus:
        if entry.provenance["kind"] == "basis-change":
            assert invariant_fingerprint(entry.algebra) == fp[entry.provenance["parent"]], entry.label


def test_mutation_count_and_provenance(small_corpus):
    originals = small_corpus.originals()
    assert len(small_corpus) == 3 * len(originals)
    copy = small_corpus.get(originals[0].label + "~1")
    assert copy.provenance["parent"] == originals[0].label
    assert isinstance(copy.provenance["seed"], int)


def test_build_is_deterministic():
    cfg = CorpusConfig(max_n=3, mutations=2, list_max_n=3)
    a, b = build_corpus(cfg), build_corpus(cfg)
    assert [e.label for e in a] == [e.label for e in b]
    assert all(x.algebra == y.algebra for x, y in zip(a, b))


def test_rejected_specs_are_reported():
    corpus = build_corpus(CorpusConfig(max_n=4, mutations=0))
    assert corpus.rejected
    assert all(r["label"].startswith("list:H(") for r in corpus.rejected)


def test_duplicate_labels_rejected(small_corpus):
    c = Corpus()
    A = small_corpus.entries[0].algebra
    c.add("a", A, {})
    with pytest.raises(ValueError):
        c.add("a", A, {})


def test_config_mapping():
    assert CorpusConfig.from_mapping({"max_n": 3}).max_n == 3
    with pytest.raises(ValueError):
        CorpusConfig.from_mapping({"depth": 3})


def test_random_basis_change_is_seeded(small_corpus):
    A = small_corpus.entries[5].algebra
    assert random_basis_change(A, 4)[0] == random_basis_change(A, 4)[0]
