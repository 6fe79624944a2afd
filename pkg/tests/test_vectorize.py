"""TF-IDF fitting and transformation."""

from __future__ import annotations

import math
import random

import pytest

from modkit.errors import EmptyCorpusError
from modkit.textprep import TokenStream
from modkit.vectorize import SparseVector, fit, load_tfidf, save_tfidf, to_matrix, transform


def stream(*tokens: str) -> TokenStream:
    return TokenStream(tuple(tokens))


CORPUS = [stream("a", "b"), stream("a", "c")]


class TestFit:
    def test_smoothed_idf_values(self):
        model = fit(CORPUS)
        assert model.idf[model.vocabulary["a"]] == pytest.approx(1.0)
        assert model.idf[model.vocabulary["b"]] == pytest.approx(math.log(3 / 2) + 1, abs=1e-12)

    def test_term_in_every_doc_has_idf_one(self):
        model = fit([stream("x", "y"), stream("x"), stream("x", "z")])
        assert model.idf[model.vocabulary["x"]] == 1.0

    def test_single_doc_corpus_all_ones(self):
        model = fit([stream("p", "q", "r")])
        assert all(value == 1.0 for value in model.idf)

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpusError):
            fit([])

    def test_vocabulary_first_seen_order(self):
        model = fit([stream("b", "a"), stream("c", "a")])
        assert model.vocabulary == {"b": 0, "a": 1, "c": 2}

    def test_idf_at_least_one(self):
        rng = random.Random(17)
        corpus = [
            stream(*(rng.choice("abcdef") for _ in range(rng.randint(1, 10))))
            for _ in range(30)
        ]
        model = fit(corpus)
        assert all(value >= 1.0 for value in model.idf)


class TestTransform:
    def test_weights_match_hand_arithmetic(self):
        model = fit(CORPUS)
        vector = transform(model, stream("a", "b"))
        idf_b = math.log(3 / 2) + 1
        norm = math.sqrt(1.0 + idf_b**2)
        expected = {
            model.vocabulary["a"]: 1.0 / norm,
            model.vocabulary["b"]: idf_b / norm,
        }
        assert dict(vector.entries) == pytest.approx(expected, abs=1e-12)
        # frozen from the formula: 1/1.7249219 and 1.4054651/1.7249219
        assert vector.entries[0][1] == pytest.approx(0.57974, abs=5e-6)
        assert vector.entries[1][1] == pytest.approx(0.81480, abs=5e-6)

    def test_only_oov_gives_empty_vector(self):
        model = fit(CORPUS)
        assert transform(model, stream("zzz", "qqq")).entries == ()

    def test_repeated_token_normalizes_to_one(self):
        model = fit([stream("a")])
        vector = transform(model, stream("a", "a"))
        assert vector.entries == ((0, 1.0),)

    def test_unit_norm(self):
        rng = random.Random(23)
        corpus = [
            stream(*(rng.choice("abcdefgh") for _ in range(rng.randint(1, 12))))
            for _ in range(40)
        ]
        model = fit(corpus)
        for doc in corpus:
            vector = transform(model, doc)
            if vector.entries:
                assert abs(vector.norm() - 1.0) < 1e-9

    def test_token_order_invariant(self):
        model = fit(CORPUS)
        tokens = ["a", "b", "a", "c"]
        forward = transform(model, stream(*tokens))
        backward = transform(model, stream(*reversed(tokens)))
        assert forward == backward

    def test_support_within_vocabulary(self):
        model = fit(CORPUS)
        for doc in CORPUS:
            vector = transform(model, doc)
            assert all(index < model.vocab_size for index, _ in vector.entries)

    def test_doubling_tokens_changes_nothing(self):
        model = fit(CORPUS)
        for doc in CORPUS:
            once = transform(model, doc)
            doubled = transform(model, stream(*(doc.tokens + doc.tokens)))
            for (i1, w1), (i2, w2) in zip(once.entries, doubled.entries):
                assert i1 == i2
                assert abs(w1 - w2) < 1e-9


class TestSparseVector:
    def test_rejects_unsorted_indices(self):
        with pytest.raises(ValueError):
            SparseVector(entries=((2, 0.5), (1, 0.5)))

    def test_rejects_zero_weights(self):
        with pytest.raises(ValueError):
            SparseVector(entries=((0, 0.0),))

    def test_to_matrix(self):
        matrix = to_matrix([SparseVector(((0, 1.0),)), SparseVector(((1, 0.5),))], 2)
        assert matrix.tolist() == [[1.0, 0.0], [0.0, 0.5]]


class TestPersistence:
    def test_round_trip(self, tmp_path):
        model = fit(CORPUS)
        path = tmp_path / "tfidf.json"
        save_tfidf(model, path)
        loaded = load_tfidf(path)
        assert loaded.vocabulary == model.vocabulary
        assert loaded.doc_count == model.doc_count
        assert loaded.idf.tolist() == model.idf.tolist()
        original = transform(model, stream("a", "b"))
        assert transform(loaded, stream("a", "b")) == original
