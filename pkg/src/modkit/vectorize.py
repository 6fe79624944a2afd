"""TF-IDF featurization for the classical classifiers.

Weighting is raw term frequency times smoothed inverse document
frequency, idf(t) = ln((1 + N) / (1 + df(t))) + 1, followed by L2
normalization. The smoothing keeps idf >= 1, so downstream multinomial
models never see negative feature mass.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import EmptyCorpusError, SchemaViolationError
from .textprep import TokenStream


@dataclass(frozen=True)
class SparseVector:
    """L2-normalized sparse feature vector with strictly increasing
    indices and no explicit zeros."""

    entries: tuple[tuple[int, float], ...]

    def __post_init__(self):
        last = -1
        for index, weight in self.entries:
            if index <= last:
                raise ValueError("indices must be strictly increasing")
            if weight == 0.0:
                raise ValueError("zero weights must be omitted")
            last = index

    def norm(self) -> float:
        return math.sqrt(sum(w * w for _, w in self.entries))

    def to_dense(self, size: int) -> np.ndarray:
        dense = np.zeros(size)
        for index, weight in self.entries:
            if index < size:
                dense[index] = weight
        return dense


@dataclass(frozen=True)
class TfidfModel:
    vocabulary: dict[str, int]  # term -> column, assigned in first-seen order
    idf: np.ndarray
    doc_count: int

    @property
    def vocab_size(self) -> int:
        return len(self.vocabulary)


def fit(corpus: Sequence[TokenStream]) -> TfidfModel:
    """Learn vocabulary (first-appearance order) and smoothed idf."""
    if len(corpus) == 0:
        raise EmptyCorpusError("cannot fit TF-IDF on an empty corpus")
    vocabulary: dict[str, int] = {}
    df: Counter[str] = Counter()
    for stream in corpus:
        seen: set[str] = set()
        for token in stream.tokens:
            if token not in vocabulary:
                vocabulary[token] = len(vocabulary)
            if token not in seen:
                seen.add(token)
                df[token] += 1
    n = len(corpus)
    idf = np.empty(len(vocabulary))
    for term, index in vocabulary.items():
        idf[index] = math.log((1 + n) / (1 + df[term])) + 1.0
    return TfidfModel(vocabulary=vocabulary, idf=idf, doc_count=n)


def transform(model: TfidfModel, stream: TokenStream) -> SparseVector:
    """Raw tf x idf, L2-normalized; out-of-vocabulary tokens ignored."""
    counts: Counter[int] = Counter()
    for token in stream.tokens:
        index = model.vocabulary.get(token)
        if index is not None:
            counts[index] += 1
    if not counts:
        return SparseVector(entries=())
    indices = sorted(counts)
    weights = np.array([counts[i] * model.idf[i] for i in indices])
    weights /= np.linalg.norm(weights)
    return SparseVector(entries=tuple(zip(indices, weights.tolist())))


def transform_all(model: TfidfModel, corpus: Sequence[TokenStream]) -> list[SparseVector]:
    return [transform(model, stream) for stream in corpus]


def to_matrix(vectors: Sequence[SparseVector], vocab_size: int) -> np.ndarray:
    """Stack sparse vectors into a dense (n_docs, vocab_size) array."""
    matrix = np.zeros((len(vectors), vocab_size))
    for row, vector in enumerate(vectors):
        for index, weight in vector.entries:
            if index < vocab_size:
                matrix[row, index] = weight
    return matrix


def save_tfidf(model: TfidfModel, path: str | Path) -> None:
    obj = {
        "doc_count": model.doc_count,
        "terms": [
            {"term": term, "index": index, "idf": model.idf[index]}
            for term, index in model.vocabulary.items()
        ],
    }
    Path(path).write_text(json.dumps(obj, ensure_ascii=False, indent=2), encoding="utf-8")


def load_tfidf(path: str | Path) -> TfidfModel:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    for key in ("doc_count", "terms"):
        if key not in obj:
            raise SchemaViolationError(f"missing {key!r} in TF-IDF model", str(path))
    vocabulary: dict[str, int] = {}
    idf = np.empty(len(obj["terms"]))
    for item in sorted(obj["terms"], key=lambda t: t["index"]):
        vocabulary[item["term"]] = item["index"]
        idf[item["index"]] = item["idf"]
    return TfidfModel(vocabulary=vocabulary, idf=idf, doc_count=obj["doc_count"])
