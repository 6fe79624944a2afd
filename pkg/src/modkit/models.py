"""Binary classifiers over TF-IDF features.

Multinomial Naive Bayes treats TF-IDF weights as fractional event
counts (per-class feature mass) with Laplace smoothing; Logistic
Regression is full-batch gradient descent on L2-regularized mean
cross-entropy. Both are deterministic given their inputs, which keeps
whole training runs byte-reproducible.

:func:`run_cycles` reproduces the multi-cycle protocol: every cycle
re-splits the dataset 80/10/10 with a fresh seed, trains, scores the
validation fold, and the best cycle by validation F1 supplies the
reported test metrics.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Sequence

import numpy as np

from .corpus import LabeledDataset, Label, split
from .errors import (
    BadAlphaError,
    ConfigError,
    NonFiniteLossError,
    SchemaViolationError,
    SingleClassError,
)
from .evaluate import MetricsReport, confusion, metrics
from .textprep import PreprocessConfig, StopList, TokenStream, run_pipeline
from .vectorize import SparseVector, TfidfModel, fit, to_matrix, transform

# Class index convention: column 0 = NOT_OFFENSIVE, column 1 = OFFENSIVE.
_NOT, _OFF = 0, 1


def _as_label_array(y: Sequence[Label]) -> np.ndarray:
    return np.array([1 if label is Label.OFFENSIVE else 0 for label in y])


def _infer_vocab_size(X: Sequence[SparseVector]) -> int:
    top = -1
    for vector in X:
        if vector.entries:
            top = max(top, vector.entries[-1][0])
    return top + 1


@dataclass(frozen=True)
class NBModel:
    log_prior: np.ndarray  # shape (2,)
    log_likelihood: np.ndarray  # shape (2, vocab_size)
    alpha: float
    vocab_size: int


def train_nb(
    X: Sequence[SparseVector],
    y: Sequence[Label],
    alpha: float = 1.0,
    vocab_size: int | None = None,
) -> NBModel:
    """Multinomial NB over per-class feature mass.

    mass(t, c) sums the weight of term t across class-c documents;
    log P(t|c) = ln((mass(t,c) + alpha) / (mass(., c) + alpha * V)).
    Priors are class document fractions.
    """
    if alpha <= 0:
        raise BadAlphaError(f"alpha must be > 0, got {alpha}")
    if len(X) != len(y):
        raise ValueError("X and y must have equal length")
    if len(X) == 0:
        raise SingleClassError("training set is empty")
    labels = _as_label_array(y)
    if labels.min() == labels.max():
        raise SingleClassError("both classes must be present in the training set")
    if vocab_size is None:
        vocab_size = _infer_vocab_size(X)
    mass = np.zeros((2, vocab_size))
    for vector, cls in zip(X, labels):
        for index, weight in vector.entries:
            mass[cls, index] += weight
    class_counts = np.array([(labels == 0).sum(), (labels == 1).sum()])
    log_prior = np.log(class_counts / len(X))
    totals = mass.sum(axis=1, keepdims=True)
    log_likelihood = np.log(mass + alpha) - np.log(totals + alpha * vocab_size)
    return NBModel(
        log_prior=log_prior,
        log_likelihood=log_likelihood,
        alpha=alpha,
        vocab_size=vocab_size,
    )


def nb_log_joint(model: NBModel, x: SparseVector) -> np.ndarray:
    """log prior + sum_t x_t * log P(t|c); out-of-range indices ignored."""
    scores = model.log_prior.copy()
    for index, weight in x.entries:
        if index < model.vocab_size:
            scores += weight * model.log_likelihood[:, index]
    return scores


def predict_nb(model: NBModel, x: SparseVector) -> tuple[Label, float]:
    """Argmax class and its posterior (log-sum-exp stabilized).

    Exact ties go to NOT_OFFENSIVE, the conservative moderation default.
    """
    scores = nb_log_joint(model, x)
    shifted = scores - scores.max()
    posterior = np.exp(shifted) / np.exp(shifted).sum()
    if scores[_OFF] > scores[_NOT]:
        return Label.OFFENSIVE, float(posterior[_OFF])
    return Label.NOT_OFFENSIVE, float(posterior[_NOT])


@dataclass(frozen=True)
class LRModel:
    weights: np.ndarray
    bias: float
    l2: float
    learning_rate: float
    epochs: int
    loss_history: tuple[float, ...] = field(default=(), repr=False, compare=False)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    # two-branch form never exponentiates a positive argument
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def lr_loss(
    weights: np.ndarray,
    bias: float,
    X: np.ndarray,
    y: np.ndarray,
    l2: float,
) -> float:
    """Mean cross-entropy + (l2/2)*||w||^2, numerically stable.

    The bias is not regularized.
    """
    z = X @ weights + bias
    # log(1 + e^z) - y*z  ==  -[y log p + (1-y) log(1-p)]
    per_example = np.logaddexp(0.0, z) - y * z
    return float(per_example.mean() + 0.5 * l2 * (weights @ weights))


def lr_gradients(
    weights: np.ndarray,
    bias: float,
    X: np.ndarray,
    y: np.ndarray,
    l2: float,
) -> tuple[np.ndarray, float]:
    p = _sigmoid(X @ weights + bias)
    grad_w = X.T @ (p - y) / len(y) + l2 * weights
    grad_b = float((p - y).mean())
    return grad_w, grad_b


def train_lr(
    X: Sequence[SparseVector],
    y: Sequence[Label],
    learning_rate: float = 0.1,
    epochs: int = 500,
    l2: float = 1e-4,
    seed: int = 0,
    vocab_size: int | None = None,
) -> LRModel:
    """Full-batch gradient descent from zero-initialized weights.

    ``seed`` is accepted for interface stability but unused: zero
    initialization plus full batches make training deterministic.
    """
    del seed
    if len(X) != len(y):
        raise ValueError("X and y must have equal length")
    if len(X) == 0:
        raise SingleClassError("training set is empty")
    labels = _as_label_array(y).astype(float)
    if labels.min() == labels.max():
        raise SingleClassError("both classes must be present in the training set")
    if learning_rate <= 0 or epochs < 1 or l2 < 0:
        raise ConfigError("learning_rate must be > 0, epochs >= 1, l2 >= 0")
    if vocab_size is None:
        vocab_size = _infer_vocab_size(X)
    matrix = to_matrix(X, vocab_size)
    weights = np.zeros(vocab_size)
    bias = 0.0
    # divergence is detected via the finiteness check, so numpy's own
    # overflow warnings on that path are just noise
    with np.errstate(over="ignore", invalid="ignore"):
        history = [lr_loss(weights, bias, matrix, labels, l2)]
        for _ in range(epochs):
            grad_w, grad_b = lr_gradients(weights, bias, matrix, labels, l2)
            weights -= learning_rate * grad_w
            bias -= learning_rate * grad_b
            loss = lr_loss(weights, bias, matrix, labels, l2)
            if not math.isfinite(loss):
                raise NonFiniteLossError(
                    "training loss diverged; lower the learning rate"
                )
            history.append(loss)
    return LRModel(
        weights=weights,
        bias=bias,
        l2=l2,
        learning_rate=learning_rate,
        epochs=epochs,
        loss_history=tuple(history),
    )


def predict_lr(model: LRModel, x: SparseVector) -> tuple[Label, float]:
    """Probability sigmoid(w.x + b); OFFENSIVE iff probability >= 0.5."""
    z = model.bias
    for index, weight in x.entries:
        if index < len(model.weights):
            z += weight * model.weights[index]
    if z >= 0:
        probability = 1.0 / (1.0 + math.exp(-z))
    else:
        ez = math.exp(z)
        probability = ez / (1.0 + ez)
    label = Label.OFFENSIVE if probability >= 0.5 else Label.NOT_OFFENSIVE
    return label, probability


# ---------------------------------------------------------------------------
# Training cycles


@dataclass(frozen=True)
class CycleConfig:
    """One experiment variant: model choice plus preprocessing."""

    model: Literal["nb", "lr"] = "nb"
    preprocess: PreprocessConfig = PreprocessConfig()
    alpha: float = 1.0
    learning_rate: float = 0.1
    epochs: int = 500
    l2: float = 1e-4
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1)
    variant_name: str = ""
    stoplist: StopList | None = None


@dataclass(frozen=True)
class CycleResult:
    seed: int
    validation: MetricsReport
    test: MetricsReport


@dataclass(frozen=True)
class TrainReport:
    cycles: tuple[CycleResult, ...]
    best_cycle_index: int
    variant_name: str = ""

    @property
    def best(self) -> CycleResult:
        return self.cycles[self.best_cycle_index]


@dataclass(frozen=True)
class TrainedArtifacts:
    """Fitted featurizer and model from the best cycle."""

    tfidf: TfidfModel
    model: NBModel | LRModel
    report: TrainReport


def _preprocess_all(dataset: LabeledDataset, config: CycleConfig) -> list[TokenStream]:
    return [
        run_pipeline(text, config.preprocess, stoplist=config.stoplist, source_id=cid)
        for cid, text, _ in dataset.entries
    ]


def _train_one(
    train_set: LabeledDataset,
    config: CycleConfig,
) -> tuple[TfidfModel, NBModel | LRModel]:
    streams = _preprocess_all(train_set, config)
    tfidf = fit(streams)
    X = [transform(tfidf, s) for s in streams]
    y = train_set.labels()
    if config.model == "nb":
        model: NBModel | LRModel = train_nb(X, y, alpha=config.alpha, vocab_size=tfidf.vocab_size)
    elif config.model == "lr":
        model = train_lr(
            X,
            y,
            learning_rate=config.learning_rate,
            epochs=config.epochs,
            l2=config.l2,
            vocab_size=tfidf.vocab_size,
        )
    else:
        raise ConfigError(f"unknown model kind {config.model!r}")
    return tfidf, model


def evaluate_on(
    tfidf: TfidfModel,
    model: NBModel | LRModel,
    dataset: LabeledDataset,
    config: CycleConfig,
    variant_name: str = "",
) -> MetricsReport:
    streams = _preprocess_all(dataset, config)
    predict = predict_nb if isinstance(model, NBModel) else predict_lr
    y_pred = [predict(model, transform(tfidf, s))[0] for s in streams]
    return metrics(confusion(dataset.labels(), y_pred), variant_name=variant_name)


def run_cycles(
    dataset: LabeledDataset,
    config: CycleConfig,
    n_cycles: int = 1,
    base_seed: int = 0,
) -> TrainedArtifacts:
    """Repeat split/train/validate; keep the best cycle's artifacts.

    Cycle i splits with seed base_seed + i. Best = highest validation
    F1, ties broken by higher validation accuracy, then lower index.
    Test metrics are computed for every cycle but only the best cycle's
    are authoritative.
    """
    if n_cycles < 1:
        raise ConfigError(f"n_cycles must be >= 1, got {n_cycles}")
    results: list[CycleResult] = []
    artifacts: list[tuple[TfidfModel, NBModel | LRModel]] = []
    name = config.variant_name or default_variant_name(config)
    for i in range(n_cycles):
        seed = base_seed + i
        train_set, val_set, test_set = split(dataset, config.ratios, seed)
        tfidf, model = _train_one(train_set, config)
        val_report = evaluate_on(tfidf, model, val_set, config, variant_name=name)
        test_report = evaluate_on(tfidf, model, test_set, config, variant_name=name)
        results.append(CycleResult(seed=seed, validation=val_report, test=test_report))
        artifacts.append((tfidf, model))
    best = select_best_cycle(results)
    report = TrainReport(cycles=tuple(results), best_cycle_index=best, variant_name=name)
    tfidf, model = artifacts[best]
    return TrainedArtifacts(tfidf=tfidf, model=model, report=report)


def select_best_cycle(results: Sequence[CycleResult]) -> int:
    """Highest validation F1; ties by validation accuracy, then the
    earliest cycle."""
    return max(
        range(len(results)),
        key=lambda i: (results[i].validation.f1, results[i].validation.accuracy, -i),
    )


def default_variant_name(config: CycleConfig) -> str:
    from .textprep import Step

    base = "Naive Bayes" if config.model == "nb" else "Logistic Regression"
    suffix = "Emojis" if Step.EMOJI_ENCODING in config.preprocess.steps else "Default"
    return f"{base} {suffix}"


# ---------------------------------------------------------------------------
# Persistence


def save_model(model: NBModel | LRModel, path: str | Path) -> None:
    if isinstance(model, NBModel):
        obj = {
            "kind": "nb",
            "alpha": model.alpha,
            "vocab_size": model.vocab_size,
            "log_prior": {
                "offensive": float(model.log_prior[_OFF]),
                "not_offensive": float(model.log_prior[_NOT]),
            },
            "terms": [
                {
                    "index": i,
                    "log_likelihood_off": float(model.log_likelihood[_OFF, i]),
                    "log_likelihood_not": float(model.log_likelihood[_NOT, i]),
                }
                for i in range(model.vocab_size)
            ],
        }
    else:
        obj = {
            "kind": "lr",
            "bias": model.bias,
            "weights": model.weights.tolist(),
            "hyperparams": {
                "learning_rate": model.learning_rate,
                "epochs": model.epochs,
                "l2": model.l2,
            },
        }
    Path(path).write_text(json.dumps(obj, indent=2), encoding="utf-8")


def load_model(path: str | Path) -> NBModel | LRModel:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    kind = obj.get("kind")
    if kind == "nb":
        vocab_size = obj["vocab_size"]
        log_likelihood = np.zeros((2, vocab_size))
        for item in obj["terms"]:
            log_likelihood[_OFF, item["index"]] = item["log_likelihood_off"]
            log_likelihood[_NOT, item["index"]] = item["log_likelihood_not"]
        log_prior = np.zeros(2)
        log_prior[_OFF] = obj["log_prior"]["offensive"]
        log_prior[_NOT] = obj["log_prior"]["not_offensive"]
        return NBModel(
            log_prior=log_prior,
            log_likelihood=log_likelihood,
            alpha=obj["alpha"],
            vocab_size=vocab_size,
        )
    if kind == "lr":
        hyper = obj.get("hyperparams", {})
        return LRModel(
            weights=np.array(obj["weights"]),
            bias=obj["bias"],
            l2=hyper.get("l2", 0.0),
            learning_rate=hyper.get("learning_rate", 0.1),
            epochs=hyper.get("epochs", 0),
        )
    raise SchemaViolationError(f"unknown model kind {kind!r}", str(path))
