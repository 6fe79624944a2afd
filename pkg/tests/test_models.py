"""Naive Bayes, Logistic Regression and the training-cycle protocol."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from modkit.corpus import Label, LabeledDataset
from modkit.errors import BadAlphaError, NonFiniteLossError, SingleClassError
from modkit.models import (
    CycleConfig,
    CycleResult,
    LRModel,
    NBModel,
    load_model,
    lr_gradients,
    lr_loss,
    nb_log_joint,
    predict_lr,
    predict_nb,
    run_cycles,
    save_model,
    select_best_cycle,
    train_lr,
    train_nb,
)
from modkit.evaluate import ConfusionMatrix, metrics
from modkit.textprep import PreprocessConfig, Step
from modkit.vectorize import SparseVector

from _oracles import central_difference_gradient, nb_log_joint_oracle

OFF, NOT = Label.OFFENSIVE, Label.NOT_OFFENSIVE


def sparse(mapping: dict[int, float]) -> SparseVector:
    return SparseVector(entries=tuple(sorted(mapping.items())))


# "bad bad" -> offensive, "good" -> not offensive, raw counts as weights
BAD_GOOD_X = [sparse({0: 2.0}), sparse({1: 1.0})]
BAD_GOOD_Y = [OFF, NOT]


class TestTrainNB:
    def test_counting_example(self):
        model = train_nb(BAD_GOOD_X, BAD_GOOD_Y, alpha=1.0, vocab_size=2)
        off, not_ = 1, 0
        assert math.exp(model.log_likelihood[off, 0]) == pytest.approx(0.75)
        assert math.exp(model.log_likelihood[off, 1]) == pytest.approx(0.25)
        assert math.exp(model.log_likelihood[not_, 0]) == pytest.approx(1 / 3)
        assert np.exp(model.log_prior).tolist() == pytest.approx([0.5, 0.5])

    def test_disjoint_vocab_separates(self):
        model = train_nb(BAD_GOOD_X, BAD_GOOD_Y)
        assert predict_nb(model, sparse({0: 1.0}))[0] is OFF
        assert predict_nb(model, sparse({1: 1.0}))[0] is NOT

    def test_zero_alpha_rejected(self):
        with pytest.raises(BadAlphaError):
            train_nb(BAD_GOOD_X, BAD_GOOD_Y, alpha=0.0)

    def test_single_class_rejected(self):
        with pytest.raises(SingleClassError):
            train_nb(BAD_GOOD_X, [OFF, OFF])

    def test_likelihoods_normalize_per_class(self):
        rng = random.Random(5)
        for _ in range(20):
            n_docs, n_terms = rng.randint(2, 8), rng.randint(1, 6)
            X = []
            for _ in range(n_docs):
                weights = {t: float(rng.randint(0, 3)) for t in range(n_terms)}
                X.append(sparse({t: w for t, w in weights.items() if w}))
            y = [OFF if i % 2 else NOT for i in range(n_docs)]
            model = train_nb(X, y, alpha=rng.choice([0.5, 1.0, 2.0]), vocab_size=n_terms)
            sums = np.exp(model.log_likelihood).sum(axis=1)
            assert sums == pytest.approx([1.0, 1.0], abs=1e-9)


class TestPredictNB:
    def test_joint_scores_match_hand_arithmetic(self):
        model = train_nb(BAD_GOOD_X, BAD_GOOD_Y, alpha=1.0, vocab_size=2)
        label, _posterior = predict_nb(model, sparse({0: 1.0}))
        joints = np.exp(nb_log_joint(model, sparse({0: 1.0})))
        assert joints[1] == pytest.approx(0.375)
        assert joints[0] == pytest.approx(1 / 6)
        assert label is OFF

    def test_empty_vector_uses_priors(self):
        X = [sparse({0: 1.0}), sparse({1: 1.0}), sparse({1: 2.0})]
        model = train_nb(X, [OFF, NOT, NOT])
        label, posterior = predict_nb(model, sparse({}))
        assert label is NOT
        assert posterior == pytest.approx(2 / 3)

    def test_exact_tie_goes_to_not_offensive(self):
        model = train_nb(
            [sparse({0: 1.0}), sparse({1: 1.0})], [OFF, NOT], alpha=1.0, vocab_size=2
        )
        label, posterior = predict_nb(model, sparse({}))
        assert label is NOT
        assert posterior == pytest.approx(0.5)

    def test_matches_counting_oracle(self):
        rng = random.Random(11)
        for _ in range(50):
            n_docs, n_terms = rng.randint(2, 4), rng.randint(1, 5)
            docs = [
                {t: rng.randint(0, 3) for t in range(n_terms)} for _ in range(n_docs)
            ]
            docs = [{t: w for t, w in d.items() if w} for d in docs]
            labels = [rng.randint(0, 1) for _ in range(n_docs)]
            if len(set(labels)) < 2:
                labels[0] = 1 - labels[1]
            X = [sparse({k: float(v) for k, v in d.items()}) for d in docs]
            y = [OFF if v else NOT for v in labels]
            model = train_nb(X, y, alpha=1.0, vocab_size=n_terms)
            probe = {t: rng.randint(0, 2) for t in range(n_terms)}
            probe = {t: w for t, w in probe.items() if w}
            expected_not, expected_off = nb_log_joint_oracle(
                docs, labels, 1.0, n_terms, probe
            )
            got = nb_log_joint(model, sparse({k: float(v) for k, v in probe.items()}))
            assert got[0] == pytest.approx(expected_not, abs=1e-9)
            assert got[1] == pytest.approx(expected_off, abs=1e-9)

    def test_scaling_features_keeps_argmax(self):
        rng = random.Random(13)
        X = [
            sparse({t: rng.randint(1, 3) for t in range(4) if rng.random() < 0.8})
            for _ in range(8)
        ]
        X = [v if v.entries else sparse({0: 1.0}) for v in X]
        y = [OFF if i % 2 else NOT for i in range(8)]
        model = train_nb(X, y, vocab_size=4)
        for scale in (0.25, 1.0, 7.5):
            scaled_model = train_nb(
                [sparse({i: w * scale for i, w in v.entries}) for v in X],
                y,
                vocab_size=4,
            )
            for probe in X:
                assert predict_nb(scaled_model, probe)[0] is predict_nb(model, probe)[0]


class TestTrainLR:
    def test_zero_model_predicts_half(self):
        model = LRModel(weights=np.zeros(3), bias=0.0, l2=0.0, learning_rate=0.1, epochs=0)
        label, probability = predict_lr(model, sparse({0: 1.0, 2: 0.5}))
        assert probability == 0.5
        assert label is OFF  # threshold rule: >= 0.5 is offensive

    def test_separable_line_reaches_perfect_accuracy(self):
        X = [sparse({0: -1.0}), sparse({0: 1.0})] * 5
        y = [NOT, OFF] * 5
        model = train_lr(X, y)
        assert all(predict_lr(model, x)[0] is t for x, t in zip(X, y))

    def test_gradient_matches_finite_differences(self):
        rng = np.random.default_rng(20240214)
        X = rng.normal(size=(5, 8))
        y = rng.integers(0, 2, size=5).astype(float)
        if y.min() == y.max():
            y[0] = 1 - y[0]
        weights = rng.normal(size=8) * 0.5
        bias = 0.3
        l2 = 1e-4

        def loss_of(params):
            return lr_loss(np.array(params[:-1]), params[-1], X, y, l2)

        numeric = central_difference_gradient(loss_of, list(weights) + [bias], eps=1e-5)
        grad_w, grad_b = lr_gradients(weights, bias, X, y, l2)
        analytic = list(grad_w) + [grad_b]
        for a, n in zip(analytic, numeric):
            assert abs(a - n) / max(1e-12, abs(n)) < 1e-6

    def test_loss_non_increasing(self):
        rng = random.Random(17)
        X = [
            sparse({t: rng.random() for t in range(6) if rng.random() < 0.6} or {0: 1.0})
            for _ in range(20)
        ]
        y = [OFF if i % 2 else NOT for i in range(20)]
        model = train_lr(X, y)
        assert len(model.loss_history) == 501
        for before, after in zip(model.loss_history, model.loss_history[1:]):
            assert after <= before + 1e-12

    def test_diverging_rate_raises(self):
        X = [sparse({0: 1000.0}), sparse({0: -1000.0})]
        with pytest.raises(NonFiniteLossError):
            train_lr(X, [OFF, NOT], learning_rate=1e6, epochs=200)

    def test_single_class_rejected(self):
        with pytest.raises(SingleClassError):
            train_lr([sparse({0: 1.0})] * 2, [OFF, OFF])

    def test_deterministic(self):
        X = [sparse({0: 0.3, 1: 0.9}), sparse({1: 1.0}), sparse({0: 1.0})]
        y = [OFF, NOT, OFF]
        a = train_lr(X, y, epochs=50)
        b = train_lr(X, y, epochs=50)
        assert a.weights.tolist() == b.weights.tolist()
        assert a.bias == b.bias


class TestPredictLR:
    def test_bias_ln3_gives_three_quarters(self):
        model = LRModel(
            weights=np.zeros(2), bias=math.log(3), l2=0.0, learning_rate=0.1, epochs=0
        )
        _, probability = predict_lr(model, sparse({}))
        assert probability == pytest.approx(0.75)

    def test_large_margin_saturates(self):
        model = LRModel(weights=np.array([50.0]), bias=0.0, l2=0.0, learning_rate=0.1, epochs=0)
        label, probability = predict_lr(model, sparse({0: 1.0}))
        assert label is OFF
        assert probability > 0.999999


class TestSelectBestCycle:
    @staticmethod
    def cycle(seed: int, f1: float, accuracy: float) -> CycleResult:
        base = metrics(ConfusionMatrix(tp=1, fp=0, fn=0, tn=1))
        report = type(base)(
            f1=f1,
            accuracy=accuracy,
            precision=base.precision,
            recall=base.recall,
            specificity=base.specificity,
            matrix=base.matrix,
        )
        return CycleResult(seed=seed, validation=report, test=report)

    def test_single_cycle(self):
        assert select_best_cycle([self.cycle(0, 0.9, 0.9)]) == 0

    def test_argmax_f1(self):
        cycles = [self.cycle(0, 0.70, 0.9), self.cycle(1, 0.80, 0.5)]
        assert select_best_cycle(cycles) == 1

    def test_tie_broken_by_accuracy(self):
        cycles = [self.cycle(0, 0.75, 0.7), self.cycle(1, 0.75, 0.8)]
        assert select_best_cycle(cycles) == 1

    def test_full_tie_prefers_lower_index(self):
        cycles = [self.cycle(0, 0.75, 0.8), self.cycle(1, 0.75, 0.8)]
        assert select_best_cycle(cycles) == 0


def separable_dataset(n: int = 60) -> LabeledDataset:
    entries = []
    for i in range(n):
        if i % 2:
            entries.append((f"o{i}", "vile cruel nasty words here", OFF))
        else:
            entries.append((f"n{i}", "kind gentle pleasant words here", NOT))
    return LabeledDataset(entries=tuple(entries))


class TestRunCycles:
    CONFIG = CycleConfig(
        model="nb",
        preprocess=PreprocessConfig(steps=frozenset({Step.LOWERCASING})),
    )

    def test_single_cycle_is_best(self):
        trained = run_cycles(separable_dataset(), self.CONFIG, n_cycles=1, base_seed=3)
        assert trained.report.best_cycle_index == 0
        assert trained.report.cycles[0].seed == 3

    def test_seeds_increment_per_cycle(self):
        trained = run_cycles(separable_dataset(), self.CONFIG, n_cycles=3, base_seed=10)
        assert [c.seed for c in trained.report.cycles] == [10, 11, 12]

    def test_bit_reproducible(self):
        first = run_cycles(separable_dataset(), self.CONFIG, n_cycles=2, base_seed=5)
        second = run_cycles(separable_dataset(), self.CONFIG, n_cycles=2, base_seed=5)
        assert first.report == second.report
        assert first.tfidf.vocabulary == second.tfidf.vocabulary

    def test_separable_data_scores_perfectly(self):
        trained = run_cycles(separable_dataset(), self.CONFIG, n_cycles=2, base_seed=0)
        assert trained.report.best.test.f1 == 1.0

    def test_lr_variant_runs(self):
        config = CycleConfig(
            model="lr",
            preprocess=PreprocessConfig(steps=frozenset({Step.LOWERCASING})),
            epochs=100,
        )
        trained = run_cycles(separable_dataset(), config, n_cycles=1, base_seed=1)
        assert trained.report.best.test.f1 == 1.0


class TestPersistence:
    def test_nb_round_trip(self, tmp_path):
        model = train_nb(BAD_GOOD_X, BAD_GOOD_Y, vocab_size=2)
        path = tmp_path / "model.json"
        save_model(model, path)
        loaded = load_model(path)
        assert isinstance(loaded, NBModel)
        assert loaded.alpha == model.alpha
        assert loaded.log_prior.tolist() == model.log_prior.tolist()
        assert loaded.log_likelihood.tolist() == model.log_likelihood.tolist()

    def test_lr_round_trip(self, tmp_path):
        model = train_lr(BAD_GOOD_X, BAD_GOOD_Y, epochs=20)
        path = tmp_path / "model.json"
        save_model(model, path)
        loaded = load_model(path)
        assert isinstance(loaded, LRModel)
        assert loaded.weights.tolist() == model.weights.tolist()
        assert loaded.bias == model.bias
        assert loaded.epochs == model.epochs
