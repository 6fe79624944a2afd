"""Confusion matrices, the five score metrics and variant report tables.

OFFENSIVE is the positive class everywhere, so recall reads as "share
of offensive comments caught". Degenerate 0/0 metrics are reported as
0.0 with a flag instead of raising, because evaluation must survive
lopsided folds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import _resources
from .corpus import Label
from .errors import EmptyEvalError, LengthMismatchError


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("confusion matrix cells must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricsReport:
    f1: float
    accuracy: float
    precision: float
    recall: float
    specificity: float
    matrix: ConfusionMatrix
    variant_name: str = ""
    degenerate: bool = False


#: Canonical variant labels, in published-table order. BERT rows exist
#: only as externally supplied reference scores (no transformer here).
CANONICAL_VARIANTS = (
    "Naive Bayes Default",
    "Naive Bayes Emojis",
    "Logistic Regression Default",
    "Logistic Regression Emojis",
    "BERT Default",
    "BERT Emojis",
    "BERT Slang",
    "BERT Emoji & slang",
)


def confusion(y_true: Sequence[Label], y_pred: Sequence[Label]) -> ConfusionMatrix:
    """Cell counts with OFFENSIVE as the positive class."""
    if len(y_true) != len(y_pred):
        raise LengthMismatchError(
            f"y_true has {len(y_true)} items, y_pred has {len(y_pred)}"
        )
    if len(y_true) == 0:
        raise EmptyEvalError("cannot evaluate zero examples")
    tp = fp = fn = tn = 0
    for truth, pred in zip(y_true, y_pred):
        if truth is Label.OFFENSIVE:
            if pred is Label.OFFENSIVE:
                tp += 1
            else:
                fn += 1
        else:
            if pred is Label.OFFENSIVE:
                fp += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def metrics(matrix: ConfusionMatrix, variant_name: str = "") -> MetricsReport:
    """Five metrics from the matrix; 0/0 cases yield 0.0 and set the
    degenerate flag."""
    if matrix.total < 1:
        raise EmptyEvalError("metrics need at least one evaluated example")
    degenerate = False

    def ratio(num: int, den: int) -> float:
        nonlocal degenerate
        if den == 0:
            degenerate = True
            return 0.0
        return num / den

    precision = ratio(matrix.tp, matrix.tp + matrix.fp)
    recall = ratio(matrix.tp, matrix.tp + matrix.fn)
    specificity = ratio(matrix.tn, matrix.tn + matrix.fp)
    accuracy = (matrix.tp + matrix.tn) / matrix.total
    if precision + recall == 0:
        degenerate = True
        f1 = 0.0
    else:
        f1 = 2 * precision * recall / (precision + recall)
    return MetricsReport(
        f1=f1,
        accuracy=accuracy,
        precision=precision,
        recall=recall,
        specificity=specificity,
        matrix=matrix,
        variant_name=variant_name,
        degenerate=degenerate,
    )


# ---------------------------------------------------------------------------
# Report rendering


def report_to_dict(report: MetricsReport) -> dict:
    return {
        "name": report.variant_name,
        "matrix": {
            "tp": report.matrix.tp,
            "fp": report.matrix.fp,
            "fn": report.matrix.fn,
            "tn": report.matrix.tn,
        },
        "f1": report.f1,
        "accuracy": report.accuracy,
        "precision": report.precision,
        "recall": report.recall,
        "specificity": report.specificity,
        "degenerate": report.degenerate,
    }


def report_from_dict(obj: dict) -> MetricsReport:
    matrix = ConfusionMatrix(
        tp=obj["matrix"]["tp"],
        fp=obj["matrix"]["fp"],
        fn=obj["matrix"]["fn"],
        tn=obj["matrix"]["tn"],
    )
    return MetricsReport(
        f1=obj["f1"],
        accuracy=obj["accuracy"],
        precision=obj["precision"],
        recall=obj["recall"],
        specificity=obj["specificity"],
        matrix=matrix,
        variant_name=obj.get("name", ""),
        degenerate=obj.get("degenerate", False),
    )


def render_json(variants: Sequence[MetricsReport]) -> str:
    if not variants:
        raise EmptyEvalError("report needs at least one variant")
    return json.dumps(
        {"variants": [report_to_dict(v) for v in variants]},
        indent=2,
        ensure_ascii=False,
    )


def render_text_table(variants: Sequence[MetricsReport]) -> str:
    """Aligned table, one row per variant, scores at 4 decimal places."""
    if not variants:
        raise EmptyEvalError("report needs at least one variant")
    headers = (
        "Model variation",
        "TP",
        "FP",
        "FN",
        "TN",
        "F1",
        "Accuracy",
        "Precision",
        "Recall",
        "Specificity",
    )
    rows = [
        (
            v.variant_name or "(unnamed)",
            str(v.matrix.tp),
            str(v.matrix.fp),
            str(v.matrix.fn),
            str(v.matrix.tn),
            f"{v.f1:.4f}",
            f"{v.accuracy:.4f}",
            f"{v.precision:.4f}",
            f"{v.recall:.4f}",
            f"{v.specificity:.4f}",
        )
        for v in variants
    ]
    widths = [
        max(len(headers[col]), *(len(row[col]) for row in rows))
        for col in range(len(headers))
    ]
    lines = [
        "  ".join(headers[col].ljust(widths[col]) for col in range(len(headers))),
        "  ".join("-" * widths[col] for col in range(len(headers))),
    ]
    for row in rows:
        lines.append("  ".join(row[col].ljust(widths[col]) for col in range(len(headers))))
    return "\n".join(lines) + "\n"


def parse_report_json(data: str) -> list[MetricsReport]:
    obj = json.loads(data)
    return [report_from_dict(v) for v in obj.get("variants", [])]


def load_reference_scores(path: str | Path | None = None) -> list[MetricsReport]:
    """Externally measured per-variant scores shipped as reference data.

    These rows are rendered verbatim; they are comparison points, not
    outputs of this toolkit, and are not required to satisfy the metric
    identities.
    """
    if path is not None:
        return parse_report_json(Path(path).read_text(encoding="utf-8"))
    return _resources.cached(
        "reference_scores",
        lambda p: parse_report_json((p / "reference_scores.json").read_text(encoding="utf-8")),
    )
