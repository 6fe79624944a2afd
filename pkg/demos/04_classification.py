#!/usr/bin/env python3
"""Walkthrough: TF-IDF features, both classifiers, training cycles.

Run with: python demos/04_classification.py
"""

from modkit import (
    Label,
    LabeledDataset,
    PreprocessConfig,
    fit,
    load_reference_scores,
    predict_lr,
    predict_nb,
    render_text_table,
    run_cycles,
    run_pipeline,
    train_lr,
    train_nb,
    transform,
)
from modkit.models import CycleConfig

OFFENSIVE_WORDS = ["pathetic", "clown", "idiot", "dumb", "troll", "loser", "miserable"]
CLEAN_WORDS = ["helpful", "lovely", "wonderful", "clear", "cute", "fantastic", "happy"]
TEMPLATES = [
    "you are a {0} {1}",
    "what a {0} little {1}",
    "nobody wants your {0} {1} takes",
    "so {0} and {1} honestly",
    "that was {0} {1} work",
]

entries = []
for i in range(30):
    template = TEMPLATES[i % len(TEMPLATES)]
    off = template.format(OFFENSIVE_WORDS[i % 7], OFFENSIVE_WORDS[(i + 3) % 7])
    ok = template.format(CLEAN_WORDS[i % 7], CLEAN_WORDS[(i + 3) % 7])
    entries.append((f"off{i:02d}", off, Label.OFFENSIVE))
    entries.append((f"ok{i:02d}", ok, Label.NOT_OFFENSIVE))
dataset = LabeledDataset(entries=tuple(entries))

# Featurize by hand once to see the moving parts.
config = PreprocessConfig()
streams = [run_pipeline(text, config, source_id=cid) for cid, text, _ in dataset.entries]
tfidf = fit(streams)
X = [transform(tfidf, s) for s in streams]
y = dataset.labels()
print(f"TF-IDF vocabulary: {tfidf.vocab_size} terms over {tfidf.doc_count} docs")

nb = train_nb(X, y, alpha=1.0)
lr = train_lr(X, y)  # full-batch descent, 500 epochs, zero init
print(f"LR loss: {lr.loss_history[0]:.4f} -> {lr.loss_history[-1]:.4f}")

probe = transform(tfidf, run_pipeline("you pathetic dumb troll", config))
print("NB says:", predict_nb(nb, probe))
print("LR says:", predict_lr(lr, probe))

# The cycle protocol: re-split 80/10/10 per cycle, train, pick the best
# cycle by validation F1, report its test metrics.
trained = run_cycles(
    dataset,
    CycleConfig(model="nb", preprocess=config, variant_name="Naive Bayes (this demo)"),
    n_cycles=3,
    base_seed=2024,
)
report = trained.report
for i, cycle in enumerate(report.cycles):
    star = " <- best" if i == report.best_cycle_index else ""
    print(f"cycle {i}: seed={cycle.seed} val_f1={cycle.validation.f1:.4f}{star}")

print("\nbest-cycle test metrics vs externally supplied reference rows:")
print(render_text_table([report.best.test] + load_reference_scores()))
