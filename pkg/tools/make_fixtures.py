#!/usr/bin/env python3
"""Regenerate the committed test fixtures under tests/data/.

Produces:
  fixture10_tree.json / fixture10_labels.json   small handcrafted corpus
  separable_tree_[1-4].json / separable_labels.json
        200 synthetic comments whose offensive and non-offensive texts
        draw from disjoint word pools (classifiers must separate them)
  slang_corpus.txt                              slang + emoji-alias lines
  golden/ngrams_{uni,bi,tri}_{before,after}.csv
        n-gram chart data computed by an independent brute-force count

Everything is deterministic; re-running must reproduce identical bytes.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "tests" / "data"
sys.path.insert(0, str(ROOT / "src"))

from modkit import textprep  # noqa: E402

# ---------------------------------------------------------------------------
# Small handcrafted fixture (10 comments, nested, emojis, emoticons)

FIXTURE10_COMMENTS = [
    # (id, author, text, label, replies)
    ("c01", "ada", "You have no critical thinking skills 😂", 1, [
        ("c02", "ben", "shut up karen you sound like idiot", 1, []),
        ("c03", "cal", "great point thanks for sharing", 0, []),
    ]),
    ("c04", "dee", "get off your high horse dumbass", 1, [
        ("c05", "eli", "ur dumb and you know it 😂😂", 1, []),
    ]),
    ("c06", "fay", "I love this video :)", 0, []),
    ("c07", "gus", "sound dumb use brain", 1, []),
    ("c08", "hal", "what a cute dog 😭", 0, [
        ("c09", "ivy", "critical thinking skills matter karen 💀", 1, []),
    ]),
    ("c10", "jon", "critical thinking is important", 0, []),
]


def _nodes(items):
    return [
        {
            "id": cid,
            "author": author,
            "text": text,
            "replies": _nodes(replies),
        }
        for cid, author, text, _label, replies in items
    ]


def _labels(items, out):
    for cid, _a, _t, label, replies in items:
        out[cid] = label
        _labels(replies, out)
    return out


def write_fixture10():
    tree = {"post_id": "post-fix10", "post_author": "op", "comments": _nodes(FIXTURE10_COMMENTS)}
    (DATA / "fixture10_tree.json").write_text(
        json.dumps(tree, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    labels = _labels(FIXTURE10_COMMENTS, {})
    (DATA / "fixture10_labels.json").write_text(
        json.dumps(labels, indent=2) + "\n", encoding="utf-8"
    )


# ---------------------------------------------------------------------------
# Separable 200-comment corpus: class-disjoint vocabularies

OFFENSIVE_POOL = """
bodga kagut dapet gubota pakad tebag dogapa kebut gadopo bapek
tugad podab gatek dubap kopad bagud tepok dagub potek budag
""".split()

CLEAN_POOL = """
fomir nasuv rimof savun morif vanus firom nusav rovim sunaf
mirov fusan vorim rafus nivom sovar marov nofer vimor resuf
""".split()


class Mix64:
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound):
        return self.next() % bound


def validate_pools():
    stoplist = textprep.default_stoplist()
    lemmas = textprep.default_lemma_dictionary()
    for pool in (OFFENSIVE_POOL, CLEAN_POOL):
        for word in pool:
            assert word not in stoplist, f"{word!r} is a stop word"
            stream = textprep.TokenStream((word,))
            assert textprep.lemmatize(stream, lemmas).tokens == (word,), (
                f"{word!r} is not lemma-stable"
            )
    assert not set(OFFENSIVE_POOL) & set(CLEAN_POOL)


def write_separable():
    validate_pools()
    rng = Mix64(20220401)
    labels: dict[str, int] = {}
    index = 0
    for part in range(4):
        comments = []
        for _ in range(50):
            index += 1
            cid = f"s{index:03d}"
            offensive = index % 2 == 1
            pool = OFFENSIVE_POOL if offensive else CLEAN_POOL
            n_words = 4 + rng.below(5)
            text = " ".join(pool[rng.below(len(pool))] for _ in range(n_words))
            labels[cid] = 1 if offensive else 0
            comments.append(
                {"id": cid, "author": f"user{index % 17}", "text": text, "replies": []}
            )
        tree = {
            "post_id": f"post-sep-{part + 1}",
            "post_author": "op",
            "comments": comments,
        }
        (DATA / f"separable_tree_{part + 1}.json").write_text(
            json.dumps(tree, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
    (DATA / "separable_labels.json").write_text(
        json.dumps(labels, indent=2) + "\n", encoding="utf-8"
    )


# ---------------------------------------------------------------------------
# Slang corpus for the fragmentation metric

SLANG_LINES = [
    "ok boomer stop the cap",
    "he a simp no cap",
    "boomer take is wild :face_with_rolling_eyes:",
    "this simp stay making excuses :face_with_tears_of_joy:",
    "bro a whole clown :skull: :skull:",
    "no cap that was funny :loudly_crying_face:",
    "boomer energy in the comments :clown_face:",
    "simp behavior fr :pleading_face:",
    "that fit is fire :fire: :billed_cap:",
    "good point honestly :thumbs_up: :red_heart:",
    "ok boomer ok boomer ok boomer",
    "the cap detector is loud today",
    "simp cap boomer all in one comment",
    "people sound like a broken record",
    "watch the whole video before you comment",
]


def write_slang_corpus():
    (DATA / "slang_corpus.txt").write_text("\n".join(SLANG_LINES) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Golden n-gram chart data via independent brute-force counting

ANALYZE_BASE = frozenset(
    {
        textprep.Step.LOWERCASING,
        textprep.Step.EMOJI_ENCODING,
        textprep.Step.PUNCTUATION_REMOVAL,
        textprep.Step.LEMMATIZATION,
    }
)


def brute_force_top(streams, n, k):
    """Straight-line window enumeration, independent of analytics.py."""
    counts: dict[str, int] = {}
    for stream in streams:
        tokens = list(stream.tokens)
        for start in range(len(tokens)):
            window = tokens[start : start + n]
            if len(window) == n:
                gram = " ".join(window)
                counts[gram] = counts.get(gram, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


def write_goldens():
    golden = DATA / "golden"
    golden.mkdir(parents=True, exist_ok=True)
    offensive = []

    def collect(items):
        for cid, _a, text, label, replies in items:
            if label == 1:
                offensive.append((cid, text))
            collect(replies)

    collect(FIXTURE10_COMMENTS)
    names = {1: "uni", 2: "bi", 3: "tri"}
    for suffix, steps in (
        ("before", ANALYZE_BASE),
        ("after", ANALYZE_BASE | {textprep.Step.STOPWORD_REMOVAL}),
    ):
        config = textprep.PreprocessConfig(steps=steps)
        streams = [
            textprep.run_pipeline(text, config, source_id=cid) for cid, text in offensive
        ]
        for n, name in names.items():
            rows = brute_force_top(streams, n, 20)
            lines = ["gram,count"] + [
                f'"{gram}",{count}' if ("," in gram or '"' in gram) else f"{gram},{count}"
                for gram, count in rows
            ]
            (golden / f"ngrams_{name}_{suffix}.csv").write_text(
                "\n".join(lines) + "\n", encoding="utf-8"
            )


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    write_fixture10()
    write_separable()
    write_slang_corpus()
    write_goldens()
    print(f"fixtures written to {DATA}")
