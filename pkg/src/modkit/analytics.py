"""Corpus statistics: n-gram rankings, word-cloud weights, length
distributions, emoji frequencies and presence percentages.

All counting is per-occurrence within comments; n-gram windows never
cross comment boundaries. Rankings break count ties lexicographically
so exports are stable.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import Comment, Label, LabeledDataset
from .errors import (
    BadBucketWidthError,
    BadNError,
    ConfigError,
    EmptyDatasetError,
    EmptyTableError,
)
from .textprep import (
    TokenStream,
    UNKNOWN_EMOJI_ALIAS,
    default_emoji_aliases,
    is_alias_placeholder,
    is_emoji_char,
)


@dataclass(frozen=True)
class NgramTable:
    n: int
    rows: tuple[tuple[str, int], ...]
    stopwords_removed: bool = False
    total_windows: int = 0

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LengthHistogram:
    bucket_width: int
    buckets: Mapping[int, int]

    def total(self) -> int:
        return sum(self.buckets.values())


@dataclass(frozen=True)
class EmojiStats:
    frequency: tuple[tuple[str, int], ...] = ()
    presence_overall: float = 0.0
    presence_offensive: float = 0.0
    presence_nonoffensive: float = 0.0
    per_comment_cap: int | None = None


@dataclass(frozen=True)
class CloudWeights:
    terms: Mapping[str, float]


def ngram_counts(
    corpus: Sequence[TokenStream],
    n: int,
    top_k: int,
    stopwords_removed: bool = False,
) -> NgramTable:
    """Top-k contiguous n-grams over the corpus.

    Windows are counted within each stream only. Ranking is by count
    descending, then gram ascending.
    """
    if n not in (1, 2, 3):
        raise BadNError(f"n must be 1, 2 or 3, got {n}")
    if top_k < 1:
        raise BadNError(f"top_k must be >= 1, got {top_k}")
    counts: Counter[str] = Counter()
    total_windows = 0
    for stream in corpus:
        tokens = stream.tokens
        windows = max(0, len(tokens) - n + 1)
        total_windows += windows
        for i in range(windows):
            counts[" ".join(tokens[i : i + n])] += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]
    return NgramTable(
        n=n,
        rows=tuple(ranked),
        stopwords_removed=stopwords_removed,
        total_windows=total_windows,
    )


def length_histogram(
    comments: Iterable[Comment | str],
    bucket_width: int,
) -> LengthHistogram:
    """Histogram of raw comment lengths in Unicode scalar values.

    A comment of length L lands in bucket floor(L / width) * width.
    """
    if not isinstance(bucket_width, int) or bucket_width < 1:
        raise BadBucketWidthError(f"bucket width must be a positive integer, got {bucket_width}")
    buckets: Counter[int] = Counter()
    for comment in comments:
        text = comment.text if isinstance(comment, Comment) else comment
        length = len(text)
        buckets[(length // bucket_width) * bucket_width] += 1
    return LengthHistogram(bucket_width=bucket_width, buckets=dict(buckets))


def _emoji_aliases_in(text: str, aliases: Mapping[str, str]) -> list[str]:
    """Aliases of raw emoji code points plus any whitespace-delimited
    ``:alias:`` placeholders (emoticons already converted upstream)."""
    found = [aliases.get(ch, UNKNOWN_EMOJI_ALIAS) for ch in text if is_emoji_char(ch)]
    for chunk in text.split():
        if is_alias_placeholder(chunk):
            found.append(chunk[1:-1])
    return found


def emoji_frequency(
    texts: Iterable[str],
    cap: int | None = None,
    aliases: Mapping[str, str] | None = None,
) -> list[tuple[str, int]]:
    """Emoji occurrence counts per alias, ranked (count desc, alias asc).

    With ``cap=c`` at most c occurrences of one alias are counted per
    comment, damping single-comment outliers (the fifty-bananas problem)
    without dropping the comment.
    """
    if cap is not None and cap < 1:
        raise ConfigError(f"cap must be a positive integer or None, got {cap}")
    if aliases is None:
        aliases = default_emoji_aliases()
    totals: Counter[str] = Counter()
    for text in texts:
        per_comment = Counter(_emoji_aliases_in(text, aliases))
        for alias, count in per_comment.items():
            totals[alias] += count if cap is None else min(count, cap)
    return sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))


def contains_emoji(text: str) -> bool:
    return any(is_emoji_char(ch) for ch in text) or any(
        is_alias_placeholder(chunk) for chunk in text.split()
    )


def emoji_presence(dataset: LabeledDataset) -> EmojiStats:
    """Fraction of comments with at least one emoji, overall and per
    class. Computed in exact rational arithmetic, rounded to 4 places."""
    if len(dataset.entries) == 0:
        raise EmptyDatasetError("emoji presence needs a non-empty dataset")

    def fraction(hits: int, total: int) -> float:
        if total == 0:
            return 0.0
        return float(round(Fraction(hits, total), 4))

    n_off = n_not = hit_off = hit_not = 0
    for _cid, text, label in dataset.entries:
        has = contains_emoji(text)
        if label is Label.OFFENSIVE:
            n_off += 1
            hit_off += has
        else:
            n_not += 1
            hit_not += has
    return EmojiStats(
        presence_overall=fraction(hit_off + hit_not, n_off + n_not),
        presence_offensive=fraction(hit_off, n_off),
        presence_nonoffensive=fraction(hit_not, n_not),
    )


def emoji_stats(
    dataset: LabeledDataset,
    cap: int | None = None,
    aliases: Mapping[str, str] | None = None,
) -> EmojiStats:
    """Frequency ranking plus presence fractions in one pass-friendly call."""
    presence = emoji_presence(dataset)
    freq = emoji_frequency(dataset.texts(), cap=cap, aliases=aliases)
    return EmojiStats(
        frequency=tuple(freq),
        presence_overall=presence.presence_overall,
        presence_offensive=presence.presence_offensive,
        presence_nonoffensive=presence.presence_nonoffensive,
        per_comment_cap=cap,
    )


def cloud_weights(table: NgramTable) -> CloudWeights:
    """Relative weights for a word cloud: count / max count."""
    if not table.rows:
        raise EmptyTableError("cannot weight an empty table")
    max_count = table.rows[0][1]
    return CloudWeights(terms={gram: count / max_count for gram, count in table.rows})


def export_chart_data(
    result: NgramTable | LengthHistogram | EmojiStats | CloudWeights,
    path: str | Path,
) -> None:
    """Write the data behind a chart as UTF-8 CSV with a header row."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if isinstance(result, NgramTable):
            writer.writerow(["gram", "count"])
            writer.writerows(result.rows)
        elif isinstance(result, LengthHistogram):
            writer.writerow(["bucket_start", "count"])
            for start in sorted(result.buckets):
                writer.writerow([start, result.buckets[start]])
        elif isinstance(result, EmojiStats):
            writer.writerow(["alias", "count"])
            writer.writerows(result.frequency)
            writer.writerow(["presence_overall", f"{result.presence_overall:.4f}"])
            writer.writerow(["presence_offensive", f"{result.presence_offensive:.4f}"])
            writer.writerow(
                ["presence_nonoffensive", f"{result.presence_nonoffensive:.4f}"]
            )
        elif isinstance(result, CloudWeights):
            writer.writerow(["term", "weight"])
            for term, weight in result.terms.items():
                writer.writerow([term, repr(weight)])
        else:
            raise TypeError(f"cannot export {type(result).__name__}")
