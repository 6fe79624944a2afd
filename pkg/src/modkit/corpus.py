"""Comment-tree ingestion, labeling, balancing and splitting.

The input format is the JSON comment-tree dump produced by scraping a
post's comment section: a top-level object with ``post_id``,
``post_author`` and a ``comments`` array, where each comment carries
``id``, ``author``, ``text``, an optional ``timestamp`` and a ``replies``
array of the same shape.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadRatiosError,
    DuplicateIdError,
    EmptyClassError,
    MalformedJsonError,
    SchemaViolationError,
    UnknownCommentIdError,
)
from ._rng import sample_without_replacement, shuffled


class Label(Enum):
    """Binary moderation label. There is deliberately no third state."""

    NOT_OFFENSIVE = 0
    OFFENSIVE = 1


class LexiconCategory(Enum):
    DISCRIMINATORY = "discriminatory"
    DEROGATORY = "derogatory"
    THREATENING = "threatening"
    WATCHWORD = "watchword"


#: The three criteria every labeling session is annotated with.
ANNOTATION_CRITERIA: tuple[str, str, str] = (
    "Insults or threats targeted towards an individual or a group",
    "Inappropriate language, insults, or threats",
    "Explicit or implicit targeting of people based on ethnicity, gender, "
    "sexual orientation, religious belief, or other common characteristics",
)


@dataclass(frozen=True)
class AnnotationCriteria:
    """Documentation metadata attached to a labeling session."""

    criteria: tuple[str, ...] = ANNOTATION_CRITERIA

    def __post_init__(self):
        if len(self.criteria) != 3:
            raise ValueError("exactly three annotation criteria are required")


@dataclass(frozen=True)
class Comment:
    id: str
    author: str
    text: str
    timestamp: str | None = None
    depth: int = 0


@dataclass(frozen=True)
class CommentNode:
    comment: Comment
    children: tuple["CommentNode", ...] = ()


@dataclass(frozen=True)
class CommentTree:
    post_id: str
    post_author: str
    roots: tuple[CommentNode, ...] = ()

    def node_count(self) -> int:
        def count(node: CommentNode) -> int:
            return 1 + sum(count(c) for c in node.children)

        return sum(count(r) for r in self.roots)


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    category: LexiconCategory

    def __post_init__(self):
        if not self.term:
            raise ValueError("lexicon term must be non-empty")


@dataclass(frozen=True)
class LabeledDataset:
    """Flat labeled comments with O(1) per-class counts."""

    entries: tuple[tuple[str, str, Label], ...]
    provenance: Mapping[str, str] | None = None
    _n_offensive: int = field(init=False, default=0)

    def __post_init__(self):
        seen: set[str] = set()
        n_off = 0
        for cid, _text, label in self.entries:
            if cid in seen:
                raise DuplicateIdError(f"duplicate comment id in dataset: {cid!r}")
            seen.add(cid)
            if label is Label.OFFENSIVE:
                n_off += 1
        object.__setattr__(self, "_n_offensive", n_off)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def n_offensive(self) -> int:
        return self._n_offensive

    @property
    def n_not_offensive(self) -> int:
        return len(self.entries) - self._n_offensive

    def ids(self) -> list[str]:
        return [cid for cid, _, _ in self.entries]

    def texts(self) -> list[str]:
        return [text for _, text, _ in self.entries]

    def labels(self) -> list[Label]:
        return [label for _, _, label in self.entries]


# ---------------------------------------------------------------------------
# Parsing and serialization


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        raise SchemaViolationError(f"missing required field {key!r}", path)
    return obj[key]


def _parse_node(obj, path: str, depth: int, seen_ids: set[str]) -> CommentNode:
    if not isinstance(obj, dict):
        raise SchemaViolationError("comment must be an object", path)
    cid = _require(obj, "id", path)
    author = _require(obj, "author", path)
    text = _require(obj, "text", path)
    if not isinstance(cid, str) or not cid:
        raise SchemaViolationError("id must be a non-empty string", f"{path}.id")
    if not isinstance(author, str):
        raise SchemaViolationError("author must be a string", f"{path}.author")
    if not isinstance(text, str):
        raise SchemaViolationError("text must be a string", f"{path}.text")
    if cid in seen_ids:
        raise DuplicateIdError(f"duplicate comment id: {cid!r}")
    seen_ids.add(cid)
    timestamp = obj.get("timestamp")
    if timestamp is not None and not isinstance(timestamp, str):
        raise SchemaViolationError("timestamp must be a string", f"{path}.timestamp")
    replies = obj.get("replies", [])
    if not isinstance(replies, list):
        raise SchemaViolationError("replies must be an array", f"{path}.replies")
    children = tuple(
        _parse_node(child, f"{path}.replies[{i}]", depth + 1, seen_ids)
        for i, child in enumerate(replies)
    )
    comment = Comment(id=cid, author=author, text=text, timestamp=timestamp, depth=depth)
    return CommentNode(comment=comment, children=children)


def parse_comment_tree(data: bytes | str) -> CommentTree:
    """Parse a JSON comment-tree dump into a :class:`CommentTree`.

    Depths are computed during the walk; duplicate ids anywhere in the
    tree are rejected.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"invalid JSON: {exc.msg}", offset=exc.pos) from exc
    if not isinstance(obj, dict):
        raise SchemaViolationError("top level must be an object", "$")
    post_id = _require(obj, "post_id", "$")
    post_author = _require(obj, "post_author", "$")
    comments = _require(obj, "comments", "$")
    if not isinstance(comments, list):
        raise SchemaViolationError("comments must be an array", "$.comments")
    seen: set[str] = set()
    roots = tuple(
        _parse_node(c, f"$.comments[{i}]", 0, seen) for i, c in enumerate(comments)
    )
    return CommentTree(post_id=str(post_id), post_author=str(post_author), roots=roots)


def _node_to_obj(node: CommentNode) -> dict:
    obj: dict = {
        "id": node.comment.id,
        "author": node.comment.author,
        "text": node.comment.text,
    }
    if node.comment.timestamp is not None:
        obj["timestamp"] = node.comment.timestamp
    obj["replies"] = [_node_to_obj(c) for c in node.children]
    return obj


def serialize_comment_tree(tree: CommentTree) -> bytes:
    """Inverse of :func:`parse_comment_tree` (structural round trip)."""
    obj = {
        "post_id": tree.post_id,
        "post_author": tree.post_author,
        "comments": [_node_to_obj(r) for r in tree.roots],
    }
    return json.dumps(obj, ensure_ascii=False).encode("utf-8")


def flatten(tree: CommentTree) -> list[Comment]:
    """Pre-order walk: parent before children, siblings in stored order."""
    out: list[Comment] = []

    def walk(node: CommentNode):
        out.append(node.comment)
        for child in node.children:
            walk(child)

    for root in tree.roots:
        walk(root)
    return out


# ---------------------------------------------------------------------------
# Dataset construction


def dedupe(comments: Iterable[Comment]) -> list[Comment]:
    """Keep the first occurrence of each whitespace-trimmed text.

    Matching is exact after trimming; case is preserved (the least
    destructive reading of "unique comments").
    """
    seen: set[str] = set()
    out: list[Comment] = []
    for comment in comments:
        key = comment.text.strip()
        if key not in seen:
            seen.add(key)
            out.append(comment)
    return out


def apply_labels(
    comments: Sequence[Comment],
    labels: Mapping[str, Label],
    provenance: Mapping[str, str] | None = None,
) -> tuple[LabeledDataset, int]:
    """Join comments with labels; returns (dataset, unlabeled_count).

    Unlabeled comments are excluded, never defaulted to NOT_OFFENSIVE.
    A label for an id absent from ``comments`` raises
    :class:`UnknownCommentIdError`.
    """
    by_id = {c.id: c for c in comments}
    for cid in labels:
        if cid not in by_id:
            raise UnknownCommentIdError(f"label references unknown comment id {cid!r}")
    entries = tuple(
        (c.id, c.text, labels[c.id]) for c in comments if c.id in labels
    )
    unlabeled = len(comments) - len(entries)
    prov = None
    if provenance is not None:
        prov = {cid: provenance[cid] for cid, _, _ in entries if cid in provenance}
    return LabeledDataset(entries=entries, provenance=prov), unlabeled


def balance(dataset: LabeledDataset, seed: int) -> LabeledDataset:
    """Undersample the majority class to the minority class size.

    The minority class is kept whole; the majority class is sampled
    uniformly without replacement via a seeded Fisher-Yates shuffle over
    lexicographically sorted ids, so the same seed always selects the
    same ids. Entry order of the input is preserved in the output.
    """
    off_ids = [cid for cid, _, lab in dataset.entries if lab is Label.OFFENSIVE]
    not_ids = [cid for cid, _, lab in dataset.entries if lab is Label.NOT_OFFENSIVE]
    if not off_ids or not not_ids:
        raise EmptyClassError(
            f"both classes must be non-empty (offensive={len(off_ids)}, "
            f"not_offensive={len(not_ids)})"
        )
    k = min(len(off_ids), len(not_ids))
    keep = set(off_ids if len(off_ids) <= k else sample_without_replacement(off_ids, k, seed))
    if len(not_ids) <= k:
        keep.update(not_ids)
    else:
        keep.update(sample_without_replacement(not_ids, k, seed))
    entries = tuple(e for e in dataset.entries if e[0] in keep)
    prov = None
    if dataset.provenance is not None:
        prov = {cid: pid for cid, pid in dataset.provenance.items() if cid in keep}
    return LabeledDataset(entries=entries, provenance=prov)


def split(
    dataset: LabeledDataset,
    ratios: tuple[float, float, float],
    seed: int,
) -> tuple[LabeledDataset, LabeledDataset, LabeledDataset]:
    """Disjoint train/validation/test partition.

    Ids are shuffled (seeded Fisher-Yates over the sorted id list), then
    sizes are allocated as floor(n * ratio) with the remainder going to
    train. The 1e-9 nudge below keeps floor() stable when n * ratio is an
    integer that float rounding lands just under.
    """
    if len(ratios) != 3 or any(r < 0 for r in ratios):
        raise BadRatiosError(f"ratios must be three non-negative fractions, got {ratios}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise BadRatiosError(f"ratios must sum to 1, got {sum(ratios)}")
    n = len(dataset.entries)
    order = shuffled(dataset.ids(), seed)
    n_train = math.floor(n * ratios[0] + 1e-9)
    n_val = math.floor(n * ratios[1] + 1e-9)
    n_test = math.floor(n * ratios[2] + 1e-9)
    n_train += n - (n_train + n_val + n_test)
    groups = (
        set(order[:n_train]),
        set(order[n_train : n_train + n_val]),
        set(order[n_train + n_val :]),
    )

    def take(ids: set[str]) -> LabeledDataset:
        entries = tuple(e for e in dataset.entries if e[0] in ids)
        prov = None
        if dataset.provenance is not None:
            prov = {c: p for c, p in dataset.provenance.items() if c in ids}
        return LabeledDataset(entries=entries, provenance=prov)

    return take(groups[0]), take(groups[1]), take(groups[2])


# ---------------------------------------------------------------------------
# Lexicon flagging

_WORD_CHAR = r"[^\W_]"  # alphanumeric: \w minus underscore


def lexicon_flag(
    comments: Iterable[Comment],
    lexicon: Sequence[LexiconEntry],
) -> dict[str, list[tuple[str, LexiconCategory]]]:
    """Case-insensitive whole-word lexicon hits per comment.

    Word boundaries are non-alphanumeric characters; each distinct term
    is reported at most once per comment. Comments without hits are
    omitted from the result.
    """
    patterns = [
        (
            entry,
            re.compile(
                rf"(?<!{_WORD_CHAR}){re.escape(entry.term)}(?!{_WORD_CHAR})",
                re.IGNORECASE,
            ),
        )
        for entry in lexicon
    ]
    hits: dict[str, list[tuple[str, LexiconCategory]]] = {}
    for comment in comments:
        found = [
            (entry.term, entry.category)
            for entry, pattern in patterns
            if pattern.search(comment.text)
        ]
        if found:
            hits[comment.id] = found
    return hits


# ---------------------------------------------------------------------------
# File formats


def load_labels(path: str | Path) -> dict[str, Label]:
    """Read a label file: JSON object mapping comment_id -> 0 or 1."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, dict):
        raise SchemaViolationError("label file must be a JSON object", str(path))
    labels: dict[str, Label] = {}
    for cid, value in raw.items():
        if value not in (0, 1):
            raise SchemaViolationError(
                f"label for {cid!r} must be 0 or 1, got {value!r}", str(path)
            )
        labels[cid] = Label(value)
    return labels


def load_lexicon(path: str | Path) -> list[LexiconEntry]:
    """Read a lexicon file: UTF-8 lines of ``term<TAB>category``."""
    entries: list[LexiconEntry] = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise SchemaViolationError(
                f"expected term<TAB>category on line {lineno}", str(path)
            )
        term, category = parts
        try:
            entries.append(LexiconEntry(term=term.lower(), category=LexiconCategory(category)))
        except ValueError as exc:
            raise SchemaViolationError(
                f"unknown category {category!r} on line {lineno}", str(path)
            ) from exc
    return entries


def dataset_to_json(dataset: LabeledDataset) -> str:
    obj = {
        "entries": [
            {"id": cid, "text": text, "label": label.value}
            for cid, text, label in dataset.entries
        ],
        "provenance": dict(dataset.provenance) if dataset.provenance else {},
    }
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=False)


def dataset_from_json(data: str | bytes) -> LabeledDataset:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"invalid dataset JSON: {exc.msg}", offset=exc.pos) from exc
    if not isinstance(obj, dict) or "entries" not in obj:
        raise SchemaViolationError("dataset file must be an object with 'entries'", "$")
    entries = []
    for i, e in enumerate(obj["entries"]):
        for key in ("id", "text", "label"):
            if key not in e:
                raise SchemaViolationError(f"missing {key!r}", f"$.entries[{i}]")
        if e["label"] not in (0, 1):
            raise SchemaViolationError("label must be 0 or 1", f"$.entries[{i}].label")
        entries.append((e["id"], e["text"], Label(e["label"])))
    provenance = obj.get("provenance") or None
    return LabeledDataset(entries=tuple(entries), provenance=provenance)


def save_dataset(dataset: LabeledDataset, path: str | Path) -> None:
    Path(path).write_text(dataset_to_json(dataset), encoding="utf-8")


def load_dataset(path: str | Path) -> LabeledDataset:
    return dataset_from_json(Path(path).read_text(encoding="utf-8"))
