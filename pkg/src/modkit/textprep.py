"""Five-step text preprocessing pipeline.

Comments pass through up to five toggleable steps: stop-word removal,
emoji encoding, lowercasing, lemmatization and punctuation removal.
Whichever subset is selected, execution always runs in the canonical
order lowercase -> emoji encoding -> punctuation -> stop words ->
lemmatize, so that emoticons are still intact when the emoji step sees
them and the stop list only ever has to match lowercase tokens.

Emojis are never treated as punctuation: raw emoji code points and
``:alias:`` placeholders survive punctuation removal untouched.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping

from . import _resources

#: Shorthand words appended to the baseline stop list by default.
STOPWORD_EXTENSIONS: tuple[str, ...] = ("u", "ur", "cause", "gonna", "im", "gon", "cant")

#: Alias substituted for emoji code points missing from the alias table.
UNKNOWN_EMOJI_ALIAS = "unknown_emoji"


class Step(Enum):
    STOPWORD_REMOVAL = "stopword_removal"
    EMOJI_ENCODING = "emoji_encoding"
    LOWERCASING = "lowercasing"
    LEMMATIZATION = "lemmatization"
    PUNCTUATION_REMOVAL = "punctuation_removal"


ALL_STEPS: frozenset[Step] = frozenset(Step)


class EmojiMode(Enum):
    """How emoji aliases are written into the text.

    ML_PLAIN emits bare snake_case alias words (one TF-IDF token each);
    BERT_DELIMITED emits ``:alias:`` so the alias can be registered as a
    single vocabulary token in the subword tokenizer.
    """

    ML_PLAIN = "ml"
    BERT_DELIMITED = "bert"


@dataclass(frozen=True)
class PreprocessConfig:
    steps: frozenset[Step] = ALL_STEPS
    emoji_mode: EmojiMode = EmojiMode.ML_PLAIN

    def __post_init__(self):
        object.__setattr__(self, "steps", frozenset(self.steps))


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[str, ...]
    source_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if any(t == "" for t in self.tokens):
            raise ValueError("empty-string tokens are not allowed")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


@dataclass(frozen=True)
class StopList:
    """Baseline word set plus ordered shorthand extensions."""

    base: frozenset[str]
    extensions: tuple[str, ...] = STOPWORD_EXTENSIONS

    def __contains__(self, word: str) -> bool:
        return word in self.base or word in self.extensions


@dataclass(frozen=True)
class LemmaDictionary:
    exceptions: Mapping[str, str]
    suffix_rules: tuple[tuple[str, str, int], ...]


@dataclass(frozen=True)
class EmoticonMap:
    entries: Mapping[str, str]

    def __post_init__(self):
        for key, alias in self.entries.items():
            if key.isalpha():
                raise ValueError(f"letters-only emoticon key not allowed: {key!r}")
            if alias != alias.lower():
                raise ValueError(f"emoticon alias must be lowercase: {alias!r}")


# ---------------------------------------------------------------------------
# Character classification

# Blocks that hold pictographic emoji. Deliberately coarse: anything in
# these ranges is treated as an emoji token and preserved by the
# punctuation step.
_EMOJI_RANGES = (
    (0x1F000, 0x1FAFF),
    (0x2600, 0x27BF),
    (0x2B00, 0x2BFF),
    (0x1F1E6, 0x1F1FF),
)

# Invisible joiners/selectors that modify a preceding emoji.
_EMOJI_MODIFIERS = frozenset({0x200D, 0xFE0E, 0xFE0F, 0x20E3}) | frozenset(
    range(0x1F3FB, 0x1F400)
)


def is_emoji_char(ch: str) -> bool:
    cp = ord(ch)
    if cp in _EMOJI_MODIFIERS:
        return False
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


def _is_modifier(ch: str) -> bool:
    return ord(ch) in _EMOJI_MODIFIERS


def _is_punct_char(ch: str) -> bool:
    if is_emoji_char(ch) or _is_modifier(ch):
        return False
    cat = unicodedata.category(ch)
    return cat.startswith("P") or cat.startswith("S") or cat == "Cf"


def is_emoji_token(token: str) -> bool:
    return bool(token) and is_emoji_char(token[0])


def is_alias_placeholder(token: str) -> bool:
    """True for ``:alias:`` placeholders produced by the emoji step."""
    if len(token) < 3 or token[0] != ":" or token[-1] != ":":
        return False
    return all(c.isalnum() or c in "_+-" for c in token[1:-1])


# ---------------------------------------------------------------------------
# Tokenization


def _split_edges(segment: str) -> list[str]:
    """Separate leading/trailing punctuation runs from a word segment."""
    i, j = 0, len(segment)
    while i < j and _is_punct_char(segment[i]):
        i += 1
    while j > i and _is_punct_char(segment[j - 1]):
        j -= 1
    if i == j:  # nothing but punctuation
        return [segment]
    out = []
    if i:
        out.append(segment[:i])
    out.append(segment[i:j])
    if j < len(segment):
        out.append(segment[j:])
    return out


def tokenize(text: str, source_id: str = "") -> TokenStream:
    """Split on Unicode whitespace; emit edge punctuation and emoji code
    points as their own tokens.

    Interior punctuation (y'all, :alias:) stays inside its word token,
    and concatenating the tokens of a chunk reconstructs that chunk, so
    no characters are lost.
    """
    tokens: list[str] = []
    for chunk in text.split():
        if is_alias_placeholder(chunk):
            tokens.append(chunk)
            continue
        segment_start = 0
        segments: list[str] = []
        emoji_positions: list[int] = []
        for idx, ch in enumerate(chunk):
            if is_emoji_char(ch):
                if idx > segment_start:
                    segments.append(chunk[segment_start:idx])
                emoji_positions.append(len(segments))
                segments.append(ch)
                segment_start = idx + 1
            elif _is_modifier(ch):
                # attach to a preceding emoji, otherwise drop
                if idx > segment_start:
                    segments.append(chunk[segment_start:idx])
                if emoji_positions and emoji_positions[-1] == len(segments) - 1:
                    segments[-1] += ch
                segment_start = idx + 1
        if segment_start < len(chunk):
            segments.append(chunk[segment_start:])
        for pos, segment in enumerate(segments):
            if pos in emoji_positions:
                tokens.append(segment)
            else:
                tokens.extend(_split_edges(segment))
    return TokenStream(tokens=tuple(tokens), source_id=source_id)


# ---------------------------------------------------------------------------
# Token-level steps


def lowercase(stream: TokenStream) -> TokenStream:
    return TokenStream(tuple(t.lower() for t in stream.tokens), stream.source_id)


def remove_punctuation(stream: TokenStream) -> TokenStream:
    """Drop all-punctuation tokens and strip punctuation off token edges.

    Emoji tokens and ``:alias:`` placeholders pass through unchanged;
    interior punctuation (apostrophes, underscores) is preserved.
    """
    out: list[str] = []
    for token in stream.tokens:
        if is_emoji_token(token) or is_alias_placeholder(token):
            out.append(token)
            continue
        i, j = 0, len(token)
        while i < j and _is_punct_char(token[i]):
            i += 1
        while j > i and _is_punct_char(token[j - 1]):
            j -= 1
        if i < j:
            out.append(token[i:j])
    return TokenStream(tuple(out), stream.source_id)


def remove_stopwords(stream: TokenStream, stoplist: StopList | None = None) -> TokenStream:
    if stoplist is None:
        stoplist = default_stoplist()
    return TokenStream(
        tuple(t for t in stream.tokens if t not in stoplist), stream.source_id
    )


def _lemmatize_word(word: str, dictionary: LemmaDictionary) -> str:
    # Iterate to a fixed point so the operation is idempotent regardless
    # of how suffixes stack ("blessings" -> "bless" in one call).
    current = word
    for _ in range(16):
        if current in dictionary.exceptions:
            nxt = dictionary.exceptions[current]
        else:
            nxt = current
            for suffix, replacement, min_stem in dictionary.suffix_rules:
                if current.endswith(suffix) and len(current) - len(suffix) >= min_stem:
                    nxt = current[: len(current) - len(suffix)] + replacement
                    break
        if nxt == current:
            return current
        current = nxt
    return current


def lemmatize(stream: TokenStream, dictionary: LemmaDictionary | None = None) -> TokenStream:
    """Map tokens to their dictionary base form.

    Exceptions are consulted first, then the ordered suffix rules;
    tokens that match nothing pass through unchanged.
    """
    if dictionary is None:
        dictionary = default_lemma_dictionary()
    return TokenStream(
        tuple(_lemmatize_word(t, dictionary) for t in stream.tokens), stream.source_id
    )


# ---------------------------------------------------------------------------
# String-level steps


def normalize_emoticons(text: str, emoticon_map: EmoticonMap | None = None) -> str:
    """Replace emoticons bounded by whitespace/string edges with
    ``:alias:`` placeholders, preferring the longest matching entry."""
    if emoticon_map is None:
        emoticon_map = default_emoticon_map()
    entries = emoticon_map.entries
    out: list[str] = []
    for i, part in enumerate(_split_keep_spaces(text)):
        if i % 2 == 0 and part in entries:
            out.append(f":{entries[part]}:")
        else:
            out.append(part)
    return "".join(out)


def _split_keep_spaces(text: str) -> list[str]:
    """Alternating [chunk, space, chunk, ...] split preserving whitespace."""
    parts: list[str] = []
    buf: list[str] = []
    in_space = False
    for ch in text:
        if ch.isspace() != in_space:
            parts.append("".join(buf))
            buf = []
            in_space = not in_space
        buf.append(ch)
    parts.append("".join(buf))
    return parts


def encode_emojis(
    text: str,
    mode: EmojiMode = EmojiMode.ML_PLAIN,
    aliases: Mapping[str, str] | None = None,
    unknown_counter: Counter | None = None,
) -> str:
    """Replace every emoji code point with its textual alias.

    ML_PLAIN writes the bare snake_case alias; BERT_DELIMITED wraps it
    in colons. ``:alias:`` placeholders already present (from emoticon
    normalization) are rewritten to match the mode, so an emoticon and
    its emoji counterpart end up as the same token. Unknown emojis
    become the ``unknown_emoji`` alias (and are tallied in
    ``unknown_counter`` when given) rather than failing. A space is
    inserted where a replacement would otherwise fuse with adjacent
    non-space text, so each alias stays one token.
    """
    if aliases is None:
        aliases = default_emoji_aliases()
    if mode is EmojiMode.ML_PLAIN:
        parts = _split_keep_spaces(text)
        for i in range(0, len(parts), 2):
            if is_alias_placeholder(parts[i]):
                parts[i] = parts[i][1:-1]
        text = "".join(parts)
    out: list[str] = []
    last = ""  # last emitted character
    pending_space = False
    for ch in text:
        if _is_modifier(ch):
            continue
        if is_emoji_char(ch):
            alias = aliases.get(ch)
            if alias is None:
                alias = UNKNOWN_EMOJI_ALIAS
                if unknown_counter is not None:
                    unknown_counter[ch] += 1
            rendered = alias if mode is EmojiMode.ML_PLAIN else f":{alias}:"
            if last and not last.isspace():
                out.append(" ")
            out.append(rendered)
            last = rendered[-1]
            pending_space = True
            continue
        if pending_space and not ch.isspace():
            out.append(" ")
        pending_space = False
        out.append(ch)
        last = ch
    return "".join(out)


# ---------------------------------------------------------------------------
# Pipeline


def run_pipeline(
    text: str,
    config: PreprocessConfig,
    stoplist: StopList | None = None,
    dictionary: LemmaDictionary | None = None,
    emoticon_map: EmoticonMap | None = None,
    aliases: Mapping[str, str] | None = None,
    source_id: str = "",
    unknown_counter: Counter | None = None,
) -> TokenStream:
    """Apply the selected steps in canonical order and tokenize.

    Lowercasing and emoji encoding run on the raw string (before
    tokenization); punctuation, stop-word and lemma steps run on the
    token stream. The result equals composing the individual operations
    by hand.
    """
    for step in config.steps:
        if not isinstance(step, Step):
            raise ValueError(f"unknown pipeline step: {step!r}")
    if Step.LOWERCASING in config.steps:
        text = text.lower()
    if Step.EMOJI_ENCODING in config.steps:
        text = normalize_emoticons(text, emoticon_map)
        text = encode_emojis(text, config.emoji_mode, aliases, unknown_counter)
    stream = tokenize(text, source_id)
    if Step.PUNCTUATION_REMOVAL in config.steps:
        stream = remove_punctuation(stream)
    if Step.STOPWORD_REMOVAL in config.steps:
        stream = remove_stopwords(stream, stoplist)
    if Step.LEMMATIZATION in config.steps:
        stream = lemmatize(stream, dictionary)
    return stream


# ---------------------------------------------------------------------------
# Bundled resource loading


def load_stoplist(path: str | Path, extensions: Iterable[str] = STOPWORD_EXTENSIONS) -> StopList:
    """Stop-list file: one word per line, '#' comments allowed."""
    words = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line.lower())
    return StopList(base=frozenset(words), extensions=tuple(extensions))


def load_emoticon_map(path: str | Path) -> EmoticonMap:
    return EmoticonMap(entries=_read_tsv_map(path))


def load_emoji_aliases(path: str | Path) -> dict[str, str]:
    return _read_tsv_map(path)


def load_lemma_dictionary(words_path: str | Path, rules_path: str | Path) -> LemmaDictionary:
    exceptions = _read_tsv_map(words_path)
    rules: list[tuple[str, str, int]] = []
    for line in Path(rules_path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"bad suffix rule line: {line!r}")
        rules.append((parts[0], parts[1], int(parts[2])))
    return LemmaDictionary(exceptions=exceptions, suffix_rules=tuple(rules))


def _read_tsv_map(path: str | Path) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        key, sep, value = line.partition("\t")
        if not sep:
            raise ValueError(f"expected key<TAB>value in {path}: {line!r}")
        mapping[key] = value
    return mapping


def default_stoplist() -> StopList:
    return _resources.cached("stoplist", lambda p: load_stoplist(p / "stopwords.txt"))


def default_emoticon_map() -> EmoticonMap:
    return _resources.cached("emoticons", lambda p: load_emoticon_map(p / "emoticons.tsv"))


def default_emoji_aliases() -> dict[str, str]:
    return _resources.cached(
        "emoji_aliases", lambda p: load_emoji_aliases(p / "emoji_aliases.tsv")
    )


def default_lemma_dictionary() -> LemmaDictionary:
    return _resources.cached(
        "lemmas",
        lambda p: load_lemma_dictionary(p / "lemma_exceptions.tsv", p / "lemma_rules.tsv"),
    )
