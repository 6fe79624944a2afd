"""WordPiece subword tokenizer with slang/emoji vocabulary augmentation.

Standard greedy longest-match-first inference: each whitespace word is
segmented left to right, always taking the longest vocabulary entry that
matches, with continuations carrying the ``##`` prefix. Registering
domain tokens (slang words, ``:emoji_alias:`` placeholders) shrinks the
number of pieces a corpus fragments into, which the
:func:`fragmentation_rate` metric quantifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import _resources
from .errors import BadTokenError, ConfigError, EmptyCorpusError, EmptyVocabError

UNK = "[UNK]"
CLS = "[CLS]"
SEP = "[SEP]"
PAD = "[PAD]"
SPECIALS = (PAD, UNK, CLS, SEP)
CONTINUATION_PREFIX = "##"

#: Words longer than this become [UNK] outright.
MAX_WORD_CHARS = 100

#: Default maximum sequence length, matching the platform comment limit.
DEFAULT_MAX_LENGTH = 150


@dataclass(frozen=True)
class WordPieceVocab:
    tokens: dict[str, int]

    def __post_init__(self):
        for special in SPECIALS:
            if special not in self.tokens:
                raise EmptyVocabError(f"vocabulary missing special token {special}")
        ids = sorted(self.tokens.values())
        if ids != list(range(len(ids))):
            raise EmptyVocabError("token ids must be contiguous from 0")

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.tokens

    def id_of(self, token: str) -> int:
        return self.tokens[token]


@dataclass(frozen=True)
class Encoding:
    ids: tuple[int, ...]
    tokens: tuple[str, ...]
    truncated: bool = False

    def __post_init__(self):
        if len(self.ids) != len(self.tokens):
            raise ValueError("ids and tokens must have equal length")

    def __len__(self) -> int:
        return len(self.tokens)


def load_vocab(path: str | Path) -> WordPieceVocab:
    """Vocabulary file: one token per line; line number = id."""
    tokens: dict[str, int] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        token = line.rstrip("\n")
        if not token:
            continue
        if token in tokens:
            raise BadTokenError(f"duplicate vocabulary token {token!r}")
        tokens[token] = len(tokens)
    return WordPieceVocab(tokens=tokens)


def save_vocab(vocab: WordPieceVocab, path: str | Path) -> None:
    ordered = sorted(vocab.tokens, key=vocab.tokens.__getitem__)
    Path(path).write_text("\n".join(ordered) + "\n", encoding="utf-8")


def default_vocab() -> WordPieceVocab:
    return _resources.cached("wordpiece_vocab", lambda p: load_vocab(p / "wordpiece_vocab.txt"))


def _segment_word(word: str, vocab: WordPieceVocab) -> list[str]:
    """Greedy longest-match segmentation; [UNK] when no split works."""
    if len(word) > MAX_WORD_CHARS:
        return [UNK]
    pieces: list[str] = []
    start = 0
    while start < len(word):
        end = len(word)
        piece = None
        while start < end:
            candidate = word[start:end]
            if start > 0:
                candidate = CONTINUATION_PREFIX + candidate
            if candidate in vocab:
                piece = candidate
                break
            end -= 1
        if piece is None:
            return [UNK]
        pieces.append(piece)
        start = end
    return pieces


def wordpiece_encode(
    text: str,
    vocab: WordPieceVocab | None = None,
    max_length: int = DEFAULT_MAX_LENGTH,
    pad_to_max: bool = False,
) -> Encoding:
    """Encode preprocessed text into [CLS] pieces... [SEP] (+ padding).

    Expects lowercased input with ``:alias:`` emoji placeholders intact;
    a placeholder registered in the vocabulary emits exactly one token.
    Sequences longer than ``max_length`` are truncated (flag set) while
    keeping the trailing [SEP].
    """
    if vocab is None:
        vocab = default_vocab()
    if len(vocab.tokens) <= len(SPECIALS):
        raise EmptyVocabError("vocabulary has no usable tokens")
    if max_length < 2:
        raise ConfigError(f"max_length must be >= 2, got {max_length}")
    pieces: list[str] = [CLS]
    for word in text.split():
        pieces.extend(_segment_word(word, vocab))
    truncated = False
    if len(pieces) + 1 > max_length:
        pieces = pieces[: max_length - 1]
        truncated = True
    pieces.append(SEP)
    if pad_to_max:
        pieces.extend([PAD] * (max_length - len(pieces)))
    ids = tuple(vocab.id_of(p) for p in pieces)
    return Encoding(ids=ids, tokens=tuple(pieces), truncated=truncated)


def augment_vocab(vocab: WordPieceVocab, new_tokens: Iterable[str]) -> WordPieceVocab:
    """Append genuinely new tokens with the next free ids.

    Existing ids never change, so anything keyed on them stays valid.
    Tokens are lowercased on insertion to match the uncased pipeline.
    """
    tokens = dict(vocab.tokens)
    for token in new_tokens:
        if not token or any(c.isspace() for c in token):
            raise BadTokenError(f"invalid vocabulary token {token!r}")
        token = token.lower()
        if token not in tokens:
            tokens[token] = len(tokens)
    return WordPieceVocab(tokens=tokens)


@dataclass(frozen=True)
class FragmentationRate:
    pieces_per_word: float
    split_word_fraction: float

    def __iter__(self):
        return iter((self.pieces_per_word, self.split_word_fraction))


def fragmentation_rate(
    corpus: Sequence[str],
    vocab: WordPieceVocab | None = None,
) -> FragmentationRate:
    """How finely the vocabulary fragments a corpus.

    pieces_per_word counts emitted word pieces (an [UNK] emission counts
    as one piece; [CLS]/[SEP]/[PAD] framing is excluded) divided by
    whitespace words. split_word_fraction is the share of words that
    emit two or more pieces or fall back to [UNK].
    """
    if vocab is None:
        vocab = default_vocab()
    total_words = 0
    total_pieces = 0
    split_words = 0
    for text in corpus:
        for word in text.split():
            pieces = _segment_word(word, vocab)
            total_words += 1
            total_pieces += len(pieces)
            if len(pieces) >= 2 or pieces == [UNK]:
                split_words += 1
    if total_words == 0:
        raise EmptyCorpusError("fragmentation rate needs at least one word")
    return FragmentationRate(
        pieces_per_word=total_pieces / total_words,
        split_word_fraction=split_words / total_words,
    )
