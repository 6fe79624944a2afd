"""Exception hierarchy shared by all modkit modules.

Every error carries an ``exit_code`` used by the command-line front end:
2 for usage/configuration problems, 3 for data problems, 4 for numeric
failures.
"""

from __future__ import annotations


class ModkitError(Exception):
    """Base class for all modkit errors."""

    exit_code = 3


class ConfigError(ModkitError):
    """Invalid run configuration (bad flag value, missing input path)."""

    exit_code = 2


class MalformedJsonError(ModkitError):
    """Input is not syntactically valid JSON."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class SchemaViolationError(ModkitError):
    """JSON parsed but does not match the comment-tree schema."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{message} (at {path})" if path else message)
        self.path = path


class DuplicateIdError(ModkitError):
    """A comment id occurs more than once in one tree."""


class UnknownCommentIdError(ModkitError):
    """A label refers to a comment id that is not in the corpus."""


class EmptyClassError(ModkitError):
    """Balancing requires at least one entry in each class."""


class BadRatiosError(ConfigError, ValueError):
    """Split ratios are negative or do not sum to 1."""


class BadNError(ConfigError, ValueError):
    """N-gram order outside {1, 2, 3}."""


class BadBucketWidthError(ConfigError, ValueError):
    """Histogram bucket width must be a positive integer."""


class EmptyDatasetError(ModkitError):
    """Operation requires a non-empty dataset."""


class EmptyTableError(ModkitError):
    """Operation requires a non-empty ranking table."""


class EmptyCorpusError(ModkitError):
    """Operation requires a non-empty corpus."""


class SingleClassError(ModkitError):
    """Training requires examples from both classes."""


class BadAlphaError(ConfigError, ValueError):
    """Smoothing constant must be strictly positive."""


class NonFiniteLossError(ModkitError):
    """Training loss became NaN or infinite (learning rate too high)."""

    exit_code = 4


class LengthMismatchError(ModkitError, ValueError):
    """Paired sequences have different lengths."""


class EmptyEvalError(ModkitError):
    """Evaluation requires at least one example."""


class EmptyVocabError(ModkitError):
    """Tokenizer vocabulary contains no usable tokens."""


class BadTokenError(ModkitError, ValueError):
    """Vocabulary token is empty or contains whitespace."""
