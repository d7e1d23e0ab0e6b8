"""Exception types shared across the package.

Everything user-input related derives from ValidationError so callers (and
the CLI) can distinguish bad data (exit 1) from genuine I/O trouble (exit 2).
"""


class ValidationError(ValueError):
    """Input failed validation: corpus record, profile, score file, or config."""


class CorpusError(ValidationError):
    """A corpus file or record is malformed.

    Carries enough context to point a user at the offending spot: file path,
    1-based line number, and doc_id where known.
    """

    def __init__(self, message, *, path=None, line=None, doc_id=None):
        self.path = path
        self.line = line
        self.doc_id = doc_id
        parts = []
        if path is not None:
            parts.append(str(path))
        if line is not None:
            parts.append(f"line {line}")
        if doc_id is not None:
            parts.append(f"doc {doc_id!r}")
        prefix = ", ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class ProfileError(ValidationError):
    """A language profile is inconsistent or cannot be parsed."""


class ScoringError(ValidationError):
    """Scoring preconditions are not met (doc_id mismatch, empty reference, ...)."""


class StatsError(ValidationError):
    """Statistical preconditions are not met (id mismatch, zero variance, ...)."""
