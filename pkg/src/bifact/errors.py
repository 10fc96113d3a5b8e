"""Exception hierarchy shared across the package.

Two broad families map onto the CLI exit codes: ``ContractError`` for
usage, schema, and precondition violations (exit code 2), and
``RuntimeFailure`` for errors hit while executing an otherwise valid
request, such as backend or parsing trouble (exit code 1).
"""

from __future__ import annotations


class BifactError(Exception):
    """Base class for every error raised by this package."""


class ContractError(BifactError):
    """A documented precondition, schema, or CLI contract was violated."""


class RuntimeFailure(BifactError):
    """A valid request failed during execution (backend, I/O, parsing)."""


# ---------------------------------------------------------------------------
# scoring arithmetic


class EmptyFactList(ContractError):
    """A fact list that must be non-empty was empty."""


class OutOfRange(ContractError):
    """A score or threshold fell outside its documented range."""


class LabelMismatch(RuntimeFailure):
    """A fact label does not line up with the fact list it describes.

    Signals judge-output drift; the raw judge response, when available,
    is attached for debugging.
    """

    def __init__(self, message: str, raw: str | None = None):
        super().__init__(message)
        self.raw = raw


# ---------------------------------------------------------------------------
# judge and embedding backends


class BackendUnavailable(RuntimeFailure):
    """The backend could not be reached or kept failing after retries."""


class ParseFailure(RuntimeFailure):
    """A backend response did not match the required output schema."""

    def __init__(self, message: str, raw: str | None = None):
        super().__init__(message)
        self.raw = raw


class EmptyFactorization(RuntimeFailure):
    """The judge decomposed an intent into zero facts."""


class ZeroVector(ContractError):
    """An embedding had zero norm, so cosine similarity is undefined."""


class EmptyReference(ContractError):
    """The reference token sequence is too short for the metric."""


# ---------------------------------------------------------------------------
# calibration and statistics


class MissingLabel(ContractError):
    """A scored pair has no matching human label (or vice versa)."""


class DuplicatePair(ContractError):
    """The same pair appears more than once where uniqueness is required."""


class DegenerateLabels(ContractError):
    """Labels are all-positive or all-negative; a sweep is meaningless."""


class EmptyInput(ContractError):
    """An input collection that must be non-empty was empty."""


class DegenerateMarginals(ContractError):
    """Expected agreement is 1, so Cohen's kappa is undefined."""


class ConstantSeries(ContractError):
    """A series is constant, so Pearson correlation is undefined."""


class LengthMismatch(ContractError):
    """Paired series differ in length or are too short."""


# ---------------------------------------------------------------------------
# datasets and CLI


class ParseError(ContractError):
    """A data file line is not valid JSON."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ValidationError(ContractError):
    """A record field violates its schema."""

    def __init__(self, line: int, field: str, reason: str):
        super().__init__(f"line {line}, field {field!r}: {reason}")
        self.line = line
        self.field = field
        self.reason = reason


class DuplicateKey(ContractError):
    """Two records share a key that must be unique within the file."""


class RefusedOverwrite(ContractError):
    """An output file already exists and --force was not given."""


class MissingGoldFacts(ContractError):
    """A prediction references a gold intent with no stored factorization."""


class MissingThreshold(ContractError):
    """A continuous metric has no calibrated threshold available."""


class ConfigError(ContractError):
    """The run configuration is malformed."""
