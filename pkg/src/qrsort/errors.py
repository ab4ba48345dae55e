"""Exception types shared across the package."""

from __future__ import annotations


class QrSortError(Exception):
    """Base class for all package-specific errors."""


class RangeOverflowError(QrSortError):
    """max - min + 1 of an element sequence does not fit in a signed 64-bit int."""


class InvalidDivisorError(QrSortError):
    """Divisor is zero or negative."""


class InvalidRangeError(QrSortError):
    """Value range (max - min + 1) passed to a divisor helper is < 1."""


class ModeMismatchError(QrSortError):
    """Key mode is incompatible with the divisor or the input.

    Raised for BITWISE with a divisor that is not 2**shift_bits, and for
    SUBTRACTION_FREE on input containing negative values.
    """


class KeyRangeError(QrSortError):
    """Keys were computed against a different bound than the counts buffer."""


class RangeExceedsMemoryError(QrSortError):
    """Value range is larger than the configured counting-bin cap."""


class CorrectnessFault(QrSortError):
    """An algorithm under benchmark produced output that disagrees with the rest."""


class CsvFormatError(QrSortError):
    """A CSV file does not match the expected schema.

    ``line`` is the 1-based line number of the offending row (the header is
    line 1).
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
