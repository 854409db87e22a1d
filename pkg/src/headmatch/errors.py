"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Tensor shapes are incompatible for the requested operation."""


class InputError(ValueError):
    """Invalid input data (bad token id, bad label, malformed record)."""


class NumericError(ArithmeticError):
    """A computation produced a non-finite value where one is not allowed."""


class ConfigError(ValueError):
    """Invalid or inconsistent configuration. CLI maps this to exit code 2."""


class FormatError(ValueError):
    """A binary file has the wrong magic bytes or an unsupported version."""


class CorruptionError(ValueError):
    """A binary file failed an integrity check (checksum, truncation)."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class FingerprintMismatchError(ValueError):
    """Cached representations were produced by a different model.

    CLI maps this to exit code 3.
    """

    def __init__(self, expected, actual):
        super().__init__(
            "fingerprint mismatch: cache was built with a different "
            f"model/config (expected {expected.hex()}, got {actual.hex()})"
        )
        self.expected = expected
        self.actual = actual


class TrainingDivergedError(RuntimeError):
    """Training hit a non-finite loss and was aborted."""
