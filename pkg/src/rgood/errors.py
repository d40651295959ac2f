"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class RGoodError(Exception):
    """Base class; ``kind`` is the machine-readable tag used by the CLI."""

    kind = "error"


class ParseError(RGoodError, ValueError):
    kind = "syntax-error"


class UnknownGeneratorError(ParseError):
    kind = "unknown-generator"


class DuplicateGeneratorError(ParseError):
    kind = "duplicate-generator"


class ValidationError(RGoodError, ValueError):
    kind = "invalid-input"


class DisconnectedComplexError(ValidationError):
    kind = "disconnected-complex"


class UnsupportedRingError(RGoodError, ValueError):
    kind = "unsupported-ring"


class CompositeModulusError(UnsupportedRingError):
    kind = "composite-modulus"


class ContradictionError(RGoodError, RuntimeError):
    """A Good rule and a Bad rule fired on the same input."""

    kind = "internal-contradiction"
