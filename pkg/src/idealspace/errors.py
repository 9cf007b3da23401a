"""Exception hierarchy.

Every error carries a machine-readable ``code`` (the class name unless
overridden) so the command line can report it without parsing messages.
"""

from __future__ import annotations


class IdealSpaceError(Exception):
    """Base class for all library errors."""

    code = "IdealSpaceError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": str(self)}
        if self.details:
            out["details"] = {k: _plain(v) for k, v in self.details.items()}
        return out


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    members = getattr(value, "members", None)
    if members is not None:
        return list(members)
    return value


class InputError(IdealSpaceError):
    """Raised for invalid user-supplied structures."""

    code = "InputError"


class CarrierMismatch(InputError):
    code = "CarrierMismatch"


class PointOutOfRange(InputError):
    code = "PointOutOfRange"


class EmptyCarrier(InputError):
    code = "EmptyCarrier"


class MissingEmptyOrFull(InputError):
    code = "MissingEmptyOrFull"


class NotClosedUnderUnion(InputError):
    code = "NotClosedUnderUnion"


class NotClosedUnderIntersection(InputError):
    code = "NotClosedUnderIntersection"


class MissingEmpty(InputError):
    code = "MissingEmpty"


class NotDownClosed(InputError):
    code = "NotDownClosed"


class NotUnionClosed(InputError):
    code = "NotUnionClosed"


class InvalidMap(InputError):
    code = "InvalidMap"


class BoundTooLarge(InputError):
    code = "BoundTooLarge"


class UnknownTheorem(InputError):
    code = "UnknownTheorem"


class InvalidClaim(InputError):
    code = "InvalidClaim"


class DocumentSyntaxError(InputError):
    """Malformed document text; ``line`` and ``column`` are 1-based."""

    code = "SyntaxError"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})", line=line, column=column)
        self.line = line
        self.column = column


class SchemaError(InputError):
    code = "SchemaError"


class UnknownField(SchemaError):
    code = "UnknownField"


class FormatVersionMismatch(SchemaError):
    code = "FormatVersionMismatch"


class UnknownLabel(SchemaError):
    code = "UnknownLabel"


class InternalInvariantViolation(IdealSpaceError):
    """A derived structure broke an invariant that the mathematics guarantees."""

    code = "InternalInvariantViolation"


class NonStabilization(InternalInvariantViolation):
    code = "NonStabilization"
