"""
Error Types

Every failure the toolkit reports to a caller derives from BottToolkitError.
Each error carries a stable code and a JSON-ready payload so the CLI can emit
structured error objects without knowing the individual classes.
"""

from typing import Any, Dict, Optional


class BottToolkitError(Exception):
    """Base class for domain errors."""

    code = "BottToolkitError"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used by the CLI error output."""
        payload: Dict[str, Any] = {"error": self.code, "message": self.message}
        payload.update(self.details)
        return payload


class InternalConsistencyError(BottToolkitError):
    """Raised when data that is valid by construction fails a check."""

    code = "InternalConsistencyError"


class MalformedBottNumbers(BottToolkitError):
    code = "MalformedBottNumbers"


class NonSmoothFan(InternalConsistencyError):
    code = "NonSmoothFan"


class SingularSystem(InternalConsistencyError):
    code = "SingularSystem"


class IndexOutOfRange(BottToolkitError):
    code = "IndexOutOfRange"

    def __init__(self, name: str, value: int, low: int, high: Optional[int] = None):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        super().__init__(
            f"{name}={value} outside {bound}",
            index=name, value=value, low=low, high=high,
        )


class LengthMismatch(BottToolkitError):
    code = "LengthMismatch"

    def __init__(self, what: str, expected: int, actual: int):
        super().__init__(
            f"{what} has length {actual}, expected {expected}",
            what=what, expected=expected, actual=actual,
        )


class NonPositiveBottNumbers(BottToolkitError):
    code = "NonPositiveBottNumbers"


class NotNef(BottToolkitError):
    code = "NotNef"


class InvalidPair(BottToolkitError):
    code = "InvalidPair"

    def __init__(self, index: int):
        super().__init__(f"coordinate pair {index} is (0, 0)", pair=index)
        self.index = index


class MissingValues(BottToolkitError):
    code = "MissingValues"


class InvalidCoordinate(BottToolkitError):
    """A coordinate or torus parameter whose value breaks its constraints."""

    code = "InvalidCoordinate"


class ParseError(BottToolkitError):
    code = "ParseError"

    def __init__(self, message: str, text: Optional[str] = None):
        if text is None:
            super().__init__(message)
        else:
            super().__init__(message, input=text)


class DiscrepancyFound(BottToolkitError):
    code = "DiscrepancyFound"

    def __init__(self, message: str, cone: Any, **details: Any):
        super().__init__(message, **details)
        self.cone = cone


class BoundViolated(BottToolkitError):
    code = "BoundViolated"

    def __init__(self, message: str, wall: Any, **details: Any):
        super().__init__(message, **details)
        self.wall = wall
