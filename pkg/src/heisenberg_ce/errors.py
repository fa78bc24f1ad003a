class EngineError(Exception):
    """Base class for domain errors raised by the engine."""


class MixedDegree(EngineError, ValueError):
    pass


class NotACocycle(EngineError, ValueError):
    pass


class NotIntegrable(EngineError, ValueError):
    pass


class InvalidClass(EngineError, ValueError):
    pass


class DegreeMismatch(EngineError, ValueError):
    pass


class DegreeOutOfRange(EngineError, ValueError):
    pass


class ParseError(EngineError, ValueError):
    """Syntax error in the expression language.

    Carries 1-based ``line``/``column`` and the set of tokens that would
    have been accepted at that point.
    """

    def __init__(self, message: str, text: str = "", pos: int = 0, expected=()):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at line {self.line}, column {self.column}{detail}")
