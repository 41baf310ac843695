"""Exception hierarchy.

Everything derives from ValueError so callers that only care about
"bad input" can catch one thing.
"""


class YoungsumError(ValueError):
    pass


class ParseError(YoungsumError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


class BoxOutsideDiagramError(YoungsumError):
    pass


class NotAnEdgeError(YoungsumError):
    pass


class CapExceededError(YoungsumError):
    pass


class DegenerateParameterError(YoungsumError):
    pass


class InvalidIndexError(YoungsumError):
    pass


class UnsupportedParameterError(YoungsumError):
    pass


class PoleError(YoungsumError):
    pass


class QuadratureError(YoungsumError):
    pass
