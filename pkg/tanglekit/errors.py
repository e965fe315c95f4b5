from __future__ import annotations

from typing import Optional


class TanglekitError(Exception):
    """Base class for every domain error raised by the library."""


class BraidError(TanglekitError):
    pass


class FreeWordError(TanglekitError):
    pass


class GTPairError(TanglekitError):
    pass


class ParseError(TanglekitError):
    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class InconsistentTangle(TanglekitError):
    def __init__(self, index: int, below: str, above: str) -> None:
        super().__init__(
            f"junction {index}: target of element {index} is {below!r} "
            f"but element {index + 1} expects {above!r}"
        )
        self.index = index


class BoundaryError(TanglekitError):
    pass


class NotALink(TanglekitError):
    pass


class NotAKnot(TanglekitError):
    pass


class CrossingCapExceeded(TanglekitError):
    def __init__(self, crossings: int, cap: int) -> None:
        super().__init__(f"{crossings} crossings exceed the configured cap of {cap}")
        self.crossings = crossings
        self.cap = cap


class IllegalMove(TanglekitError):
    def __init__(self, move: str, condition: str, position: Optional[int] = None) -> None:
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{move}{where}: {condition}")
        self.move = move
        self.condition = condition
        self.position = position


class SlideError(TanglekitError):
    """A constructive rewrite met a diagram outside the shape it handles."""
