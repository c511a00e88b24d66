"""Shared exception types."""


class LimitError(Exception):
    """An input exceeds a documented operational limit of this library."""


class Graph6Error(ValueError):
    """Malformed graph6 text. `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class SearchAbort(Exception):
    """An internal consistency guard tripped; indicates a bug, not bad input."""
