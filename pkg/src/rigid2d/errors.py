"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was invoked on input that violates its stated preconditions."""


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(ValueError):
    """Malformed plain edge-list text.  ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CorpusError(ValueError):
    """Malformed line in a graph6 stream.  ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
