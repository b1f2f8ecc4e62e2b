"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed hypergraph or coloring text.  Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InstanceTooLargeError(ValueError):
    """An exhaustive engine was asked to enumerate past its hard guard."""
