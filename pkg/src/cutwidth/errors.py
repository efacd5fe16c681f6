class GraphFormatError(ValueError):
    """Raised when graph text (graph6 or edge list) cannot be decoded."""

    def __init__(self, message, *, offset=None, line=None):
        where = []
        if offset is not None:
            where.append(f"byte offset {offset}")
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class CapacityError(ValueError):
    """Raised when an exact solver is asked to go past its size cap."""
