"""Exception types shared across the package."""


class InvalidTreeError(ValueError):
    """Edge list does not describe a tree."""


class ParameterError(ValueError):
    """Family or operation parameters outside their valid domain."""


class PreconditionError(ValueError):
    """Transformation site lacks the required local structure."""


class LimitError(ValueError):
    """Requested size exceeds a configured resource guard."""


class TreeFormatError(ValueError):
    """Malformed line in the tree text format."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
