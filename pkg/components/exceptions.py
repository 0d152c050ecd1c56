from typing import Optional, Sequence, Tuple


class TilingLabError(Exception):
    """Base class for every error raised by the library."""


class ParameterError(TilingLabError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class CapacityError(TilingLabError):
    """A size cap, copy-enumeration cap or search budget was exceeded."""


class EdgeListError(ParameterError):

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class NonBipartiteError(ParameterError):

    def __init__(self, message: str, odd_walk: Optional[Sequence[int]] = None, edge: Optional[Tuple[int, int]] = None) -> None:
        super().__init__(message)
        self.odd_walk = tuple(odd_walk) if odd_walk is not None else None
        self.edge = edge


class DominationError(ParameterError):
    pass


class InvalidTilingError(ParameterError):
    pass


class InvalidAugmentationError(ParameterError):
    pass
