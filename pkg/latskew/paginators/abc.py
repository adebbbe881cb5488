from abc import ABC, abstractmethod
from collections.abc import Iterator
from typing import Generic, TypeVar

from typing_extensions import Self

from latskew import errors


__all__ = ["ABCPaginator"]


_T = TypeVar("_T")


class ABCPaginator(ABC, Generic[_T]):
    """Abstract paginator class."""
    @abstractmethod
    def __init__(self, *args, **kwargs) -> None:
        pass

    def __iter__(self) -> Iterator[_T]:
        return self

    def __next__(self) -> _T:
        try:
            return self.next_chunk()
        except errors.LastChunk:
            self.close()
            raise StopIteration

    def __enter__(self) -> Self:
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    @abstractmethod
    def next_chunk(self) -> _T:
        """Get paginator next chunk."""

    @abstractmethod
    def complete_params(self) -> None:
        """Complete params passed to paginator for further use."""

    def close(self) -> None:
        """Release worker processes, if any."""
