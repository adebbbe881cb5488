"""Miscellaneous support functions that are used at different places."""

import math
import time
from fractions import Fraction
from functools import wraps
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import TypeVar, ParamSpec, Optional, Any
from collections.abc import Callable, Iterable, Iterator

import numpy as np
from loguru import logger

from latskew import constants as const
from latskew.errors import ConfigError


__all__ = [
    "timed",
    "parse_rational",
    "parse_pair",
    "format_float",
    "rational_sqrt",
    "compensated_sum",
    "ordered_map",
    "from_locals"
]


_T = TypeVar("_T")
_P = ParamSpec("_P")


def timed(label: str) -> Callable[[Callable[_P, _T]], Callable[_P, _T]]:
    """
    Log wall-clock duration of the decorated call.

    :param label: Name used in the log record
    """
    def wrapper(func: Callable[_P, _T]) -> Callable[_P, _T]:
        @wraps(func)
        def inner(*args: _P.args, **kwargs: _P.kwargs) -> _T:
            start = time.perf_counter()
            result = func(*args, **kwargs)
            logger.info(f"{label} finished in {time.perf_counter() - start:.3f}s")
            return result
        return inner

    return wrapper


def parse_rational(text: str) -> Fraction:
    """Parse decimal or p/q notation into an exact rational."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"Not a rational number: {text!r}.")
    return value


def parse_pair(text: str) -> tuple[str, str]:
    """Split an ``x,y`` argument into its two components."""
    parts = text.split(",")
    if len(parts) != 2 or not all(p.strip() for p in parts):
        raise ConfigError(f"Expected a pair 'x,y', got {text!r}.")
    return parts[0].strip(), parts[1].strip()


def format_float(value: float | Fraction) -> str:
    """Round-trip safe representation with 17 significant digits."""
    return format(float(value) + 0.0, f".{const.FLOAT_DIGITS}g")


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Return the rational square root of q if it exists."""
    if q < 0:
        return None
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def compensated_sum(values: np.ndarray) -> complex:
    """Exactly rounded sum of a real or complex array.

    The result does not depend on the order of the values.
    """
    if np.iscomplexobj(values):
        return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))
    return complex(math.fsum(values.tolist()), 0.0)


def from_locals(
    loc: dict[str, Any], exclude: tuple[str, ...] = ("self",)
) -> dict[str, Any]:
    """Get arguments of calling function from its locals to pass them further.

    :param loc: locals of calling function (or ``vars`` of parsed arguments)
    :param exclude: arguments to be excluded
    """
    return {k: v for k, v in loc.copy().items() if k not in exclude and v is not None}


def ordered_map(
    func: Callable[[_T], Any], items: Iterable[_T], workers: int = 1, pool: Optional[Executor] = None
) -> Iterator[Any]:
    """Map in input order, in worker processes when ``workers`` > 1.

    Results arrive in the order of ``items`` whatever the scheduling, which
    keeps every reduction over them independent of the worker count.

    :param pool: Executor owned by the caller; a new one is started otherwise
    """
    if pool is not None:
        yield from pool.map(func, items)
        return
    if workers <= 1:
        yield from map(func, items)
        return

    with ProcessPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(func, items)
