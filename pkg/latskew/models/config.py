from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Optional, Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from latskew import constants as const, errors, types
from latskew.utils import parse_rational
from .lattice import LatticeShape
from .orbits import EnumSpec


__all__ = ["RunConfig"]


_NEEDS_BOUND = (types.Command.ENUMERATE, types.Command.STATS, types.Command.WEYL)


def _split(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _rational(value: Any) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def _parse_lattice(data: dict[str, Any]) -> LatticeShape:
    z, z_norm, force_float = data.pop("z", None), data.pop("z_norm", None), data.pop("float", False)
    if z is not None and z_norm is not None:
        raise errors.ConfigError("Options --z and --z-norm are mutually exclusive.")
    if z_norm is not None:
        lattice = LatticeShape.parse_norm(z_norm)
        return lattice.perturbed() if force_float else lattice
    return LatticeShape.parse(z or const.DEFAULT_Z, exact=not force_float)


class RunConfig(BaseModel):
    """Validated options of one CLI invocation.

    Numeric options arrive as strings and are parsed exactly, so that
    ``--max-norm 1`` and ``--epsilon 1`` keep their boundary cases rational.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    command: types.Command
    lattice: LatticeShape
    max_norm: Optional[Fraction] = None
    epsilon: Optional[Fraction] = None
    m: int = 0
    m_list: tuple[int, ...] = const.DEFAULT_FREQUENCIES
    s: Optional[tuple[float, float]] = None
    trunc: Optional[float] = Field(None, gt=0)
    bins: int = Field(const.DEFAULT_BINS, ge=2)
    workers: int = Field(const.DEFAULT_WORKERS, ge=1)
    chunk: int = Field(const.DEFAULT_CHUNK, ge=1)
    out: Optional[Path] = None
    format: Optional[types.OutputFormat] = None
    input: Optional[Path] = None
    interval: tuple[float, float] = const.DEFAULT_INTERVAL
    eps_grid: tuple[Fraction, ...] = ()
    t_grid: tuple[Fraction, ...] = ()
    laplacian_check: bool = False
    h: float = Field(const.DEFAULT_STEP, gt=0, lt=0.1)
    tolerance: float = Field(const.DEFAULT_TOLERANCE, gt=0)
    fixed_cosets: bool = False

    @model_validator(mode="before")
    @classmethod
    def parse_strings(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        if "lattice" not in data:
            data["lattice"] = _parse_lattice(data)

        for key in ("max_norm", "epsilon"):
            if data.get(key) is not None:
                data[key] = _rational(data[key])
        for key in ("eps_grid", "t_grid"):
            if isinstance(data.get(key), str):
                data[key] = tuple(parse_rational(v) for v in _split(data[key]))
            elif data.get(key) is not None:
                data[key] = tuple(_rational(v) for v in data[key])
        if isinstance(data.get("m_list"), str):
            try:
                data["m_list"] = tuple(int(v) for v in _split(data["m_list"]))
            except ValueError:
                raise errors.ConfigError(f"Frequencies must be integers: {data['m_list']!r}.")
        if isinstance(data.get("s"), str):
            parts = [float(parse_rational(v)) for v in _split(data["s"])]
            if len(parts) not in (1, 2):
                raise errors.ConfigError(f"Expected s as 're[,im]', got {data['s']!r}.")
            data["s"] = (parts[0], parts[1] if len(parts) == 2 else 0.0)
        if isinstance(data.get("interval"), str):
            alpha, beta = (float(parse_rational(v)) for v in _split(data["interval"]))
            data["interval"] = (alpha, beta)
        return data

    @field_validator("max_norm", "epsilon")
    @classmethod
    def check_positive(cls, value: Optional[Fraction]) -> Optional[Fraction]:
        if value is not None and value <= 0:
            raise ValueError("Bound must be positive.")
        return value

    @field_validator("eps_grid")
    @classmethod
    def check_decreasing(cls, value: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if any(e <= 0 for e in value):
            raise ValueError("Epsilon values must be positive.")
        if any(a <= b for a, b in zip(value, value[1:])):
            raise ValueError("Epsilon grid must be strictly decreasing.")
        return value

    @field_validator("t_grid")
    @classmethod
    def check_grid(cls, value: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if any(t <= 0 for t in value):
            raise ValueError("Norm bounds must be positive.")
        return value

    @model_validator(mode="after")
    def check_command(self) -> RunConfig:
        if self.max_norm is not None and self.epsilon is not None:
            raise ValueError("Options --max-norm and --epsilon are mutually exclusive.")
        bound_given = self.max_norm is not None or self.epsilon is not None
        if self.command in _NEEDS_BOUND and not bound_given and self.input is None:
            raise ValueError(f"Command {self.command.value} needs --max-norm or --epsilon.")
        if self.command is types.Command.ORBIT_COUNT and not (self.eps_grid or self.epsilon):
            raise ValueError("Command orbit-count needs --eps-grid or --epsilon.")
        if self.command is types.Command.SERIES and (self.s is None or self.trunc is None):
            raise ValueError("Command series needs --s and --trunc.")
        if self.command in (types.Command.STATS, types.Command.WEYL) and 0 in self.m_list:
            raise ValueError("Frequency m=0 is reported as the sample count.")
        return self

    def spec(self, max_norm: Optional[Fraction] = None) -> EnumSpec:
        """Enumeration described by the bound options (or an explicit T)."""
        if max_norm is not None:
            return EnumSpec.by_norm(self.lattice, max_norm, self.chunk)
        if self.epsilon is not None:
            return EnumSpec.by_epsilon(self.lattice, self.epsilon, self.chunk)
        bound = self.max_norm if self.max_norm is not None else Fraction(const.DEFAULT_REPORT_NORM)
        return EnumSpec.by_norm(self.lattice, bound, self.chunk)
