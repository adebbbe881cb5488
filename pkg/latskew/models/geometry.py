from dataclasses import dataclass

from latskew import types


__all__ = ["GeometryResult", "GeometryReport"]


@dataclass(frozen=True)
class GeometryResult:
    """Outcome of one inequality; lhs/rhs describe the worst checked case."""
    check: types.GeometryCheck
    passed: bool
    lhs: float
    rhs: float
    residual: float
    violations: int = 0
    checked: int = 1


@dataclass(frozen=True)
class GeometryReport:
    results: tuple[GeometryResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.results)

    def __getitem__(self, check: types.GeometryCheck) -> GeometryResult:
        for result in self.results:
            if result.check is check:
                return result
        raise KeyError(check)
