"""Shared row type for every emitted convergence table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ConvergenceRecord:
    """One table row: parameter, value, signed error, optional certified bound."""

    n: float
    value: float
    error: float
    bound: Optional[float] = None

    def __post_init__(self) -> None:
        if self.bound is not None and abs(self.error) > self.bound:
            raise ValueError(f"certified bound violated: |{self.error}| > {self.bound}")
