# src/core/entities/entanglement.py
from dataclasses import dataclass, field

from core.entities.comb import ModeLabel, Polarization
from infrastructure.error_handling.exceptions import ModeRangeError


@dataclass(frozen=True)
class Bipartition:
    """Split of a four-mode unit cell into two nonempty sides."""

    cell: tuple[ModeLabel, ModeLabel, ModeLabel, ModeLabel]
    side_a: frozenset[ModeLabel]

    def __post_init__(self) -> None:
        if not self.side_a or not self.side_a < set(self.cell):
            raise ModeRangeError("side_a must be a nonempty proper subset of the cell")

    @property
    def side_b(self) -> frozenset[ModeLabel]:
        return frozenset(self.cell) - self.side_a

    @property
    def label(self) -> str:
        def side(modes: frozenset[ModeLabel]) -> str:
            ordered = [mode for mode in self.cell if mode in modes]
            return ",".join(str(mode) for mode in ordered)

        return f"{side(self.side_a)}|{side(self.side_b)}"


@dataclass(frozen=True)
class BipartitionResult:
    """One separability inequality of a unit cell."""

    bipartition: Bipartition
    observables: tuple[str, str]
    variance_sum: float
    bound: float
    violated: bool

    def to_payload(self) -> dict[str, object]:
        return {
            "bipartition": self.bipartition.label,
            "observables": list(self.observables),
            "sum": self.variance_sum,
            "bound": self.bound,
            "violated": self.violated,
        }


@dataclass(frozen=True)
class CellReport:
    """Separability tests of the cell {n3, n4} centered on one pump."""

    center: Polarization
    n3: int
    n4: int
    companion: tuple[int, int]
    boundary: bool
    results: tuple[BipartitionResult, ...]

    @property
    def inseparable(self) -> bool:
        return all(result.violated for result in self.results)

    def to_payload(self) -> dict[str, object]:
        return {
            "center": self.center.value,
            "n3": self.n3,
            "n4": self.n4,
            "companion": list(self.companion),
            "boundary": self.boundary,
            "inseparable": self.inseparable,
            "bipartitions": [result.to_payload() for result in self.results],
        }


@dataclass(frozen=True)
class ExcludedCell:
    center: Polarization
    n3: int
    n4: int
    reason: str

    def to_payload(self) -> dict[str, object]:
        return {
            "center": self.center.value,
            "n3": self.n3,
            "n4": self.n4,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class VlfReport:
    """Inseparability verdict for one wire."""

    wire: int
    sequence: tuple[int, ...]
    cells: tuple[CellReport, ...]
    excluded: tuple[ExcludedCell, ...] = field(default_factory=tuple)
    sufficient: bool | None = None

    @property
    def inseparable(self) -> bool:
        return len(self.cells) >= 2 and all(cell.inseparable for cell in self.cells)

    @property
    def interior_cells(self) -> tuple[CellReport, ...]:
        return tuple(cell for cell in self.cells if not cell.boundary)

    def to_payload(self) -> dict[str, object]:
        return {
            "wire": self.wire,
            "sequence": list(self.sequence),
            "inseparable": self.inseparable,
            "sufficient_condition": self.sufficient,
            "cells": [cell.to_payload() for cell in self.cells],
            "excluded": [cell.to_payload() for cell in self.excluded],
        }
