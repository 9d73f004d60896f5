"""Named future scenarios: per-dimension narratives plus the numeric driver
levels (A, R) that feed the growth simulations.

The four built-in scenarios contrast trajectories over the three critical
dimensions. Their (A, R) values are design anchors, not measured data; only
their ordering is meaningful (the optimistic scenario dominates the downturn
one, and the sustainability scenario pushes R above A). Override them in
scenarios.json or via custom_scenario for what-if runs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import UsageError, ValidationError

CRITICAL_DIMENSIONS = (
    "AI & Digital Education",
    "Renewable Energy & Sustainability",
    "Financial Markets & Fintech",
)


@dataclass(frozen=True)
class DriverLevels:
    A: float  # AI and Digital Education level, 0..1
    R: float  # Renewable Energy and Sustainability level, 0..1

    def __post_init__(self):
        for name, value in (("A", self.A), ("R", self.R)):
            if not (0.0 <= value <= 1.0):
                raise ValidationError(
                    f"driver {name}={value} outside the [0, 1] range"
                )


@dataclass(frozen=True)
class Scenario:
    name: str
    narratives: dict[str, str]
    drivers: DriverLevels

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "narratives": dict(self.narratives),
            "drivers": {"A": self.drivers.A, "R": self.drivers.R},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Scenario":
        return cls(
            name=data["name"],
            narratives=dict(data.get("narratives", {})),
            drivers=DriverLevels(**data["drivers"]),
        )


@dataclass
class ScenarioTable:
    scenarios: list[Scenario]
    dimensions: list[str]

    def __post_init__(self):
        names = [s.name for s in self.scenarios]
        if len(names) != len(set(names)):
            raise ValidationError("scenario names must be unique")

    def get(self, name: str) -> Scenario | None:
        for s in self.scenarios:
            if s.name == name:
                return s
        return None

    def to_dict(self) -> dict:
        return {
            "dimensions": list(self.dimensions),
            "scenarios": [s.to_dict() for s in self.scenarios],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioTable":
        return cls(
            scenarios=[Scenario.from_dict(s) for s in data["scenarios"]],
            dimensions=list(data["dimensions"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ScenarioTable":
        return cls.from_dict(json.loads(text))


_BUILTIN = [
    (
        "Optimistic Future",
        0.9,
        0.9,
        (
            "Rapid, inclusive AI integration leads to personalized, adaptive learning environments.",
            "Accelerated transition to renewables with widespread grid modernization.",
            "Stable and secure digital financial ecosystems bolstered by strong fintech growth.",
        ),
    ),
    (
        "Technological Stagnation",
        0.3,
        0.3,
        (
            "Slow integration with persistent digital divides and outdated pedagogical methods.",
            "Limited breakthroughs with reliance on legacy energy systems.",
            "Heightened market volatility due to sluggish fintech adoption and minimal innovation.",
        ),
    ),
    (
        "Sustainability Focus",
        0.6,
        0.9,
        (
            "Targeted interventions ensuring equitable access and blended learning environments.",
            "High investments in renewable infrastructure driven by strong climate policies.",
            "Stable markets oriented toward green finance, with moderate fintech innovation.",
        ),
    ),
    (
        "Economic Downturn",
        0.2,
        0.2,
        (
            "Budget constraints lead to reduced funding for edtech innovation and digital initiatives.",
            "Minimal investments in renewables result in compromised infrastructure development.",
            "Declining markets and reduced fintech activity elevate exposure to financial risks.",
        ),
    ),
]


def builtin_scenarios() -> ScenarioTable:
    """The four contrast scenarios over the three critical dimensions."""
    scenarios = [
        Scenario(
            name=name,
            narratives=dict(zip(CRITICAL_DIMENSIONS, cells)),
            drivers=DriverLevels(A=a, R=r),
        )
        for name, a, r, cells in _BUILTIN
    ]
    return ScenarioTable(scenarios=scenarios, dimensions=list(CRITICAL_DIMENSIONS))


def custom_scenario(name: str, A: float, R: float, narratives: dict[str, str] | None = None) -> Scenario:
    if not name.strip():
        raise UsageError("scenario name must be nonempty")
    return Scenario(name=name, narratives=dict(narratives or {}), drivers=DriverLevels(A=A, R=R))


def render_table(t: ScenarioTable, format: str = "markdown") -> str:
    """One row per scenario: narrative per dimension plus the A/R drivers."""
    header = ["Scenario", *t.dimensions, "A", "R"]
    rows = [
        [s.name, *(s.narratives.get(dim, "") for dim in t.dimensions),
         str(s.drivers.A), str(s.drivers.R)]
        for s in t.scenarios
    ]
    if format == "markdown":
        lines = [
            "| " + " | ".join(header) + " |",
            "| " + " | ".join("---" for _ in header) + " |",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    raise UsageError(f"unknown table format {format!r}; expected 'markdown' or 'csv'")
