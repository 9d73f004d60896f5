"""Impact-uncertainty assessments of strategic factors.

Factors rated High on both impact and uncertainty are Critical (the
scenario drivers); High impact with lower uncertainty is Important;
everything below High impact is Monitor.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .errors import UsageError, ValidationError


class Level(enum.IntEnum):
    Low = 0
    Medium = 1
    High = 2

    @classmethod
    def parse(cls, value) -> "Level":
        if isinstance(value, cls):
            return value
        try:
            return cls[str(value).capitalize()]
        except KeyError:
            raise UsageError(
                f"unknown level {value!r}; expected Low, Medium, or High"
            ) from None


class Relevance(enum.IntEnum):
    Monitor = 0
    Important = 1
    Critical = 2


@dataclass(frozen=True)
class FactorAssessment:
    name: str
    impact: Level
    uncertainty: Level
    implications: str = ""
    strategies: str = ""
    linked_topic: int | None = None

    def __post_init__(self):
        if not self.name.strip():
            raise UsageError("factor name must be nonempty")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "impact": self.impact.name,
            "uncertainty": self.uncertainty.name,
            "implications": self.implications,
            "strategies": self.strategies,
            "linked_topic": self.linked_topic,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FactorAssessment":
        return cls(
            name=data["name"],
            impact=Level.parse(data["impact"]),
            uncertainty=Level.parse(data["uncertainty"]),
            implications=data.get("implications", ""),
            strategies=data.get("strategies", ""),
            linked_topic=data.get("linked_topic"),
        )


def derive_relevance(impact: Level, uncertainty: Level) -> Relevance:
    """(High, High) -> Critical; High impact otherwise -> Important; else Monitor."""
    if impact is not Level.High:
        return Relevance.Monitor
    if uncertainty is Level.High:
        return Relevance.Critical
    return Relevance.Important


@dataclass
class ImpactMatrix:
    factors: list[FactorAssessment]
    relevance: dict[str, Relevance] = field(init=False)

    def __post_init__(self):
        names = [f.name for f in self.factors]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise ValidationError(f"duplicate factor names: {sorted(dupes)}")
        self.relevance = {
            f.name: derive_relevance(f.impact, f.uncertainty) for f in self.factors
        }

    def to_dict(self) -> dict:
        return {
            "factors": [f.to_dict() for f in self.factors],
            "relevance": {name: rel.name for name, rel in self.relevance.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "ImpactMatrix":
        # accepts either the bare factor list (config file schema) or the
        # serialized form with a derived relevance block
        factor_dicts = data["factors"] if isinstance(data, dict) else data
        return build_matrix([FactorAssessment.from_dict(f) for f in factor_dicts])

    @classmethod
    def from_json(cls, text: str) -> "ImpactMatrix":
        return cls.from_dict(json.loads(text))


def build_matrix(factors: list[FactorAssessment]) -> ImpactMatrix:
    return ImpactMatrix(factors=list(factors))


def select_critical(m: ImpactMatrix) -> list[str]:
    """Names of all Critical factors, in input order."""
    return [f.name for f in m.factors if m.relevance[f.name] is Relevance.Critical]
