"""
Ranking trend factors on an impact-uncertainty matrix
=====================================================

"""

import json
from importlib import resources

from foresight import (
    FactorAssessment,
    ImpactMatrix,
    Level,
    build_matrix,
    select_critical,
)

# Assessments pair an expert judgment of impact with one of uncertainty,
# both on a three-point Low/Medium/High scale. Relevance is derived:
# High/High factors are Critical, High-impact factors with less
# uncertainty are Important, everything else is Monitor.
factors = [
    FactorAssessment(
        name="Quantum computing",
        impact=Level.High,
        uncertainty=Level.High,
        implications="Could break current cryptography",
        strategies="Track standards bodies; pilot post-quantum crypto",
    ),
    FactorAssessment(
        name="Open-source tooling",
        impact=Level.Medium,
        uncertainty=Level.Low,
        implications="Steady commoditization of infrastructure",
        strategies="Contribute upstream",
    ),
]
matrix = build_matrix(factors)
for f in matrix.factors:
    rel = matrix.relevance[f.name].name
    print(f"{f.name}: impact={f.impact.name} uncertainty={f.uncertainty.name}"
          f" -> {rel}")

# The bundled matrix covers six factors assessed from the sample corpus.
raw = resources.files("foresight.data").joinpath("impact_matrix.json").read_text()
bundled = ImpactMatrix.from_dict(json.loads(raw))
print()
for f in bundled.factors:
    print(f"{bundled.relevance[f.name].name:9s}  {f.name}")

# Critical factors (High impact, High uncertainty) become the scenario
# dimensions downstream.
print()
print("critical:", "; ".join(select_critical(bundled)))
