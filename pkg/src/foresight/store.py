"""File-backed project store: every pipeline stage reads and writes JSON
artifacts under one root directory (FORESIGHT_HOME or the working
directory). Artifacts are validated by their module loaders on read, and a
stage whose input artifact is missing fails with the prerequisite command
named.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .errors import MissingArtifactError, ValidationError
from .ingest import RecordSet
from .matrix import ImpactMatrix
from .quant import ParamSet
from .scenarios import ScenarioTable
from .text import DocTermMatrix
from .topics import TopicModel

ENV_HOME = "FORESIGHT_HOME"

CORPUS = "corpus.json"
DTM = "dtm.json"
LDA = "lda.json"
MATRIX = "matrix.json"
SCENARIOS = "scenarios.json"
PARAMS = "params.json"
RESULTS_DIR = "results"

# artifact -> CLI command that produces it
_PRODUCER = {
    CORPUS: "ingest <file>",
    DTM: "topics",
    LDA: "topics",
    MATRIX: "matrix",
    SCENARIOS: "scenarios",
}


def resolve_root(root: str | os.PathLike | None = None) -> Path:
    if root is not None:
        return Path(root)
    env = os.environ.get(ENV_HOME)
    return Path(env) if env else Path.cwd()


class ProjectStore:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = resolve_root(root)

    def path(self, artifact: str) -> Path:
        return self.root / artifact

    def results_dir(self) -> Path:
        d = self.root / RESULTS_DIR
        d.mkdir(parents=True, exist_ok=True)
        return d

    def exists(self, artifact: str) -> bool:
        return self.path(artifact).is_file()

    def _read(self, artifact: str) -> dict:
        path = self.path(artifact)
        if not path.is_file():
            raise MissingArtifactError(artifact, _PRODUCER.get(artifact, "?"))
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise ValidationError(f"artifact {artifact} is not valid JSON: {exc}") from None

    def _write(self, artifact: str, text: str) -> Path:
        path = self.path(artifact)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path

    # corpus

    def load_corpus(self) -> RecordSet:
        data = self._read(CORPUS)
        try:
            return RecordSet.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"corpus artifact is malformed: {exc}") from None

    def save_corpus(self, rs: RecordSet) -> Path:
        return self._write(CORPUS, rs.to_json())

    # document-term matrix

    def load_dtm(self) -> DocTermMatrix:
        data = self._read(DTM)
        try:
            return DocTermMatrix.from_dict(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"dtm artifact is malformed: {exc}") from None

    def save_dtm(self, dtm: DocTermMatrix) -> Path:
        return self._write(DTM, dtm.to_json())

    # topic model (plus the corpus row index of each modeled document)

    def load_lda(self) -> tuple[TopicModel, list[int]]:
        data = self._read(LDA)
        try:
            model = TopicModel.from_dict(data)
            doc_indices = [int(i) for i in data["doc_indices"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"lda artifact is malformed: {exc}") from None
        if len(doc_indices) != model.theta.shape[0]:
            raise ValidationError("lda artifact doc_indices do not match theta rows")
        return model, doc_indices

    def save_lda(self, model: TopicModel, doc_indices: list[int]) -> Path:
        data = model.to_dict()
        data["doc_indices"] = list(doc_indices)
        return self._write(LDA, json.dumps(data, sort_keys=True))

    # impact matrix

    def load_matrix(self) -> ImpactMatrix:
        data = self._read(MATRIX)
        try:
            return ImpactMatrix.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"matrix artifact is malformed: {exc}") from None

    def save_matrix(self, m: ImpactMatrix) -> Path:
        return self._write(MATRIX, m.to_json())

    # scenarios

    def load_scenarios(self) -> ScenarioTable:
        data = self._read(SCENARIOS)
        try:
            return ScenarioTable.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"scenarios artifact is malformed: {exc}") from None

    def save_scenarios(self, table: ScenarioTable) -> Path:
        return self._write(SCENARIOS, table.to_json())

    # simulation parameters (optional; defaults when absent)

    def load_params(self) -> ParamSet:
        if not self.exists(PARAMS):
            return ParamSet()
        data = self._read(PARAMS)
        try:
            return ParamSet.from_dict(data)
        except TypeError as exc:
            raise ValidationError(f"params artifact is malformed: {exc}") from None

    def save_params(self, p: ParamSet) -> Path:
        return self._write(PARAMS, json.dumps(p.to_dict(), indent=2, sort_keys=True))

    def save_result(self, filename: str, text: str) -> Path:
        path = self.results_dir() / filename
        path.write_text(text, encoding="utf-8")
        return path
