"""HTTP facade over the pipeline artifacts.

GET endpoints read previously written artifacts; POST /api/simulate runs
the growth-curve model in-process. Error mapping: client-shaped input is
400 with per-field messages, unknown scenario names are 404, and a
missing pipeline artifact is 409 naming the stage that produces it.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from dataclasses import replace

from .errors import MissingArtifactError, UsageError, ValidationError
from .ingest import RecordSet
from .quant import ParamSet, monte_carlo
from .scenarios import DriverLevels
from .store import ProjectStore
from .topics import DEFAULT_STEEP_LEXICON, categorize_topic, top_words, topic_trends


class DriverBody(BaseModel):
    A: float = Field(ge=0.0, le=1.0)
    R: float = Field(ge=0.0, le=1.0)


class SimRequest(BaseModel):
    scenario: Optional[str] = None
    drivers: Optional[DriverBody] = None
    params: Optional[dict[str, float]] = None
    horizon: float = Field(default=10.0, gt=0.0)
    dt: float = Field(default=0.1, gt=0.0)
    runs: int = Field(default=100, ge=1, le=10000)
    seed: int = Field(default=0, ge=0)


def create_app(store: Optional[ProjectStore] = None, ui_dir: Optional[str] = None) -> FastAPI:
    store = store or ProjectStore()
    app = FastAPI(title="foresight", docs_url=None, redoc_url=None)

    try:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )
    except ImportError:  # pragma: no cover - cors ships with fastapi
        pass

    @app.exception_handler(RequestValidationError)
    async def _on_body_error(request: Request, exc: RequestValidationError):
        fields = []
        for err in exc.errors():
            loc = ".".join(str(p) for p in err["loc"] if p != "body")
            fields.append({"field": loc or "body", "message": err["msg"]})
        return JSONResponse(status_code=400, content={"detail": fields})

    @app.exception_handler(MissingArtifactError)
    async def _on_missing(request: Request, exc: MissingArtifactError):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(ValidationError)
    async def _on_invalid(request: Request, exc: ValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(UsageError)
    async def _on_usage(request: Request, exc: UsageError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/api/health")
    async def health():
        return {"status": "ok"}

    @app.get("/api/topics")
    async def topics():
        model, doc_indices = store.load_lda()
        out = []
        for k in range(model.n_topics):
            words = top_words(model, k, n=10)
            out.append(
                {
                    "topic": k,
                    "top_words": words,
                    "categories": categorize_topic(words, DEFAULT_STEEP_LEXICON),
                }
            )
        # per-year topic weights over the modeled records that carry a year;
        # empty arrays when none do (the UI shows a "no data" state)
        rs = store.load_corpus()
        kept = [rs.records[i] for i in doc_indices]
        dated = [j for j, rec in enumerate(kept) if rec.year is not None]
        if dated:
            sub_rs = RecordSet(records=[kept[j] for j in dated], provenance=rs.provenance)
            sub_model = replace(model, theta=model.theta[dated])
            years, weights = topic_trends(sub_model, sub_rs)
            trends = {"years": years, "weights": weights.tolist()}
        else:
            trends = {"years": [], "weights": []}
        return {"n_docs": len(doc_indices), "topics": out, "trends": trends}

    @app.get("/api/matrix")
    async def matrix():
        return store.load_matrix().to_dict()

    @app.get("/api/scenarios")
    async def scenarios():
        table = store.load_scenarios()
        return {
            "dimensions": list(table.dimensions),
            "scenarios": [s.to_dict() for s in table.scenarios],
        }

    @app.post("/api/simulate")
    async def simulate(body: SimRequest):
        if (body.scenario is None) == (body.drivers is None):
            return JSONResponse(
                status_code=400,
                content={"detail": "pass exactly one of 'scenario' or 'drivers'"},
            )
        if body.scenario is not None:
            table = store.load_scenarios()
            scenario = table.get(body.scenario)
            if scenario is None:
                return JSONResponse(
                    status_code=404,
                    content={"detail": f"unknown scenario {body.scenario!r}"},
                )
            drivers = scenario.drivers
            label = scenario.name
        else:
            drivers = DriverLevels(A=body.drivers.A, R=body.drivers.R)
            label = None

        params = store.load_params()
        if body.params:
            params = params.with_overrides(**body.params)
        ens = monte_carlo(params, drivers, body.horizon, body.dt, body.runs, body.seed)
        payload = ens.to_dict()
        payload["scenario"] = label
        return payload

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
