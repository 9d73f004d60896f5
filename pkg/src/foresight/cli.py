"""Command-line pipeline: ingest -> topics -> trends -> matrix -> scenarios
-> simulate, with artifacts handed between stages as JSON files in the
project root (cwd or FORESIGHT_HOME). `serve` exposes the same artifacts
over HTTP for the explorer UI.

Exit codes: 0 success, 1 validation/data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from datetime import datetime, timezone
from importlib import resources

from . import export
from .errors import UsageError, ValidationError
from .ingest import QueryMeta, RecordSet, corpus_stats, parse_export
from .matrix import FactorAssessment, build_matrix, select_critical
from .quant import monte_carlo, simulate_path
from .scenarios import DriverLevels, builtin_scenarios, render_table
from .store import ProjectStore
from .text import TokenizerConfig, build_matrix as build_dtm, tokenize
from .topics import (
    DEFAULT_STEEP_LEXICON,
    LdaConfig,
    categorize_topic,
    fit_lda,
    top_words,
    topic_trends,
)


def _bundled(name: str) -> str:
    return resources.files("foresight.data").joinpath(name).read_text(encoding="utf-8")


def cmd_ingest(args, store: ProjectStore) -> int:
    fmt = args.format
    if fmt is None:
        suffix = args.file.rsplit(".", 1)[-1].lower() if "." in args.file else ""
        if suffix not in ("csv", "ris"):
            raise UsageError(
                f"cannot infer format from {args.file!r}; pass --format csv|ris"
            )
        fmt = suffix
    with open(args.file, "rb") as fh:
        data = fh.read()
    meta = QueryMeta(
        query_string=args.query,
        retrieved_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        source_label=args.label,
    )
    rs = parse_export(data, fmt, provenance=meta)
    path = store.save_corpus(rs)
    stats = corpus_stats(rs)
    print(f"wrote {path} ({stats['n_records']} records, {len(rs.warnings)} warnings)")
    for idx, reason in rs.warnings:
        print(f"  warning: row {idx}: {reason}", file=sys.stderr)
    return 0


def cmd_topics(args, store: ProjectStore) -> int:
    rs = store.load_corpus()
    cfg = TokenizerConfig()
    docs = [tokenize(rec.text(), cfg) for rec in rs.records]
    dtm = build_dtm(docs, min_df=args.min_df, max_df_ratio=args.max_df_ratio)
    store.save_dtm(dtm)

    row_tokens = dtm.counts.sum(axis=1)
    doc_indices = [d for d in range(dtm.n_docs) if row_tokens[d, 0] > 0]
    if len(doc_indices) < dtm.n_docs:
        print(
            f"note: {dtm.n_docs - len(doc_indices)} documents had no vocabulary "
            "tokens and were left out of the topic fit",
            file=sys.stderr,
        )
    if not doc_indices:
        raise ValidationError("no document retained any vocabulary token")

    lda_cfg = LdaConfig(
        n_topics=args.k, iterations=args.iters, burn_in=args.burn_in, seed=args.seed
    )
    model = fit_lda(dtm.counts[doc_indices], lda_cfg, terms=dtm.vocab.terms)
    path = store.save_lda(model, doc_indices)
    print(f"wrote {path} (K={args.k}, {len(doc_indices)} docs)")
    for k in range(model.n_topics):
        words = top_words(model, k, n=10)
        cats = categorize_topic(words, DEFAULT_STEEP_LEXICON)
        print(f"topic {k}: {' '.join(words)} --> {', '.join(cats)}")
    return 0


def cmd_trends(args, store: ProjectStore) -> int:
    model, doc_indices = store.load_lda()
    rs = store.load_corpus()
    kept = [rs.records[i] for i in doc_indices]
    dated = [j for j, rec in enumerate(kept) if rec.year is not None]
    if not dated:
        raise ValidationError("no modeled record carries a year")
    sub_rs = RecordSet(records=[kept[j] for j in dated], provenance=rs.provenance)
    sub_model = replace(model, theta=model.theta[dated])
    years, weights = topic_trends(sub_model, sub_rs)
    payload = {"years": years, "weights": weights.tolist()}
    path = store.save_result("trends.json", json.dumps(payload, sort_keys=True))
    print(f"wrote {path}")
    for y, row in zip(years, weights):
        cells = " ".join(f"{w:.3f}" for w in row)
        print(f"{y}: {cells}")
    return 0


def cmd_matrix(args, store: ProjectStore) -> int:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
    else:
        raw = json.loads(_bundled("impact_matrix.json"))
    factors = [FactorAssessment.from_dict(f) for f in raw]
    m = build_matrix(factors)
    path = store.save_matrix(m)
    print(f"wrote {path}")
    for f in m.factors:
        print(f"{f.name}: impact={f.impact.name} uncertainty={f.uncertainty.name}"
              f" -> {m.relevance[f.name].name}")
    critical = select_critical(m)
    print("critical: " + "; ".join(critical))
    return 0


def cmd_scenarios(args, store: ProjectStore) -> int:
    table = builtin_scenarios()
    path = store.save_scenarios(table)
    print(f"wrote {path}")
    if args.list:
        for s in table.scenarios:
            print(f"{s.name} (A={s.drivers.A}, R={s.drivers.R})")
    else:
        print(render_table(table, "markdown"), end="")
    return 0


def cmd_simulate(args, store: ProjectStore) -> int:
    if args.scenario is not None and (args.A is not None or args.R is not None):
        raise UsageError("pass either --scenario or --A/--R, not both")
    if args.scenario is None and (args.A is None or args.R is None):
        raise UsageError("pass --scenario NAME, or both --A and --R")

    if args.scenario is not None:
        table = store.load_scenarios()
        scenario = table.get(args.scenario)
        if scenario is None:
            names = ", ".join(s.name for s in table.scenarios)
            raise ValidationError(f"unknown scenario {args.scenario!r}; available: {names}")
        drivers = scenario.drivers
    else:
        drivers = DriverLevels(A=args.A, R=args.R)

    params = store.load_params()
    fmt = "svg" if args.svg else "json" if args.json else "csv"
    if args.runs == 1:
        traj = simulate_path(params, drivers, args.horizon, args.dt, seed=args.seed)
        content = {
            "csv": lambda: export.trajectory_csv(traj),
            "json": lambda: traj.to_json(),
            "svg": lambda: export.trajectory_svg(traj),
        }[fmt]()
        path = store.save_result(f"trajectory.{fmt}", content)
    else:
        ens = monte_carlo(params, drivers, args.horizon, args.dt, args.runs, args.seed)
        content = {
            "csv": lambda: export.ensemble_csv(ens),
            "json": lambda: ens.to_json(),
            "svg": lambda: export.ensemble_svg(ens),
        }[fmt]()
        path = store.save_result(f"ensemble.{fmt}", content)
    print(f"wrote {path}")
    return 0


def cmd_serve(args, store: ProjectStore) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(store, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foresight",
        description="Corpus-to-scenarios foresight pipeline with growth-curve simulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse a CSV/RIS export into corpus.json")
    p.add_argument("file")
    p.add_argument("--format", choices=["csv", "ris"], default=None)
    p.add_argument("--query", default="", help="search query string, stored verbatim")
    p.add_argument("--label", default="", help="source label for provenance")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("topics", help="vectorize the corpus and fit the topic model")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=1000)
    p.add_argument("--burn-in", type=int, default=200)
    p.add_argument("--min-df", type=int, default=2)
    p.add_argument("--max-df-ratio", type=float, default=0.95)
    p.set_defaults(func=cmd_topics)

    p = sub.add_parser("trends", help="per-year topic weights from the fitted model")
    p.set_defaults(func=cmd_trends)

    p = sub.add_parser("matrix", help="build the impact-uncertainty matrix")
    p.add_argument("--config", default=None, help="factor file (default: bundled assessment)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("scenarios", help="write the built-in scenario table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_scenarios)

    p = sub.add_parser("simulate", help="run the growth-curve simulation")
    p.add_argument("--scenario", default=None)
    p.add_argument("--A", type=float, default=None)
    p.add_argument("--R", type=float, default=None)
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--horizon", type=float, default=10.0)
    p.add_argument("--dt", type=float, default=0.1)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--csv", action="store_true")
    g.add_argument("--json", action="store_true")
    g.add_argument("--svg", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("serve", help="serve the HTTP API (and UI bundle, if present)")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", default=None, help="directory with the static UI bundle")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    store = ProjectStore()
    try:
        return args.func(args, store)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
