"""Quantitative foresight toolkit: bibliographic corpus -> topics ->
impact-uncertainty matrix -> scenarios -> stochastic growth-curve runs."""

from .errors import (
    ForesightError,
    MissingArtifactError,
    ParseError,
    UsageError,
    ValidationError,
)
from .export import ensemble_csv, ensemble_svg, trajectory_csv, trajectory_svg
from .ingest import (
    BiblioRecord,
    QueryMeta,
    RecordSet,
    corpus_stats,
    filter_records,
    parse_export,
)
from .matrix import (
    FactorAssessment,
    ImpactMatrix,
    Level,
    Relevance,
    build_matrix,
    derive_relevance,
    select_critical,
)
from .quant import (
    Ensemble,
    ParamSet,
    Trajectory,
    ceilings,
    compare_scenarios,
    deterministic_curves,
    gompertz_index,
    logistic_index,
    monte_carlo,
    simulate_path,
    time_grid,
)
from .scenarios import (
    CRITICAL_DIMENSIONS,
    DriverLevels,
    Scenario,
    ScenarioTable,
    builtin_scenarios,
    custom_scenario,
    render_table,
)
from .store import ProjectStore, resolve_root
from .text import DocTermMatrix, TokenizerConfig, Vocabulary, matrix_summary, tokenize
from .text import build_matrix as build_doc_term_matrix
from .topics import (
    DEFAULT_STEEP_LEXICON,
    STEEP_CATEGORIES,
    LdaConfig,
    SteepLexicon,
    TopicModel,
    categorize_topic,
    fit_lda,
    perplexity,
    top_words,
    topic_trends,
)

__version__ = "0.1.0"

__all__ = [
    "BiblioRecord",
    "CRITICAL_DIMENSIONS",
    "DEFAULT_STEEP_LEXICON",
    "DocTermMatrix",
    "DriverLevels",
    "Ensemble",
    "FactorAssessment",
    "ForesightError",
    "ImpactMatrix",
    "LdaConfig",
    "Level",
    "MissingArtifactError",
    "ParamSet",
    "ParseError",
    "ProjectStore",
    "QueryMeta",
    "RecordSet",
    "Relevance",
    "STEEP_CATEGORIES",
    "Scenario",
    "ScenarioTable",
    "SteepLexicon",
    "TokenizerConfig",
    "TopicModel",
    "Trajectory",
    "UsageError",
    "ValidationError",
    "Vocabulary",
    "build_doc_term_matrix",
    "build_matrix",
    "builtin_scenarios",
    "categorize_topic",
    "ceilings",
    "compare_scenarios",
    "corpus_stats",
    "custom_scenario",
    "deterministic_curves",
    "derive_relevance",
    "ensemble_csv",
    "ensemble_svg",
    "filter_records",
    "fit_lda",
    "gompertz_index",
    "logistic_index",
    "matrix_summary",
    "monte_carlo",
    "parse_export",
    "perplexity",
    "render_table",
    "resolve_root",
    "select_critical",
    "simulate_path",
    "time_grid",
    "tokenize",
    "top_words",
    "topic_trends",
    "trajectory_csv",
    "trajectory_svg",
]
