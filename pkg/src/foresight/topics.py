"""Latent Dirichlet Allocation by collapsed Gibbs sampling, plus topic
inspection helpers: top words, per-year topic trends, and STEEP labels.

The sampler resamples one token-topic assignment at a time in corpus order
(documents in row order, within a document terms by ascending column id,
repeated per count). Random consumption per seed is documented and fixed:
one integer per token for initialization, then one uniform per token per
sweep, so identical seeds give identical fits. Point estimates come from
the final sweep's counts with Dirichlet smoothing.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict

import numpy as np
from numba import njit

from .errors import UsageError, ValidationError
from .ingest import RecordSet
from .text import DocTermMatrix

STEEP_CATEGORIES = ("Social", "Technological", "Economic", "Environmental", "Political")

UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class LdaConfig:
    n_topics: int = 6
    alpha: float | None = None  # resolved to 50 / n_topics
    beta: float = 0.01
    iterations: int = 1000
    burn_in: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.n_topics < 2:
            raise UsageError("n_topics must be >= 2")
        if self.alpha is None:
            object.__setattr__(self, "alpha", 50.0 / self.n_topics)
        if self.alpha <= 0 or self.beta <= 0:
            raise UsageError("alpha and beta must be > 0")
        if not (self.iterations > self.burn_in >= 0):
            raise UsageError("need iterations > burn_in >= 0")
        if self.seed < 0:
            raise UsageError("seed must be a nonnegative integer")


@dataclass
class TopicModel:
    phi: np.ndarray  # K x V topic-word rows
    theta: np.ndarray  # D x K document-topic rows
    config: LdaConfig
    log_likelihood_trace: list[float]
    terms: list[str]

    @property
    def n_topics(self) -> int:
        return self.phi.shape[0]

    def to_dict(self) -> dict:
        return {
            "phi": self.phi.tolist(),
            "theta": self.theta.tolist(),
            "config": asdict(self.config),
            "log_likelihood_trace": list(self.log_likelihood_trace),
            "terms": list(self.terms),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "TopicModel":
        return cls(
            phi=np.asarray(data["phi"], dtype=np.float64),
            theta=np.asarray(data["theta"], dtype=np.float64),
            config=LdaConfig(**data["config"]),
            log_likelihood_trace=list(data["log_likelihood_trace"]),
            terms=list(data["terms"]),
        )


@njit(cache=True)
def gibbs_sweep(z, doc_ids, word_ids, n_dk, n_kt, n_k, alpha, beta, uniforms):
    """One full sweep over all tokens; mutates counts in place.

    uniforms supplies one pre-drawn U(0,1) per token. Returns the sum of
    log-probabilities of the sampled assignments (a convergence trace).
    """
    n_topics, n_terms = n_kt.shape
    loglik = 0.0
    p = np.empty(n_topics)
    for i in range(z.shape[0]):
        d = doc_ids[i]
        w = word_ids[i]
        k = z[i]
        n_dk[d, k] -= 1
        n_kt[k, w] -= 1
        n_k[k] -= 1
        total = 0.0
        for kk in range(n_topics):
            p[kk] = (
                (n_kt[kk, w] + beta)
                / (n_k[kk] + n_terms * beta)
                * (n_dk[d, kk] + alpha)
            )
            total += p[kk]
        r = uniforms[i] * total
        acc = 0.0
        new_k = n_topics - 1
        for kk in range(n_topics):
            acc += p[kk]
            if r < acc:
                new_k = kk
                break
        z[i] = new_k
        loglik += np.log(p[new_k] / total)
        n_dk[d, new_k] += 1
        n_kt[new_k, w] += 1
        n_k[new_k] += 1
    return loglik


def _token_arrays(counts) -> tuple[np.ndarray, np.ndarray, int, int]:
    """Expand a D x V count matrix to per-token (doc_id, word_id) arrays."""
    if hasattr(counts, "toarray"):
        dense = counts.toarray()
    else:
        dense = np.asarray(counts)
    if dense.ndim != 2:
        raise UsageError("counts must be a 2-D document-term matrix")
    if np.any(dense < 0):
        raise ValidationError("counts must be nonnegative")
    dense = dense.astype(np.int64)
    n_docs, n_terms = dense.shape
    doc_ids, word_ids = [], []
    for d in range(n_docs):
        row = dense[d]
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            raise ValidationError(f"document {d} has no tokens")
        for w in nz:
            doc_ids.extend([d] * row[w])
            word_ids.extend([int(w)] * row[w])
    return (
        np.asarray(doc_ids, dtype=np.int64),
        np.asarray(word_ids, dtype=np.int64),
        n_docs,
        n_terms,
    )


def fit_lda(counts, cfg: LdaConfig = LdaConfig(), terms: list[str] | None = None) -> TopicModel:
    """Fit LDA on an integer count matrix (or a DocTermMatrix) by collapsed Gibbs.

    Fully reproducible from cfg.seed. Token-count conservation is verified
    after every sweep and raises RuntimeError on violation.
    """
    if isinstance(counts, DocTermMatrix):
        terms = counts.vocab.terms
        counts = counts.counts
    doc_ids, word_ids, n_docs, n_terms = _token_arrays(counts)
    if terms is None:
        terms = [f"term{j}" for j in range(n_terms)]
    if cfg.n_topics > n_terms:
        raise UsageError(
            f"n_topics {cfg.n_topics} exceeds vocabulary size {n_terms}"
        )

    K = cfg.n_topics
    n_tokens = doc_ids.shape[0]
    rng = np.random.default_rng(cfg.seed)
    z = rng.integers(0, K, n_tokens, dtype=np.int64)

    n_dk = np.zeros((n_docs, K), dtype=np.int64)
    n_kt = np.zeros((K, n_terms), dtype=np.int64)
    n_k = np.zeros(K, dtype=np.int64)
    np.add.at(n_dk, (doc_ids, z), 1)
    np.add.at(n_kt, (z, word_ids), 1)
    np.add.at(n_k, z, 1)

    trace = []
    for sweep in range(cfg.iterations):
        uniforms = rng.random(n_tokens)
        ll = gibbs_sweep(z, doc_ids, word_ids, n_dk, n_kt, n_k, cfg.alpha, cfg.beta, uniforms)
        if int(n_k.sum()) != n_tokens:
            raise RuntimeError(f"token count leak at sweep {sweep}")
        trace.append(float(ll))

    phi = (n_kt + cfg.beta) / (n_k[:, None] + n_terms * cfg.beta)
    doc_len = n_dk.sum(axis=1)
    theta = (n_dk + cfg.alpha) / (doc_len[:, None] + K * cfg.alpha)
    return TopicModel(
        phi=phi, theta=theta, config=cfg, log_likelihood_trace=trace, terms=list(terms)
    )


def top_words(m: TopicModel, topic: int, n: int = 10) -> list[str]:
    """The n highest-probability words of a topic; ties broken lexicographically."""
    if not (0 <= topic < m.n_topics):
        raise UsageError(f"topic {topic} out of range [0, {m.n_topics})")
    row = m.phi[topic]
    ranked = sorted(range(len(m.terms)), key=lambda j: (-row[j], m.terms[j]))
    return [m.terms[j] for j in ranked[:n]]


def topic_trends(m: TopicModel, rs: RecordSet) -> tuple[list[int], np.ndarray]:
    """Per-year mean document-topic mixture: (sorted years, n_years x K weights)."""
    if m.theta.shape[0] != len(rs.records):
        raise ValidationError(
            f"model covers {m.theta.shape[0]} documents but record set has {len(rs.records)}"
        )
    by_year: dict[int, list[int]] = {}
    for d, rec in enumerate(rs.records):
        if rec.year is None:
            raise ValidationError(f"record {rec.id!r} has no year")
        by_year.setdefault(rec.year, []).append(d)
    years = sorted(by_year)
    weights = np.vstack([m.theta[by_year[y]].mean(axis=0) for y in years])
    return years, weights


@dataclass(frozen=True)
class SteepLexicon:
    categories: dict[str, frozenset]

    def __post_init__(self):
        for cat, words in self.categories.items():
            if cat not in STEEP_CATEGORIES:
                raise UsageError(f"unknown STEEP category {cat!r}")
            if not words:
                raise UsageError(f"category {cat!r} has an empty trigger set")

    @classmethod
    def from_dict(cls, data: dict) -> "SteepLexicon":
        return cls({cat: frozenset(w.lower() for w in words) for cat, words in data.items()})


DEFAULT_STEEP_LEXICON = SteepLexicon(
    {
        "Social": frozenset({"health", "education", "care", "public", "social"}),
        "Technological": frozenset({"learning", "model", "network", "data", "digital"}),
        "Economic": frozenset({"financial", "market", "banking", "price", "fintech"}),
        "Environmental": frozenset({"energy", "carbon", "renewable", "emissions", "climate"}),
        "Political": frozenset({"policy", "regulation", "governance", "government", "political"}),
    }
)


def categorize_topic(
    words: list[str], lex: SteepLexicon = DEFAULT_STEEP_LEXICON, min_hits: int = 1
) -> list[str]:
    """Categories whose trigger sets hit >= min_hits of the given words, in
    STEEP order; ["Unclassified"] when nothing hits."""
    word_set = {w.lower() for w in words}
    hits = [
        cat
        for cat in STEEP_CATEGORIES
        if cat in lex.categories and len(lex.categories[cat] & word_set) >= min_hits
    ]
    return hits if hits else [UNCLASSIFIED]


def perplexity(m: TopicModel, counts) -> float:
    """exp(-mean token log-likelihood) under p(w|d) = theta[d] . phi[:, w]."""
    doc_ids, word_ids, n_docs, n_terms = _token_arrays(counts)
    if n_docs != m.theta.shape[0] or n_terms != m.phi.shape[1]:
        raise ValidationError("counts shape does not match the fitted model")
    probs = np.einsum("ik,ik->i", m.theta[doc_ids], m.phi[:, word_ids].T)
    return float(math.exp(-np.log(probs).mean()))
