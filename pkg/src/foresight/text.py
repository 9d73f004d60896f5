"""Tokenization and the TF-IDF weighted document-term matrix.

Tokens are maximal alphabetic runs (digits, hyphens, and apostrophes split
tokens). Weights use smooth idf, ln((1+n)/(1+df)) + 1, with L2-normalized
rows, so a term present in every document carries idf exactly 1.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .errors import UsageError, ValidationError
from .stopwords import DEFAULT_STOPWORDS

_ALPHA_RUN = re.compile(r"[^\W\d_]+", re.UNICODE)


@dataclass(frozen=True)
class TokenizerConfig:
    lowercase: bool = True
    min_token_len: int = 2
    stopwords: frozenset = DEFAULT_STOPWORDS

    def __post_init__(self):
        if self.min_token_len < 1:
            raise UsageError("min_token_len must be >= 1")


def tokenize(text: str, cfg: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Alphabetic runs, lowercased, length-filtered, stopword-filtered; order kept."""
    tokens = []
    for run in _ALPHA_RUN.findall(text):
        if cfg.lowercase:
            run = run.lower()
        if len(run) < cfg.min_token_len or run in cfg.stopwords:
            continue
        tokens.append(run)
    return tokens


@dataclass
class Vocabulary:
    terms: list[str]
    df: dict[str, int]
    index: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.terms)}

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class DocTermMatrix:
    n_docs: int
    vocab: Vocabulary
    counts: sparse.csr_matrix  # raw term frequencies, int
    weights: sparse.csr_matrix  # tf-idf, L2-normalized rows
    idf: np.ndarray  # smooth idf per term, aligned with vocab.terms

    def to_dict(self) -> dict:
        def triplets(m):
            coo = m.tocoo()
            order = np.lexsort((coo.col, coo.row))
            return {
                "rows": coo.row[order].tolist(),
                "cols": coo.col[order].tolist(),
                "vals": coo.data[order].tolist(),
            }

        return {
            "n_docs": self.n_docs,
            "terms": self.vocab.terms,
            "df": [self.vocab.df[t] for t in self.vocab.terms],
            "idf": self.idf.tolist(),
            "counts": triplets(self.counts),
            "weights": triplets(self.weights),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "DocTermMatrix":
        n_docs = data["n_docs"]
        terms = list(data["terms"])
        vocab = Vocabulary(terms=terms, df=dict(zip(terms, data["df"])))
        shape = (n_docs, len(terms))

        def rebuild(t, dtype):
            return sparse.csr_matrix(
                (t["vals"], (t["rows"], t["cols"])), shape=shape, dtype=dtype
            )

        return cls(
            n_docs=n_docs,
            vocab=vocab,
            counts=rebuild(data["counts"], np.int64),
            weights=rebuild(data["weights"], np.float64),
            idf=np.asarray(data["idf"], dtype=np.float64),
        )

    @classmethod
    def from_json(cls, text: str) -> "DocTermMatrix":
        return cls.from_dict(json.loads(text))


def build_matrix(
    docs: list[list[str]], min_df: int = 2, max_df_ratio: float = 0.95
) -> DocTermMatrix:
    """Assemble counts and L2-normalized TF-IDF weights over tokenized docs.

    Vocabulary keeps terms with df >= min_df and df/n_docs <= max_df_ratio,
    sorted lexicographically.
    """
    if min_df < 1:
        raise UsageError("min_df must be >= 1")
    if not docs:
        raise UsageError("docs must be nonempty")

    n = len(docs)
    df_all: dict[str, int] = {}
    for doc in docs:
        for term in set(doc):
            df_all[term] = df_all.get(term, 0) + 1

    terms = sorted(
        t for t, d in df_all.items() if d >= min_df and d / n <= max_df_ratio
    )
    if not terms:
        raise ValidationError("empty vocabulary after df filtering")
    vocab = Vocabulary(terms=terms, df={t: df_all[t] for t in terms})

    rows, cols, vals = [], [], []
    for d, doc in enumerate(docs):
        tf: dict[int, int] = {}
        for term in doc:
            j = vocab.index.get(term)
            if j is not None:
                tf[j] = tf.get(j, 0) + 1
        for j in sorted(tf):
            rows.append(d)
            cols.append(j)
            vals.append(tf[j])

    counts = sparse.csr_matrix(
        (vals, (rows, cols)), shape=(n, len(terms)), dtype=np.int64
    )

    idf = np.array(
        [math.log((1 + n) / (1 + vocab.df[t])) + 1.0 for t in terms]
    )
    weights = counts.astype(np.float64).multiply(idf).tocsr()
    norms = np.sqrt(np.asarray(weights.multiply(weights).sum(axis=1)).ravel())
    inv = np.divide(1.0, norms, out=np.zeros_like(norms), where=norms > 0)
    weights = sparse.diags(inv).dot(weights).tocsr()
    return DocTermMatrix(n_docs=n, vocab=vocab, counts=counts, weights=weights, idf=idf)


def matrix_summary(m: DocTermMatrix) -> tuple[int, int, float]:
    """(n_docs, n_terms, density) with density = nonzeros / (n_docs * n_terms)."""
    n_terms = len(m.vocab)
    density = m.counts.nnz / (m.n_docs * n_terms) if m.n_docs and n_terms else 0.0
    return m.n_docs, n_terms, density
