import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from foresight.errors import UsageError, ValidationError
from foresight.text import (
    DocTermMatrix,
    TokenizerConfig,
    build_matrix,
    matrix_summary,
    tokenize,
)


class TestTokenize:
    def test_lowercase_and_order(self):
        assert tokenize("Solar Energy beats solar panels") == [
            "solar", "energy", "beats", "solar", "panels",
        ]

    def test_digits_and_punctuation_split_tokens(self):
        assert tokenize("COVID-19 e-learning 3D co2") == ["covid", "learning", "co"]

    def test_short_tokens_dropped(self):
        assert tokenize("a an AI x models") == ["ai", "models"]

    def test_stopwords_dropped(self):
        assert tokenize("the market and the price of energy") == [
            "market", "price", "energy",
        ]

    def test_unicode_letters_kept(self):
        assert tokenize("énergie renouvelable") == ["énergie", "renouvelable"]

    def test_empty_text(self):
        assert tokenize("") == []
        assert tokenize("  12 34 !! ") == []

    def test_custom_config(self):
        cfg = TokenizerConfig(lowercase=False, min_token_len=1, stopwords=frozenset())
        assert tokenize("The AI", cfg) == ["The", "AI"]

    def test_min_token_len_validated(self):
        with pytest.raises(UsageError, match="min_token_len"):
            TokenizerConfig(min_token_len=0)


DOCS = [
    ["ai", "policy"],
    ["ai", "ethics"],
]


class TestBuildMatrix:
    def test_two_doc_example(self):
        dtm = build_matrix(DOCS, min_df=1, max_df_ratio=1.0)
        assert dtm.vocab.terms == ["ai", "ethics", "policy"]
        assert dtm.vocab.df == {"ai": 2, "ethics": 1, "policy": 1}
        w = dtm.weights.toarray()
        np.testing.assert_allclose(
            w[0], [0.579739, 0.0, 0.814802], rtol=0, atol=1e-6
        )
        np.testing.assert_allclose(
            w[1], [0.579739, 0.814802, 0.0], rtol=0, atol=1e-6
        )

    def test_idf_values(self):
        dtm = build_matrix(DOCS, min_df=1, max_df_ratio=1.0)
        # a term in every document carries smooth idf exactly 1
        assert dtm.idf[dtm.vocab.index["ai"]] == 1.0
        assert dtm.idf[dtm.vocab.index["policy"]] == pytest.approx(
            1.4054651081081644, abs=1e-12
        )
        assert dtm.idf[dtm.vocab.index["ethics"]] == dtm.idf[dtm.vocab.index["policy"]]

    def test_counts_are_raw_frequencies(self):
        dtm = build_matrix([["ai", "ai", "data"], ["data"]], min_df=1, max_df_ratio=1.0)
        assert dtm.counts.toarray().tolist() == [[2, 1], [0, 1]]

    def test_min_df_filters(self):
        dtm = build_matrix([["ai", "rare"], ["ai"]], min_df=2, max_df_ratio=1.0)
        assert dtm.vocab.terms == ["ai"]

    def test_max_df_ratio_filters(self):
        dtm = build_matrix([["ai", "x"], ["ai", "x"], ["ai"]], min_df=1, max_df_ratio=0.7)
        assert dtm.vocab.terms == ["x"]

    def test_rows_unit_norm_or_zero(self):
        dtm = build_matrix([["ai", "data"], ["ai"], ["nothing", "matches"]],
                           min_df=2, max_df_ratio=1.0)
        norms = np.sqrt(
            np.asarray(dtm.weights.multiply(dtm.weights).sum(axis=1)).ravel()
        )
        assert norms[0] == pytest.approx(1.0)
        assert norms[1] == pytest.approx(1.0)
        assert norms[2] == 0.0

    def test_empty_vocabulary_rejected(self):
        with pytest.raises(ValidationError, match="empty vocabulary"):
            build_matrix([["solo"], ["other"]], min_df=2)

    def test_bad_min_df_rejected(self):
        with pytest.raises(UsageError, match="min_df"):
            build_matrix(DOCS, min_df=0)

    def test_empty_docs_rejected(self):
        with pytest.raises(UsageError, match="nonempty"):
            build_matrix([])

    def test_terms_sorted(self):
        dtm = build_matrix([["zebra", "apple"], ["zebra", "apple"]],
                           min_df=1, max_df_ratio=1.0)
        assert dtm.vocab.terms == ["apple", "zebra"]


class TestSerialization:
    def test_round_trip(self):
        dtm = build_matrix([["ai", "ai", "data"], ["data", "grid"]],
                           min_df=1, max_df_ratio=1.0)
        again = DocTermMatrix.from_json(dtm.to_json())
        assert again.n_docs == dtm.n_docs
        assert again.vocab.terms == dtm.vocab.terms
        assert again.vocab.df == dtm.vocab.df
        assert (again.counts != dtm.counts).nnz == 0
        np.testing.assert_array_equal(
            again.weights.toarray(), dtm.weights.toarray()
        )

    def test_json_stable(self):
        dtm = build_matrix(DOCS, min_df=1, max_df_ratio=1.0)
        assert dtm.to_json() == dtm.to_json()


class TestMatrixSummary:
    def test_density(self):
        dtm = build_matrix([["ai", "ai", "data"], ["data", "grid"]],
                           min_df=1, max_df_ratio=1.0)
        n_docs, n_terms, density = matrix_summary(dtm)
        assert (n_docs, n_terms) == (2, 3)
        assert density == pytest.approx(4 / 6)

    def test_empty_row_contributes_nothing(self):
        dtm = build_matrix([["ai"], ["ai"], ["unseen"]], min_df=2, max_df_ratio=1.0)
        _, _, density = matrix_summary(dtm)
        assert density == pytest.approx(2 / 3)


@st.composite
def token_corpora(draw):
    vocab = ["ai", "data", "grid", "market", "policy", "solar"]
    n_docs = draw(st.integers(2, 6))
    docs = [
        draw(st.lists(st.sampled_from(vocab), min_size=1, max_size=12))
        for _ in range(n_docs)
    ]
    return docs


class TestWeightProperties:
    @settings(max_examples=60, deadline=None)
    @given(docs=token_corpora(), m=st.integers(2, 4))
    def test_within_doc_scaling_invariance(self, docs, m):
        # repeating every token m times scales tf uniformly per row, which
        # the L2 normalization cancels; df is unchanged
        base = build_matrix(docs, min_df=1, max_df_ratio=1.0)
        scaled = build_matrix([doc * m for doc in docs], min_df=1, max_df_ratio=1.0)
        assert scaled.vocab.terms == base.vocab.terms
        np.testing.assert_allclose(
            scaled.weights.toarray(), base.weights.toarray(), atol=1e-12
        )

    @settings(max_examples=60, deadline=None)
    @given(docs=token_corpora())
    def test_rows_normalized(self, docs):
        dtm = build_matrix(docs, min_df=1, max_df_ratio=1.0)
        norms = np.linalg.norm(dtm.weights.toarray(), axis=1)
        np.testing.assert_allclose(norms, 1.0, atol=1e-12)

    @settings(max_examples=60, deadline=None)
    @given(docs=token_corpora())
    def test_weights_nonnegative_and_aligned_with_counts(self, docs):
        dtm = build_matrix(docs, min_df=1, max_df_ratio=1.0)
        w = dtm.weights.toarray()
        c = dtm.counts.toarray()
        assert (w >= 0).all()
        assert ((w > 0) == (c > 0)).all()
