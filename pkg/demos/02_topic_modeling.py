"""
Topic discovery with TF-IDF, Gibbs-sampled LDA, and STEEP labels
================================================================

"""

from importlib import resources

from foresight import (
    LdaConfig,
    build_doc_term_matrix,
    categorize_topic,
    parse_export,
    fit_lda,
    tokenize,
    top_words,
    topic_trends,
)

data = resources.files("foresight.data").joinpath("sample_corpus.csv").read_bytes()
rs = parse_export(data, "csv")

# Tokenize title+abstract+keywords per record, then build the
# document-term matrix. min_df=2 drops hapax terms.
docs = [tokenize(rec.text()) for rec in rs.records]
dtm = build_doc_term_matrix(docs, min_df=2)
print(f"{dtm.n_docs} docs x {len(dtm.vocab.terms)} terms")

# Collapsed Gibbs sampling. Short chains are fine for a demo; the
# defaults (1000 sweeps) are meant for real corpora.
config = LdaConfig(n_topics=5, iterations=200, burn_in=50, seed=0)
model = fit_lda(dtm, config)

# Top words per topic, each mapped onto the STEEP frame
# (Social, Technological, Economic, Environmental, Political).
for k in range(config.n_topics):
    words = top_words(model, k, n=8)
    cats = categorize_topic(words)
    print(f"topic {k}: {' '.join(words)}  -->  {', '.join(cats)}")

# Topic weight per publication year shows how themes wax and wane.
years, trend = topic_trends(model, rs)
header = "year  " + "  ".join(f"t{k}" for k in range(config.n_topics))
print(header)
for y, row in zip(years, trend):
    print(f"{y}  " + "  ".join(f"{w:.2f}" for w in row))
