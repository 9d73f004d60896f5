"""Bundled default English stopword list.

A compact general-purpose list: determiners, pronouns, prepositions,
conjunctions, auxiliaries, and a few high-frequency adverbs. Callers can
replace it entirely via TokenizerConfig or a one-word-per-line file.
"""

DEFAULT_STOPWORDS = frozenset(
    """
    a about above after again against all also am an and any are as at
    be because been before being below between body both but by
    can cannot could
    did do does doing down during
    each either
    few for from further
    had has have having he her here hers herself him himself his how however
    i if in into is it its itself
    just
    may me might more most must my myself
    no nor not now
    of off on once only or other our ours ourselves out over own
    per
    said same she should since so some such
    than that the their theirs them themselves then there these they this
    those through thus to too
    under until up upon us
    very via
    was we were what when where whether which while who whom why will with
    within without would
    you your yours yourself yourselves
    """.split()
)


def load_stopword_file(path) -> frozenset:
    """One word per line, UTF-8; blank lines and leading/trailing space ignored."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip().lower() for line in fh if line.strip())
