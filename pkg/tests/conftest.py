import pytest

from foresight.ingest import QueryMeta, parse_export
from foresight.matrix import FactorAssessment, build_matrix
from foresight.scenarios import builtin_scenarios
from foresight.store import ProjectStore
from foresight.text import TokenizerConfig, build_matrix as build_dtm, tokenize
from foresight.topics import LdaConfig, fit_lda

_ACCEPTANCE: list = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("acceptance"):
        label = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((label, rep.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE:
        terminalreporter.write_sep("-", "acceptance criteria")
        for label, ok in _ACCEPTANCE:
            terminalreporter.write_line(("PASS " if ok else "FAIL ") + label)


SMALL_CSV = b"""Title,Abstract,Author Keywords,Year,Source title
AI tutors in schools,Adaptive learning systems personalize education for students.,ai; education,2020,EdTech Journal
Solar grid storage,Battery storage smooths renewable energy supply on the grid.,energy; solar,2021,Energy Reports
Fintech lending,Digital platforms reshape credit markets and financial access.,fintech; credit,2021,Finance Letters
Clinical decision support,Machine learning models assist clinical diagnosis workflows.,health; ml,2022,Medical AI
Wind forecasting,Neural networks forecast wind power output for grid operators.,energy; ml,2022,Energy Reports
"""


@pytest.fixture()
def small_recordset():
    return parse_export(SMALL_CSV, "csv", provenance=QueryMeta(query_string="q"))


@pytest.fixture()
def project(tmp_path, monkeypatch):
    """Fresh project rooted at a temp dir, with cwd moved there for CLI runs."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("FORESIGHT_HOME", raising=False)
    return ProjectStore(tmp_path)


@pytest.fixture(scope="session")
def fitted_project(tmp_path_factory):
    """A project with all pipeline artifacts built once from the small corpus."""
    root = tmp_path_factory.mktemp("fitted")
    store = ProjectStore(root)
    rs = parse_export(SMALL_CSV, "csv")
    store.save_corpus(rs)
    docs = [tokenize(rec.text(), TokenizerConfig()) for rec in rs.records]
    dtm = build_dtm(docs, min_df=1, max_df_ratio=1.0)
    store.save_dtm(dtm)
    model = fit_lda(dtm.counts, LdaConfig(n_topics=2, iterations=30, burn_in=10, seed=0),
                    terms=dtm.vocab.terms)
    store.save_lda(model, list(range(dtm.n_docs)))
    from foresight.matrix import Level

    factors = [
        FactorAssessment(name="AI & Digital Education", impact=Level.High, uncertainty=Level.High),
        FactorAssessment(name="Healthcare Systems & Public Health", impact=Level.High, uncertainty=Level.Medium),
    ]
    store.save_matrix(build_matrix(factors))
    store.save_scenarios(builtin_scenarios())
    return store
