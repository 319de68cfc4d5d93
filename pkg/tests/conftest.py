import pytest

from optikit.laws import Corpus, run_suites


@pytest.fixture(scope="session")
def corpus():
    return Corpus()


@pytest.fixture(scope="session")
def law_results(corpus):
    """All law results from one shared run, keyed by (suite, law)."""
    reports = run_suites(corpus)
    return {(r.suite, r.law): r for rep in reports for r in rep.results}
