import pytest

from halin_ola import run_suite, standard_corpus


@pytest.fixture(scope="session")
def corpus():
    """Wheels 3-8, every caterpillar Halin with n <= 9, 50 seeded randoms."""
    return standard_corpus()


@pytest.fixture(scope="session")
def suite_report(corpus):
    """One exhaustive-oracle pass over the corpus, shared by several tests."""
    import time

    t0 = time.perf_counter()
    report = run_suite(corpus, oracle_limit=10)
    report.elapsed_seconds = time.perf_counter() - t0
    return report
