import pytest
from hypothesis import HealthCheck, settings

from coradical.corpus import corpus, theorem_corpus
from coradical.exactla import QQ

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def theorem_items():
    return theorem_corpus(QQ)


@pytest.fixture(scope="session")
def all_items():
    return corpus(QQ)


@pytest.fixture(scope="session")
def by_name(all_items):
    return {it.name: it.coalgebra for it in all_items}


_ACCEPTANCE: list = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collects one (criterion, passed, detail) line per acceptance criterion."""
    def log(n, passed, detail=""):
        line = f"criterion {n}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
        print(line)
        _ACCEPTANCE.append(line)
    return log


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
