import pytest
from hypothesis import HealthCheck, settings

from weylblocks.algebra_io import resolve_algebra
from weylblocks.pipeline import run_pipeline, scoped_algebra

# fixed seed: every randomized suite replays the same examples
settings.register_profile("repro", derandomize=True, max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")

CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, description): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    n, desc = mark.args
    if report.failed or report.when == "call":
        CRITERIA[n] = (desc, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        desc, ok = CRITERIA[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {desc}")


@pytest.fixture(scope="session")
def sl3():
    g, embeddings = resolve_algebra("sl3")
    return g, embeddings


@pytest.fixture(scope="session")
def sl3_full(sl3):
    g, _ = sl3
    return run_pipeline(g, range(g.dim), "full")


@pytest.fixture(scope="session")
def sl2_scope(sl3):
    g, embeddings = sl3
    sub, gens, scope, emb = scoped_algebra(g, embeddings, "sl2")
    result = run_pipeline(sub, gens, scope, syzygy_cap=6, series_degree=12)
    return sub, gens, emb, result
