import time

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "fixed",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fixed")

# criterion key (int, or str for property suites) -> (passed, description, seconds)
ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body calls ``check(n, text)``."""

    class Recorder:
        def __call__(self, number, text: str):
            self.number, self.text = number, text
            self.start = time.perf_counter()
            return self

    rec = Recorder()
    yield rec
    if hasattr(rec, "number"):
        call = getattr(request.node, "rep_call", None)
        passed = call is not None and call.passed
        ACCEPTANCE[rec.number] = (passed, rec.text, time.perf_counter() - rec.start)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (isinstance(k, str), k)):
        ok, text, secs = ACCEPTANCE[key]
        name = f"criterion {key:2d}" if isinstance(key, int) else f"property {key}"
        terminalreporter.write_line(
            f"{name}: {'PASS' if ok else 'FAIL'}  {text}  ({secs:.1f}s)"
        )
