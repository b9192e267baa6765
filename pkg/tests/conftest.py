import pytest

from chowfactor.factorization import default_cache


@pytest.fixture(autouse=True)
def _isolated_cache(monkeypatch, tmp_path):
    monkeypatch.setenv("CHOWFACTOR_CACHE", str(tmp_path / "cache"))
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
    yield
    default_cache.clear()


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_ac" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    import test_acceptance as acc

    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance):
        doc = (getattr(acc, name).__doc__ or name).strip()
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {doc}")
