import pytest
from hypothesis import settings

settings.register_profile("maxmat", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("maxmat")

# criterion label -> (passed, detail), filled in by test_acceptance
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(label: str, ok: bool, detail: str):
        ACCEPTANCE[label] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
