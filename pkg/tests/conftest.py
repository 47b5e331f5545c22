import pytest

# criterion number -> (title, passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion.

    Usage: ``with criterion(3, "identity suite") as note: ...``; ``note`` collects
    a detail string shown in the summary.
    """
    class _Rec:
        def __init__(self, num, title):
            self.num, self.title, self.details = num, title, []

        def __call__(self, text):
            self.details.append(str(text))

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            detail = "; ".join(self.details)
            if exc is not None:
                detail = (detail + "; " if detail else "") + f"{exc_type.__name__}: {exc}"
            ACCEPTANCE[self.num] = (self.title, exc is None, detail)
            return False

    return _Rec


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
