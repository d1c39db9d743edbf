import pytest

_ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary lines."""

    def record(number: int, ok: bool, message: str) -> None:
        _ACCEPTANCE.setdefault(number, []).append((ok, message))
        assert ok, message

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        results = _ACCEPTANCE[number]
        ok = all(r[0] for r in results)
        detail = "; ".join(msg for _, msg in results)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} -- {detail}")
