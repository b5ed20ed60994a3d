import pytest

ACCEPTANCE = "test_acceptance.py"


def reduced_words(k, max_len):
    """All reduced words over letters +-1..+-k of length <= max_len."""
    letters = [i for i in range(1, k + 1)] + [-i for i in range(1, k + 1)]
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (x,) for w in frontier for x in letters if not w or w[-1] != -x]
        out += frontier
    return out


@pytest.fixture
def words():
    return reduced_words


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if ACCEPTANCE in rep.nodeid and rep.when == "call" or (status == "error" and ACCEPTANCE in rep.nodeid):
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if status == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines, key=lambda x: int(x[0].split("_")[2])):
            terminalreporter.write_line(f"{verdict}  {name}")
