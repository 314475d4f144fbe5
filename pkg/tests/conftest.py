import pytest

from securedss import construct_grs, field_new


@pytest.fixture(scope="session")
def gf7():
    return field_new(7)


@pytest.fixture(scope="session")
def gf2():
    return field_new(2)


@pytest.fixture(scope="session")
def worked_example(gf7):
    """GF(7), n=6, two files, two colluders, points 1..6."""
    return construct_grs(gf7, 6, 2, 2, [1, 2, 3, 4, 5, 6])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, title, detail = RESULTS[num]
        line = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
