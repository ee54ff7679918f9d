import pytest

from linbound import BinaryMatrix, ConstructionSpec, LinearCode, build_check_matrix

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture(scope="session")
def hamming7():
    return build_check_matrix(ConstructionSpec(4, 7))


@pytest.fixture(scope="session")
def hamming15():
    return build_check_matrix(ConstructionSpec(11, 15))


@pytest.fixture(scope="session")
def repetition5():
    # x_i + x_4 = 0 for i < 4
    return LinearCode.from_check(BinaryMatrix.from_text("10001\n01001\n00101\n00011"))
