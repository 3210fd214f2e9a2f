import numpy as np
import pytest

from lpdec.codes import builtin_code

EXAMPLE_R = np.array([0.798337, 1.421758, -1.240177, -0.771128, -1.745193, 0.554868, 0.983861, -0.404989])


@pytest.fixture(scope="session")
def paper_code():
    return builtin_code("hamming_8_4_paper")


@pytest.fixture(scope="session")
def paper_r():
    return EXAMPLE_R.copy()


@pytest.fixture(scope="session")
def bch15():
    return builtin_code("bch_15_7")


@pytest.fixture(scope="session")
def ham7():
    return builtin_code("hamming_7_4")


def all_words(n):
    t = np.arange(1 << n)
    return ((t[:, None] >> np.arange(n - 1, -1, -1)) & 1).astype(np.uint8)


def brute_codewords(H):
    """Null space by filtering all 2^n words."""
    H = np.asarray(H, dtype=np.int64)
    words = all_words(H.shape[1])
    return words[~((words.astype(np.int64) @ H.T) % 2).any(axis=1)]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
