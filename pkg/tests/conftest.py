from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from mostow_hybrids.mostow import admissible_pairs, build_group

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

PAIRS = [(mp.p, mp.t) for mp in admissible_pairs()]
PAIR_IDS = [f"{p}-{t}" for p, t in PAIRS]

# lines printed by tests/test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=PAIRS, ids=PAIR_IDS)
def group(request):
    p, t = request.param
    return build_group(p, t)


def G(p, t):
    return build_group(p, Fraction(t))


def to_np(m):
    """Complex numpy array of an exact matrix or vector (test oracle only)."""
    import numpy as np

    if isinstance(m[0], tuple):
        return np.array([[complex(c.to_complex()) for c in row] for row in m])
    return np.array([complex(c.to_complex()) for c in m])


LETTERS = ("R1", "R2", "R3", "J", "R1^-1", "R2^-1", "R3^-1", "J^-1")


def words(min_size=1, max_size=6):
    """Hypothesis strategy: words in the generators, as text."""
    from hypothesis import strategies as st

    return st.lists(st.sampled_from(LETTERS), min_size=min_size, max_size=max_size).map(" ".join)
