import os

from hypothesis import HealthCheck, settings, strategies as st

from cdspile.perm import Permutation

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def one_line(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    return Permutation(1, tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def on_ground(draw, lo=0, max_size=8):
    size = draw(st.integers(1, max_size))
    return Permutation(lo, tuple(draw(st.permutations(range(lo, lo + size)))))


@st.composite
def same_ground_pair(draw, lo=0, max_size=8):
    size = draw(st.integers(1, max_size))
    perm = st.permutations(range(lo, lo + size))
    return Permutation(lo, tuple(draw(perm))), Permutation(lo, tuple(draw(perm)))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
