import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import settings, strategies as st

from cflp import FracPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

TEST_ALPHAS = [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 5)]
ODD_RECIPROCAL = [Fraction(1), Fraction(1, 3), Fraction(1, 5)]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
alphas = st.sampled_from(TEST_ALPHAS + [Fraction(3, 5), Fraction(3, 4)])
exponents = st.integers(min_value=0, max_value=24).map(lambda k: Fraction(k, 6))


@st.composite
def fracpolys(draw, max_terms=5):
    pairs = draw(st.lists(st.tuples(exponents, small_fractions), max_size=max_terms))
    return FracPoly(pairs)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1].rstrip("."))):
        terminalreporter.write_line(line)
