from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gl3bethe.scalars import is_generic

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line; the terminal summary prints them all."""

    def record(name: str, passed: bool, detail: str = "") -> None:
        _CRITERIA[name] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda k: [int(p) if p.isdigit() else p for p in k.replace(".", " ").split()]):
        passed, detail = _CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip())


def rationals(lo=-60, hi=60, max_den=9):
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_den)


def generic_lists(size, c=Fraction(1)):
    return st.lists(rationals(), min_size=size, max_size=size).filter(lambda xs: is_generic(xs, c))
