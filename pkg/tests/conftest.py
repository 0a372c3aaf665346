from __future__ import annotations

from fractions import Fraction

import pytest

from mcglantern.curves import CurveDiagram
from mcglantern.polygon import standard_surface, surface_from_pairs


@pytest.fixture
def torus():
    return surface_from_pairs(4, [(0, 2), (1, 3)])


@pytest.fixture
def s3():
    return standard_surface(3)


def chord_curve(*pts):
    return CurveDiagram(tuple((s, Fraction(t)) for s, t in pts))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
