from __future__ import annotations

from pathlib import Path

from mcglantern.curves import parallel_copy
from mcglantern.polygon import standard_surface
from mcglantern.rotation import RotationMap, apply
from mcglantern.svg import render_svg
from mcglantern.theorem1 import standard_curve

DATA = Path(__file__).parent / "data"


def standard_curve_svg() -> str:
    return render_svg(standard_surface(3), [standard_curve(3)], title="genus 3")


def witness_svg() -> str:
    s3 = standard_surface(3)
    r = RotationMap(s3, 2)
    c = standard_curve(3)
    return render_svg(s3, [c, apply(RotationMap(s3, 4), c)], r)


def test_byte_stable():
    assert standard_curve_svg() == standard_curve_svg()


def test_golden_standard_curve():
    assert standard_curve_svg() == (DATA / "standard_curve_g3.svg").read_text()


def test_golden_witness_pair():
    assert witness_svg() == (DATA / "witness_g3_d7.svg").read_text()


def test_polygon_only():
    svg = render_svg(standard_surface(1), [])
    assert 'class="curve"' not in svg
    assert svg.count('class="vertex"') == 6
    assert svg.count('class="glue"') == 6


def test_curve_styles_differ():
    s3 = standard_surface(3)
    c = standard_curve(3)
    svg = render_svg(s3, [c, parallel_copy(s3, c)])
    assert 'stroke="#c0392b"' in svg and 'stroke="#2471a3"' in svg
    assert "stroke-dasharray" in svg
