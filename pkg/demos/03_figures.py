"""Reproduce the classic offset-curve figures as SVG files.

Each figure shows the base conic (dashed), both parallel lines (solid), and
the singular points of the offset variety as labeled markers.  Files land in
the current directory.
"""

from fractions import Fraction as F

from conicoffset import ConicSpec, offset_figure

CASES = [
    ("parabola_subcritical.svg", ConicSpec.parabola(F(1, 3)), F(1, 4), None),
    ("parabola_critical.svg", ConicSpec.parabola(F(1, 3)), F(2, 3), None),
    ("parabola_supercritical.svg", ConicSpec.parabola(F(1, 3)), F(3, 2),
     (-3, 3, -2, 4)),
    ("ellipse_supercritical.svg", ConicSpec.ellipse(3, F(3, 2)), F(4, 3),
     (-3.2, 3.2, -4.5, 4.5)),
    ("hyperbola_supercritical.svg", ConicSpec.hyperbola(F(3, 2), 1), F(4, 3),
     (-4, 4, -5, 5)),
]

for name, conic, r, bbox in CASES:
    svg = offset_figure(conic, r, bbox=bbox, resolution=384, path=name)
    markers = svg.count("<circle")
    print(f"{name}: {len(svg)} bytes, {markers} singular point(s) marked")
