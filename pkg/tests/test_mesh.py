"""Layered mesh generation: counts, node accuracy, export, validation."""

import json
import math
from fractions import Fraction as F

import pytest

from conicoffset.conics import ConicSpec, offset_poly_closed_form
from conicoffset.curve import eval_poly, max_abs_coeff
from conicoffset.errors import SpecError
from conicoffset.mesh import (MeshSpec, export_mesh, generate_mesh, load_mesh,
                              mesh_figure)

ELL42 = ConicSpec.ellipse(4, 2)
STATIONS = (3.75, 3.0, 2.0, 1.0, 0.0, -1.0, -2.0, -3.0, -3.75)


@pytest.fixture(scope="module")
def reference_mesh():
    spec = MeshSpec(ellipse=ELL42, offsets=(0.2, 0.4, 0.6), y_stations=STATIONS)
    return spec, generate_mesh(spec)


def test_reference_instance_counts(reference_mesh):
    spec, mesh = reference_mesh
    assert (mesh.rows, mesh.cols) == (7, 20)
    assert len(mesh.flat_nodes()) == 140
    assert len(mesh.quad4) == 120
    assert len(mesh.quad9) == 30


def test_rows_formula_minimal():
    spec = MeshSpec(ellipse=ELL42, offsets=(0.2,), y_stations=(0.0,))
    mesh = generate_mesh(spec)
    assert mesh.rows == 3
    assert mesh.cols == 4


def test_nodes_on_layers(reference_mesh):
    spec, mesh = reference_mesh
    signed = [-0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6]
    for i, row in enumerate(mesh.nodes):
        s = signed[i]
        if s == 0.0:
            worst = max(abs((p.x / 2.0) ** 2 + (p.y / 4.0) ** 2 - 1) for p in row)
        else:
            g = offset_poly_closed_form(ELL42, F(repr(abs(s)))).g
            scale = max_abs_coeff(g)
            worst = max(abs(eval_poly(g, (p.x, p.y))) / scale for p in row)
        assert worst <= 1e-8


def test_normal_distance_law(reference_mesh):
    # independent oracle: nearest-point projection onto the ellipse
    def distance_to_ellipse(px, py, a=4.0, b=2.0):
        t = math.atan2(py / a, px / b) if (px, py) != (0.0, 0.0) else 0.0
        for _ in range(100):
            x, y = b * math.cos(t), a * math.sin(t)
            dx, dy = -b * math.sin(t), a * math.cos(t)
            f = (x - px) * dx + (y - py) * dy
            fp = dx * dx + dy * dy - (x - px) * x - (y - py) * y
            step = f / fp
            t -= step
            if abs(step) < 1e-15:
                break
        return math.hypot(px - b * math.cos(t), py - a * math.sin(t))

    spec, mesh = reference_mesh
    signed = [-0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6]
    for i, row in enumerate(mesh.nodes):
        for p in row:
            d = distance_to_ellipse(p.x, p.y)
            assert abs(d - abs(signed[i])) <= 1e-8


def test_no_duplicate_nodes(reference_mesh):
    _, mesh = reference_mesh
    for row in mesh.nodes:
        for i in range(len(row)):
            for j in range(i + 1, len(row)):
                assert math.hypot(row[i].x - row[j].x,
                                  row[i].y - row[j].y) > 1e-9


def test_element_indices(reference_mesh):
    _, mesh = reference_mesh
    n = mesh.rows * mesh.cols
    for e in mesh.quad4:
        assert len(set(e)) == 4 and all(0 <= i < n for i in e)
    for e in mesh.quad9:
        assert len(set(e)) == 9 and all(0 <= i < n for i in e)
    # quad9 blocks tile the quad4 cells twice over
    assert len(mesh.quad4) == (mesh.rows - 1) * mesh.cols
    assert len(mesh.quad9) == (mesh.rows - 1) // 2 * (mesh.cols // 2)


def test_element_orientation(reference_mesh):
    # consistently counter-clockwise corners (positive Jacobian for FEM use)
    _, mesh = reference_mesh
    flat = mesh.flat_nodes()

    def signed_area(idxs):
        pts = [flat[i] for i in idxs]
        return sum(a.x * b.y - b.x * a.y
                   for a, b in zip(pts, pts[1:] + pts[:1])) / 2

    assert all(signed_area(e) > 0 for e in mesh.quad4)
    assert all(signed_area(e[:4]) > 0 for e in mesh.quad9)
    # quad9 edge midpoints sit between their corners
    for e in mesh.quad9:
        corners = [flat[i] for i in e[:4]]
        mids = [flat[i] for i in e[4:8]]
        for k, m in enumerate(mids):
            a, b = corners[k], corners[(k + 1) % 4]
            assert math.hypot(m.x - (a.x + b.x) / 2, m.y - (a.y + b.y) / 2) \
                <= 0.35 * math.hypot(b.x - a.x, b.y - a.y)


def test_export_roundtrip(reference_mesh, tmp_path):
    _, mesh = reference_mesh
    path = tmp_path / "mesh.json"
    text = export_mesh(mesh, path=str(path))
    doc = json.loads(text)
    assert doc["rows"] == 7 and doc["cols"] == 20
    assert len(doc["nodes"]) == 140
    assert len(doc["quad4"]) == 120 and len(doc["quad9"]) == 30
    again = load_mesh(str(path))
    assert export_mesh(again) == text  # bit-identical round trip
    from_text = load_mesh(text)  # JSON-string form is accepted too
    assert export_mesh(from_text) == text


def test_spec_validation():
    with pytest.raises(SpecError):
        MeshSpec(ellipse=ConicSpec.parabola(F(1, 3)), offsets=(0.2,),
                 y_stations=(0.0,))
    with pytest.raises(SpecError):  # offset at r_crit rejected
        MeshSpec(ellipse=ELL42, offsets=(0.2, 1.0), y_stations=(0.0,))
    with pytest.raises(SpecError):  # not ascending
        MeshSpec(ellipse=ELL42, offsets=(0.4, 0.2), y_stations=(0.0,))
    with pytest.raises(SpecError):  # station outside (-a, a)
        MeshSpec(ellipse=ELL42, offsets=(0.2,), y_stations=(4.0,))
    with pytest.raises(SpecError):  # stations must descend
        MeshSpec(ellipse=ELL42, offsets=(0.2,), y_stations=(-1.0, 1.0))
    with pytest.raises(SpecError):
        MeshSpec(ellipse=ELL42, offsets=(), y_stations=(0.0,))


def test_determinism(reference_mesh):
    spec, mesh = reference_mesh
    again = generate_mesh(spec)
    assert export_mesh(again) == export_mesh(mesh)


def test_mesh_figure(reference_mesh, tmp_path):
    spec, mesh = reference_mesh
    out = tmp_path / "mesh.svg"
    svg = mesh_figure(spec, mesh, resolution=64, path=str(out))
    assert svg.count("<circle") == 140
    assert out.read_text() == svg
